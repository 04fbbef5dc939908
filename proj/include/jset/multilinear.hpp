#pragma once

// The multilinear component gamma_n of the free associative ring
// Z<x_1,...,x_n>: integer combinations of the monomials
// x_{sigma(1)} ... x_{sigma(n)}, keyed by sigma.
//
// Left-normed brackets [x_{s(1)},...,x_{s(n)}] are expanded two independent
// ways: by the recursion [P, x] = P x - x P, and by the signed shuffle sum
//
//   sum_{i=0}^{n-1} sum_{(a,b) in Sh^1(n-i,i)} (-1)^i
//       x_{s(b(i))} ... x_{s(b(1))} x_{s(a(1))} ... x_{s(a(n-i)))}.

#include "jset/families.hpp"
#include "jset/gf2_matrix.hpp"
#include "jset/integer.hpp"
#include "jset/permutation.hpp"

#include <map>
#include <vector>

namespace jset {

class MultilinearPoly {
public:
  using TermMap = std::map<Permutation, Integer>;

  explicit MultilinearPoly(std::size_t degree = 1) : degree_(degree) {
    detail::require(degree >= 1, "polynomial degree must be positive");
  }

  std::size_t degree() const { return degree_; }
  const TermMap &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Permutation &sigma) const {
    auto it = terms_.find(sigma);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Permutation &sigma, const Integer &coeff) {
    detail::require(sigma.degree() == degree_, "monomial degree mismatch");
    if (coeff.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(sigma, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  MultilinearPoly &operator+=(const MultilinearPoly &other) {
    detail::require(degree_ == other.degree_, "degree mismatch in polynomial addition");
    for (const auto &[sigma, c] : other.terms_)
      add_term(sigma, c);
    return *this;
  }

  MultilinearPoly &operator-=(const MultilinearPoly &other) {
    detail::require(degree_ == other.degree_, "degree mismatch in polynomial subtraction");
    for (const auto &[sigma, c] : other.terms_)
      add_term(sigma, -c);
    return *this;
  }

  MultilinearPoly &operator*=(const Integer &k) {
    if (k.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &[sigma, c] : terms_)
      c *= k;
    return *this;
  }

  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly &b) { return a += b; }
  friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly &b) { return a -= b; }
  friend MultilinearPoly operator-(MultilinearPoly a) { return a *= Integer(-1); }
  friend MultilinearPoly operator*(MultilinearPoly a, const Integer &k) { return a *= k; }
  friend MultilinearPoly operator*(const Integer &k, MultilinearPoly a) { return a *= k; }

  friend bool operator==(const MultilinearPoly &, const MultilinearPoly &) = default;

private:
  std::size_t degree_;
  TermMap terms_;
};

inline MultilinearPoly add(const MultilinearPoly &a, const MultilinearPoly &b) { return a + b; }
inline MultilinearPoly negate(const MultilinearPoly &p) { return -p; }
inline MultilinearPoly scale(const MultilinearPoly &p, const Integer &k) { return p * k; }

inline MultilinearPoly monomial(const Permutation &sigma, const Integer &coeff = 1) {
  MultilinearPoly p(sigma.degree());
  p.add_term(sigma, coeff);
  return p;
}

/// Sum(T): every monomial of T with coefficient 1.
inline MultilinearPoly sum_of_set(const PermSet &T) {
  MultilinearPoly p(T.degree());
  for (const auto &sigma : T)
    p.add_term(sigma, 1);
  return p;
}

namespace detail {

// Integer combination of words in the letters 1..n (not necessarily of full
// length); the working type for bracket expansions.
using WordPoly = std::map<std::vector<int>, Integer>;

inline void add_word(WordPoly &p, std::vector<int> w, const Integer &c) {
  auto [it, inserted] = p.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      p.erase(it);
  }
}

inline WordPoly product(const WordPoly &a, const WordPoly &b) {
  WordPoly out;
  for (const auto &[wa, ca] : a)
    for (const auto &[wb, cb] : b) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_word(out, std::move(w), ca * cb);
    }
  return out;
}

inline WordPoly commutator(const WordPoly &a, const WordPoly &b) {
  WordPoly out = product(a, b);
  for (const auto &[w, c] : product(b, a))
    add_word(out, w, -c);
  return out;
}

/// [x_{l_1}, ..., x_{l_m}] by the left-normed recursion.
inline WordPoly left_normed(const std::vector<int> &letters) {
  require(!letters.empty(), "empty bracket");
  WordPoly p;
  p[{letters.front()}] = 1;
  for (std::size_t i = 1; i < letters.size(); ++i)
    p = commutator(p, WordPoly{{{letters[i]}, Integer(1)}});
  return p;
}

inline MultilinearPoly to_multilinear(const WordPoly &p, std::size_t n) {
  MultilinearPoly out(n);
  for (const auto &[w, c] : p) {
    require(w.size() == n, "word is not multilinear of the expected degree");
    out.add_term(Permutation::from_one_line(w), c);
  }
  return out;
}

} // namespace detail

/// [x_{sigma(1)}, ..., x_{sigma(n)}] expanded by the recursion
/// [a_1..a_n] = [[a_1..a_{n-1}], a_n].
inline MultilinearPoly expand_bracket_recursive(const Permutation &sigma) {
  return detail::to_multilinear(detail::left_normed(sigma.one_line()), sigma.degree());
}

/// [x_{sigma(1)}, ..., x_{sigma(n)}] expanded by the signed shuffle sum.
inline MultilinearPoly expand_bracket_shuffle(const Permutation &sigma) {
  const std::size_t n = sigma.degree();
  MultilinearPoly out(n);
  std::vector<int> word(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer sign = i % 2 == 0 ? 1 : -1;
    for (const auto &sh : enumerate_shuffles_first(n - i, i)) {
      std::size_t pos = 0;
      for (std::size_t j = i; j >= 1; --j)
        word[pos++] = sigma(sh.beta[j - 1]);
      for (int a : sh.alpha)
        word[pos++] = sigma(a);
      out.add_term(Permutation::from_one_line(word), sign);
    }
  }
  return out;
}

/// beta_n: the linear extension of sigma -> [x_{sigma(1)}, ..., x_{sigma(n)}].
inline MultilinearPoly beta(const MultilinearPoly &p) {
  MultilinearPoly out(p.degree());
  for (const auto &[sigma, c] : p.terms())
    out += expand_bracket_recursive(sigma) * c;
  return out;
}

/// [[x_{left...}], [x_{right...}]] expanded recursively; the letters of both
/// blocks together must be exactly 1..left.size()+right.size().
inline MultilinearPoly bracket_of_blocks(const std::vector<int> &left,
                                         const std::vector<int> &right) {
  const auto p = detail::commutator(detail::left_normed(left), detail::left_normed(right));
  return detail::to_multilinear(p, left.size() + right.size());
}

/// [[x_1, ..., x_k], [x_{k+1}, ..., x_{k+l}]].
inline MultilinearPoly bracket_of_two_blocks(std::size_t k, std::size_t l) {
  detail::require(k >= 1 && l >= 1, "bracket_of_two_blocks: k and l must be positive");
  std::vector<int> left, right;
  for (std::size_t i = 1; i <= k; ++i)
    left.push_back(static_cast<int>(i));
  for (std::size_t i = k + 1; i <= k + l; ++i)
    right.push_back(static_cast<int>(i));
  return bracket_of_blocks(left, right);
}

/// theta_{j,n} = x_1 ... x_n + x_j [x_1, ..., x_{j-1}] x_{j+1} ... x_n.
inline MultilinearPoly theta(std::size_t j, std::size_t n) {
  detail::require(j >= 2 && j <= n, "theta: need 2 <= j <= n");
  MultilinearPoly out = monomial(Permutation::identity(n));
  std::vector<int> inner;
  for (std::size_t i = 1; i < j; ++i)
    inner.push_back(static_cast<int>(i));
  for (const auto &[w, c] : detail::left_normed(inner)) {
    std::vector<int> word{static_cast<int>(j)};
    word.insert(word.end(), w.begin(), w.end());
    for (std::size_t i = j + 1; i <= n; ++i)
      word.push_back(static_cast<int>(i));
    out.add_term(Permutation::from_one_line(word), c);
  }
  return out;
}

/// Coefficient parities in canonical (lexicographic) monomial order.
inline BitVector reduce_mod2(const MultilinearPoly &p) {
  BitVector v(factorial(p.degree()));
  for (const auto &[sigma, c] : p.terms())
    if (mpz_odd_p(c.backend().data()))
      v.set(lex_rank(sigma));
  return v;
}

/// Dense coefficient vector in canonical monomial order.
inline std::vector<Integer> to_int_vector(const MultilinearPoly &p) {
  std::vector<Integer> v(factorial(p.degree()));
  for (const auto &[sigma, c] : p.terms())
    v[lex_rank(sigma)] = c;
  return v;
}

inline MultilinearPoly from_int_vector(std::size_t n, const std::vector<Integer> &v) {
  detail::require(v.size() == factorial(n), "from_int_vector: length must be n!");
  MultilinearPoly p(n);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      p.add_term(lex_unrank(n, i), v[i]);
  return p;
}

/// Indicator vector of T in canonical order; equals reduce_mod2(Sum(T)).
inline BitVector indicator(const PermSet &T) {
  BitVector v(factorial(T.degree()));
  for (const auto &sigma : T)
    v.set(lex_rank(sigma));
  return v;
}

} // namespace jset
