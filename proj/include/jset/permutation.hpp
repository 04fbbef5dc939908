#pragma once

// Permutations of {1,...,n}, shuffles and finite permutation sets.
//
// Composition convention: (sigma * tau)(i) = sigma(tau(i)), the right factor
// is applied first. With this convention the monomial attached to sigma is
// x_{sigma(1)} ... x_{sigma(n)} and T * (1,2) swaps the first two letters of
// every monomial of T.
//
// Values are 1-based at the interface and stored 0-based.

#include "jset/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace jset {

class Permutation {
public:
  static constexpr std::size_t max_degree = 255;

  /// The identity of S_1.
  Permutation() : image_(1, 0) {}

  static Permutation identity(std::size_t n) {
    detail::require(n >= 1 && n <= max_degree, "permutation degree out of range");
    Permutation p;
    p.image_.resize(n);
    std::iota(p.image_.begin(), p.image_.end(), std::uint8_t{0});
    return p;
  }

  /// Builds from 1-based one-line notation; throws unless it is a bijection.
  static Permutation from_one_line(std::span<const int> one_line) {
    const std::size_t n = one_line.size();
    detail::require(n >= 1 && n <= max_degree, "permutation degree out of range");
    std::vector<bool> seen(n, false);
    Permutation p;
    p.image_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int v = one_line[i];
      detail::require(v >= 1 && static_cast<std::size_t>(v) <= n,
                      "permutation entry out of range: " + std::to_string(v));
      detail::require(!seen[v - 1], "repeated permutation entry: " + std::to_string(v));
      seen[v - 1] = true;
      p.image_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
  }

  static Permutation from_one_line(std::initializer_list<int> one_line) {
    return from_one_line(std::span<const int>(one_line.begin(), one_line.size()));
  }

  /// Product of the given disjoint-or-not cycles, applied right to left.
  static Permutation from_cycles(const std::vector<std::vector<int>> &cycles,
                                 std::size_t degree) {
    Permutation result = identity(degree);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      const auto &cycle = *it;
      std::vector<bool> seen(degree, false);
      Permutation c = identity(degree);
      for (std::size_t j = 0; j < cycle.size(); ++j) {
        const int a = cycle[j];
        detail::require(a >= 1 && static_cast<std::size_t>(a) <= degree,
                        "cycle entry out of range: " + std::to_string(a));
        detail::require(!seen[a - 1], "repeated entry in cycle: " + std::to_string(a));
        seen[a - 1] = true;
        const int b = cycle[(j + 1) % cycle.size()];
        c.image_[a - 1] = static_cast<std::uint8_t>(b - 1);
      }
      result = c.compose(result);
    }
    return result;
  }

  static Permutation transposition(std::size_t degree, int a, int b) {
    return from_cycles({{a, b}}, degree);
  }

  std::size_t degree() const { return image_.size(); }

  /// sigma(i) for 1-based i.
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)] + 1; }

  /// 0-based image of 0-based point.
  std::size_t image0(std::size_t i) const { return image_[i]; }

  std::vector<int> one_line() const {
    std::vector<int> out(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
      out[i] = image_[i] + 1;
    return out;
  }

  /// (*this)(rhs(i)).
  Permutation compose(const Permutation &rhs) const {
    detail::require(degree() == rhs.degree(), "degree mismatch in compose");
    Permutation out;
    out.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
      out.image_[i] = image_[rhs.image_[i]];
    return out;
  }

  Permutation inverse() const {
    Permutation out;
    out.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
      out.image_[image_[i]] = static_cast<std::uint8_t>(i);
    return out;
  }

  /// Canonical embedding S_n -> S_m: fix every point above n.
  Permutation extended(std::size_t m) const {
    detail::require(m >= degree() && m <= max_degree, "cannot embed into a smaller degree");
    Permutation out = *this;
    for (std::size_t i = degree(); i < m; ++i)
      out.image_.push_back(static_cast<std::uint8_t>(i));
    return out;
  }

  /// Right multiplication by (1,2): swaps the first two one-line entries.
  Permutation swapped_front() const {
    detail::require(degree() >= 2, "right multiplication by (1,2) needs degree >= 2");
    Permutation out = *this;
    std::swap(out.image_[0], out.image_[1]);
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != i)
        return false;
    return true;
  }

  /// Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (seen[i] || image_[i] == i)
        continue;
      std::vector<int> cycle;
      for (std::size_t j = i; !seen[j]; j = image_[j]) {
        seen[j] = true;
        cycle.push_back(static_cast<int>(j) + 1);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  /// Lexicographic order on one-line notation (shorter degree first).
  friend auto operator<=>(const Permutation &, const Permutation &) = default;
  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  std::vector<std::uint8_t> image_;
};

/// compose(sigma, tau)(i) = sigma(tau(i)).
inline Permutation compose(const Permutation &sigma, const Permutation &tau) {
  return sigma.compose(tau);
}

inline Permutation operator*(const Permutation &sigma, const Permutation &tau) {
  return sigma.compose(tau);
}

/// All of S_n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  detail::require(n >= 1 && n <= 10, "all_permutations: degree must be in 1..10");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

/// Position of p in all_permutations(p.degree()) (Lehmer code).
inline std::size_t lex_rank(const Permutation &p) {
  const std::size_t n = p.degree();
  std::size_t rank = 0;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = p.image0(i);
    std::size_t smaller = 0;
    for (std::size_t u = 0; u < v; ++u)
      if (!used[u])
        ++smaller;
    used[v] = true;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

inline Permutation lex_unrank(std::size_t n, std::size_t rank) {
  detail::require(n >= 1 && n <= 20 && rank < factorial(n), "lex_unrank: rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  for (std::size_t i = n; i >= 1; --i) {
    const std::size_t f = factorial(i - 1);
    const std::size_t idx = rank / f;
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation::from_one_line(out);
}

// ---------------------------------------------------------------------------

/// An (s,t)-shuffle: increasing alpha (length s) and beta (length t)
/// partitioning {1,...,s+t}.
struct Shuffle {
  std::vector<int> alpha;
  std::vector<int> beta;

  std::size_t s() const { return alpha.size(); }
  std::size_t t() const { return beta.size(); }

  bool valid() const {
    const std::size_t n = alpha.size() + beta.size();
    std::vector<bool> seen(n, false);
    for (const auto *seq : {&alpha, &beta}) {
      for (std::size_t i = 0; i < seq->size(); ++i) {
        const int v = (*seq)[i];
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1])
          return false;
        if (i > 0 && (*seq)[i - 1] >= v)
          return false;
        seen[v - 1] = true;
      }
    }
    return true;
  }

  friend bool operator==(const Shuffle &, const Shuffle &) = default;
};

namespace detail {

// Calls f(alpha) for every increasing alpha of length s in {lo..n}, in
// lexicographic order.
template <class F>
void for_each_combination(int s, int n, int lo, std::vector<int> &alpha, F &&f) {
  if (static_cast<int>(alpha.size()) == s) {
    f(alpha);
    return;
  }
  const int remaining = s - static_cast<int>(alpha.size());
  for (int v = lo; v <= n - remaining + 1; ++v) {
    alpha.push_back(v);
    for_each_combination(s, n, v + 1, alpha, f);
    alpha.pop_back();
  }
}

inline Shuffle shuffle_from_alpha(const std::vector<int> &alpha, int n) {
  Shuffle sh;
  sh.alpha = alpha;
  std::size_t j = 0;
  for (int v = 1; v <= n; ++v) {
    if (j < alpha.size() && alpha[j] == v)
      ++j;
    else
      sh.beta.push_back(v);
  }
  return sh;
}

} // namespace detail

/// All (s,t)-shuffles, lexicographic on alpha.
inline std::vector<Shuffle> enumerate_shuffles(std::size_t s, std::size_t t) {
  const int n = static_cast<int>(s + t);
  std::vector<Shuffle> out;
  std::vector<int> alpha;
  detail::for_each_combination(static_cast<int>(s), n, 1, alpha,
                               [&](const std::vector<int> &a) {
                                 out.push_back(detail::shuffle_from_alpha(a, n));
                               });
  return out;
}

/// The (s,t)-shuffles with alpha(1) = 1, lexicographic on alpha.
inline std::vector<Shuffle> enumerate_shuffles_first(std::size_t s, std::size_t t) {
  detail::require(s >= 1, "shuffles with alpha(1) = 1 need s >= 1");
  const int n = static_cast<int>(s + t);
  std::vector<Shuffle> out;
  std::vector<int> alpha{1};
  detail::for_each_combination(static_cast<int>(s), n, 2, alpha,
                               [&](const std::vector<int> &a) {
                                 out.push_back(detail::shuffle_from_alpha(a, n));
                               });
  return out;
}

// ---------------------------------------------------------------------------

/// A finite subset of S_n. Members are kept sorted lexicographically.
class PermSet {
public:
  explicit PermSet(std::size_t degree = 1) : degree_(degree) {
    detail::require(degree >= 1 && degree <= Permutation::max_degree,
                    "permutation set degree out of range");
  }

  /// Throws on mixed degrees or duplicate members.
  PermSet(std::size_t degree, std::vector<Permutation> members)
      : degree_(degree), members_(std::move(members)) {
    detail::require(degree >= 1 && degree <= Permutation::max_degree,
                    "permutation set degree out of range");
    for (const auto &p : members_)
      detail::require(p.degree() == degree_, "permutation set members must share its degree");
    std::sort(members_.begin(), members_.end());
    detail::require(std::adjacent_find(members_.begin(), members_.end()) == members_.end(),
                    "duplicate member in permutation set");
  }

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  const std::vector<Permutation> &members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const Permutation &p) const {
    return std::binary_search(members_.begin(), members_.end(), p);
  }

  /// Returns false if p was already present.
  bool insert(const Permutation &p) {
    detail::require(p.degree() == degree_, "degree mismatch on insert");
    auto it = std::lower_bound(members_.begin(), members_.end(), p);
    if (it != members_.end() && *it == p)
      return false;
    members_.insert(it, p);
    return true;
  }

  bool is_subset_of(const PermSet &other) const {
    return degree_ == other.degree_ &&
           std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  bool disjoint_from(const PermSet &other) const {
    detail::require(degree_ == other.degree_, "degree mismatch");
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
      if (*a == *b)
        return false;
      if (*a < *b)
        ++a;
      else
        ++b;
    }
    return true;
  }

  friend PermSet set_union(const PermSet &a, const PermSet &b) {
    return a.combine(b, [](auto f1, auto l1, auto f2, auto l2, auto out) {
      return std::set_union(f1, l1, f2, l2, out);
    });
  }

  friend PermSet set_intersection(const PermSet &a, const PermSet &b) {
    return a.combine(b, [](auto f1, auto l1, auto f2, auto l2, auto out) {
      return std::set_intersection(f1, l1, f2, l2, out);
    });
  }

  friend PermSet symmetric_difference(const PermSet &a, const PermSet &b) {
    return a.combine(b, [](auto f1, auto l1, auto f2, auto l2, auto out) {
      return std::set_symmetric_difference(f1, l1, f2, l2, out);
    });
  }

  friend bool operator==(const PermSet &, const PermSet &) = default;

private:
  template <class Op> PermSet combine(const PermSet &other, Op op) const {
    detail::require(degree_ == other.degree_, "degree mismatch in set operation");
    PermSet out(degree_);
    op(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
       std::back_inserter(out.members_));
    return out;
  }

  std::size_t degree_;
  std::vector<Permutation> members_;
};

} // namespace jset
