#pragma once

// Exact dense integer linear algebra: fraction-free (Bareiss) elimination
// certified by elimination modulo two 62-bit primes, integer kernel bases and
// integer-lattice membership through a Hermite-style row reduction.

#include "jset/error.hpp"
#include "jset/integer.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jset {

using IntVector = std::vector<Integer>;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Matrix whose rows are the given vectors.
  static IntMatrix from_rows(const std::vector<IntVector> &rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      detail::require(rows[r].size() == cols, "row length mismatch");
      for (std::size_t c = 0; c < cols; ++c)
        m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  IntVector multiply(std::span<const Integer> x) const {
    detail::require(x.size() == cols_, "int multiply: dimension mismatch");
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!(*this)(r, c).is_zero() && !x[c].is_zero())
          out[r] += (*this)(r, c) * x[c];
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Whitespace-separated entries, one row per line.
  std::string to_text() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c > 0)
          out += ' ';
        out += (*this)(r, c).str();
      }
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Default guard on either dimension for the big-integer eliminations.
inline constexpr std::size_t int_elimination_cap = 720;

/// The two fixed primes used to certify fraction-free ranks.
inline constexpr std::uint64_t certification_primes[2] = {4611686018427387847ULL,
                                                          4611686018427387817ULL};

namespace detail {

inline void check_cap(const IntMatrix &m, std::size_t cap) {
  if (m.rows() > cap || m.cols() > cap)
    throw CapExceeded("matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                      " exceeds the elimination cap " + std::to_string(cap));
}

inline mpz_ptr raw(Integer &x) { return x.backend().data(); }
inline mpz_srcptr raw(const Integer &x) { return x.backend().data(); }

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t reduce_mod(const Integer &x, std::uint64_t p) {
  Integer r = x % Integer(p);
  if (r < 0)
    r += p;
  return r.convert_to<std::uint64_t>();
}

// Fraction-free elimination in place. With `reduced` every pivot column is
// cleared above and below its pivot and all pivots end equal (to the last
// leading minor); otherwise only below. Returns pivot columns in row order.
inline std::vector<std::size_t> bareiss(IntMatrix &a, bool reduced) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero())
      ++p;
    if (p == a.rows())
      continue;
    a.swap_rows(p, r);
    const Integer &pivot = a(r, c);
    for (std::size_t i = reduced ? 0 : r + 1; i < a.rows(); ++i) {
      if (i == r)
        continue;
      const Integer factor = a(i, c);
      // Row r vanishes left of c, so for the reduced form the columns left of
      // c of earlier rows only get scaled by pivot / prev.
      for (std::size_t j = reduced && i < r ? 0 : c + 1; j < a.cols(); ++j) {
        if (j == c)
          continue;
        // a(i,j) = (pivot * a(i,j) - factor * a(r,j)) / prev
        mpz_ptr target = raw(a(i, j));
        mpz_mul(target, target, raw(pivot));
        if (!factor.is_zero())
          mpz_submul(target, raw(factor), raw(a(r, j)));
        if (reduced) {
          mpz_tdiv_r(raw(tmp), target, raw(prev));
          if (!tmp.is_zero())
            throw InternalError("fraction-free elimination: inexact division");
        }
        mpz_divexact(target, target, raw(prev));
      }
      a(i, c) = 0;
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace detail

/// Rank over Z/p by ordinary Gaussian elimination.
inline std::size_t modular_rank(const IntMatrix &m, std::uint64_t p) {
  std::vector<std::uint64_t> a(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      a[r * m.cols() + c] = detail::reduce_mod(m(r, c), p);
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv * cols + c] == 0)
      ++piv;
    if (piv == m.rows())
      continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a[piv * cols + j], a[rank * cols + j]);
    const std::uint64_t inv = detail::powmod(a[rank * cols + c], p - 2, p);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const std::uint64_t f = detail::mulmod(a[i * cols + c], inv, p);
      if (f == 0)
        continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = detail::mulmod(f, a[rank * cols + j], p);
        std::uint64_t &x = a[i * cols + j];
        x = x >= sub ? x - sub : x + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

/// Rank over the rationals. The fraction-free result must agree with the
/// rank modulo both certification primes, otherwise InternalError.
inline std::size_t int_rank(const IntMatrix &m, std::size_t cap = int_elimination_cap) {
  detail::check_cap(m, cap);
  IntMatrix work = m;
  const std::size_t rank = detail::bareiss(work, false).size();
  for (auto p : certification_primes) {
    const std::size_t r = modular_rank(m, p);
    if (r != rank)
      throw InternalError("rank disagreement: fraction-free " + std::to_string(rank) +
                          ", modulo " + std::to_string(p) + " " + std::to_string(r));
  }
  return rank;
}

/// Content-1 vector with first nonzero entry positive.
inline void normalize_primitive(IntVector &v) {
  Integer g = 0;
  for (const auto &x : v)
    if (!x.is_zero())
      g = gcd(g, x);
  if (g.is_zero())
    return;
  for (auto &x : v)
    if (!x.is_zero())
      mpz_divexact(detail::raw(x), detail::raw(x), detail::raw(g));
  for (const auto &x : v) {
    if (x.is_zero())
      continue;
    if (x < 0)
      for (auto &y : v)
        y = -y;
    break;
  }
}

/// Integer vectors of content 1 spanning the rational kernel of M, one per
/// non-pivot column, in column order.
inline std::vector<IntVector> int_kernel_basis(const IntMatrix &m,
                                               std::size_t cap = int_elimination_cap) {
  detail::check_cap(m, cap);
  IntMatrix a = m;
  const auto pivots = detail::bareiss(a, true);
  for (auto p : certification_primes)
    if (modular_rank(m, p) != pivots.size())
      throw InternalError("kernel: rank disagreement with modular elimination");

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    IntVector v(m.cols());
    // Every pivot equals the same minor D: D x_pivot + a(r,f) x_f = 0.
    v[f] = pivots.empty() ? Integer(1) : a(pivots.size() - 1, pivots.back());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a(r, f);
    normalize_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace detail {

struct HermiteForm {
  IntMatrix h;                     // echelon rows, positive pivots
  IntMatrix u;                     // unimodular: u * generators = h
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

// Row-style Hermite reduction with a unimodular transform.
inline HermiteForm hermite_rows(const IntMatrix &g) {
  HermiteForm out{g, IntMatrix(g.rows(), g.rows()), {}};
  IntMatrix &a = out.h;
  IntMatrix &u = out.u;
  for (std::size_t i = 0; i < g.rows(); ++i)
    u(i, i) = 1;

  auto combine = [](IntMatrix &m, std::size_t r, std::size_t i, const Integer &x,
                    const Integer &y, const Integer &ca, const Integer &cb) {
    // row_r <- x row_r + y row_i ; row_i <- -cb row_r + ca row_i
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer vr = m(r, j);
      const Integer vi = m(i, j);
      if (vr.is_zero() && vi.is_zero())
        continue;
      m(r, j) = x * vr + y * vi;
      m(i, j) = ca * vi - cb * vr;
    }
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero())
        continue;
      if (a(r, c).is_zero()) {
        a.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(raw(g), raw(x), raw(y), raw(a(r, c)), raw(a(i, c)));
      const Integer ca = a(r, c) / g;
      const Integer cb = a(i, c) / g;
      combine(a, r, i, x, y, ca, cb);
      combine(u, r, i, x, y, ca, cb);
    }
    if (a(r, c).is_zero())
      continue;
    if (a(r, c) < 0) {
      for (auto &v : a.row(r))
        v = -v;
      for (auto &v : u.row(r))
        v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (a(i, c).is_zero())
        continue;
      Integer q;
      mpz_fdiv_q(raw(q), raw(a(i, c)), raw(a(r, c)));
      if (q.is_zero())
        continue;
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (!a(r, j).is_zero())
          a(i, j) -= q * a(r, j);
      for (std::size_t j = 0; j < u.cols(); ++j)
        if (!u(r, j).is_zero())
          u(i, j) -= q * u(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

} // namespace detail

/// The lattice generated by a list of integer vectors, kept in Hermite form
/// so that many membership queries share one reduction.
class IntegerLattice {
public:
  IntegerLattice(std::vector<IntVector> generators, std::size_t dim)
      : dim_(dim), generators_(std::move(generators)) {
    for (const auto &v : generators_)
      detail::require(v.size() == dim_, "lattice: generator dimension mismatch");
    if (!generators_.empty())
      form_ = detail::hermite_rows(IntMatrix::from_rows(generators_, dim_));
  }

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return form_.pivots.size(); }
  const std::vector<IntVector> &generators() const { return generators_; }

  /// Integer c with sum_i c_i * generators[i] == target, or nullopt.
  std::optional<IntVector> coordinates(const IntVector &target) const {
    detail::require(target.size() == dim_, "lattice: target dimension mismatch");
    IntVector rest = target;
    IntVector coeffs(generators_.size());
    for (std::size_t r = 0; r < form_.pivots.size(); ++r) {
      const std::size_t c = form_.pivots[r];
      // Entries left of this pivot are beyond the reach of the remaining rows.
      for (std::size_t j = r == 0 ? 0 : form_.pivots[r - 1] + 1; j < c; ++j)
        if (!rest[j].is_zero())
          return std::nullopt;
      if (rest[c].is_zero())
        continue;
      Integer q, rem;
      mpz_tdiv_qr(detail::raw(q), detail::raw(rem), detail::raw(rest[c]),
                  detail::raw(form_.h(r, c)));
      if (!rem.is_zero())
        return std::nullopt;
      for (std::size_t j = c; j < dim_; ++j)
        if (!form_.h(r, j).is_zero())
          rest[j] -= q * form_.h(r, j);
      for (std::size_t g = 0; g < coeffs.size(); ++g)
        if (!form_.u(r, g).is_zero())
          coeffs[g] += q * form_.u(r, g);
    }
    for (const auto &x : rest)
      if (!x.is_zero())
        return std::nullopt;

    IntVector check(dim_);
    for (std::size_t g = 0; g < generators_.size(); ++g)
      if (!coeffs[g].is_zero())
        for (std::size_t j = 0; j < dim_; ++j)
          if (!generators_[g][j].is_zero())
            check[j] += coeffs[g] * generators_[g][j];
    if (check != target)
      throw InternalError("lattice membership witness does not recombine");
    return coeffs;
  }

  bool contains(const IntVector &target) const { return coordinates(target).has_value(); }

private:
  std::size_t dim_;
  std::vector<IntVector> generators_;
  detail::HermiteForm form_;
};

/// Integer coefficients c with sum_i c_i * vectors[i] == target, or nullopt
/// when target is not in the lattice the vectors generate.
inline std::optional<IntVector> lattice_membership(const std::vector<IntVector> &vectors,
                                                   const IntVector &target) {
  return IntegerLattice(vectors, target.size()).coordinates(target);
}

} // namespace jset
