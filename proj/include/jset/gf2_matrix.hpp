#pragma once

// Dense bit-packed linear algebra over GF(2).

#include "jset/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jset {

class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVector &operator^=(const BitVector &other) {
    detail::require(size_ == other.size_, "bit vector length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }

  bool is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// "0110..." with bit 0 first.
  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i))
        s[i] = '1';
    return s;
  }

  std::vector<std::uint64_t> &words() { return words_; }
  const std::vector<std::uint64_t> &words() const { return words_; }

  friend bool operator==(const BitVector &, const BitVector &) = default;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major bit-packed matrix.
class GF2Matrix {
public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  /// Matrix whose columns are the given vectors.
  static GF2Matrix from_columns(const std::vector<BitVector> &columns, std::size_t rows) {
    GF2Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      detail::require(columns[c].size() == rows, "column length mismatch");
      for (std::size_t r = 0; r < rows; ++r)
        if (columns[c].get(r))
          m.set(r, c);
    }
    return m;
  }

  static GF2Matrix identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.set(i, i);
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

  const BitVector &row(std::size_t r) const { return rows_[r]; }
  BitVector &row(std::size_t r) { return rows_[r]; }

  BitVector multiply(const BitVector &x) const {
    detail::require(x.size() == cols_, "gf2 multiply: dimension mismatch");
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      std::uint64_t acc = 0;
      const auto &w = rows_[r].words();
      const auto &xw = x.words();
      for (std::size_t i = 0; i < w.size(); ++i)
        acc ^= w[i] & xw[i];
      if (std::popcount(acc) % 2)
        out.set(r);
    }
    return out;
  }

  /// One line of '0'/'1' per row.
  std::string to_bit_string() const {
    std::string out;
    for (const auto &r : rows_) {
      out += r.to_string();
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const GF2Matrix &, const GF2Matrix &) = default;

private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

namespace detail {

// Reduced row echelon form in place; rhs (one bit per row) follows the row
// operations when given. Returns the pivot columns in row order.
inline std::vector<std::size_t> gf2_rref(GF2Matrix &m, BitVector *rhs = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c))
      ++p;
    if (p == m.rows())
      continue;
    if (p != r) {
      std::swap(m.row(p), m.row(r));
      if (rhs) {
        const bool a = rhs->get(p), b = rhs->get(r);
        rhs->set(p, b);
        rhs->set(r, a);
      }
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m.get(i, c)) {
        m.row(i) ^= m.row(r);
        if (rhs && rhs->get(r))
          rhs->flip(i);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace detail

inline std::size_t gf2_rank(GF2Matrix m) { return detail::gf2_rref(m).size(); }

/// Basis of {x : M x = 0}, one vector per free column.
inline std::vector<BitVector> gf2_nullspace(GF2Matrix m) {
  const auto pivots = detail::gf2_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f])
      continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (m.get(r, f))
        v.set(pivots[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with M x = b (free variables zero), or nullopt.
inline std::optional<BitVector> gf2_solve(GF2Matrix m, BitVector b) {
  detail::require(b.size() == m.rows(), "gf2_solve: dimension mismatch");
  const auto pivots = detail::gf2_rref(m, &b);
  for (std::size_t r = pivots.size(); r < m.rows(); ++r)
    if (b.get(r))
      return std::nullopt;
  BitVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (b.get(r))
      x.set(pivots[r]);
  return x;
}

} // namespace jset
