#pragma once

// Matrices of beta_n in the canonical monomial basis: column lex_rank(sigma)
// holds the coefficients of [x_{sigma(1)}, ..., x_{sigma(n)}].

#include "jset/gf2_matrix.hpp"
#include "jset/int_matrix.hpp"
#include "jset/multilinear.hpp"

#include <string>
#include <utility>
#include <vector>

namespace jset {

inline constexpr std::size_t beta_matrix_cap = 7;

/// Sparse column of beta_n: (row, coefficient) pairs, rows ascending.
using SparseColumn = std::vector<std::pair<std::size_t, int>>;

namespace detail {

inline void check_beta_cap(std::size_t n, std::size_t cap) {
  require(n >= 1, "beta matrix: n must be positive");
  if (n > cap)
    throw CapExceeded("beta matrix for n = " + std::to_string(n) + " exceeds the cap n <= " +
                      std::to_string(cap));
}

} // namespace detail

/// All columns of beta_n in sparse form; entries are +-1.
inline std::vector<SparseColumn> beta_columns(std::size_t n, std::size_t cap = beta_matrix_cap) {
  detail::check_beta_cap(n, cap);
  std::vector<SparseColumn> cols;
  cols.reserve(factorial(n));
  for (const auto &sigma : all_permutations(n)) {
    SparseColumn col;
    const auto expansion = expand_bracket_recursive(sigma);
    for (const auto &[word, c] : expansion.terms())
      col.emplace_back(lex_rank(word), c.convert_to<int>());
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
  }
  return cols;
}

inline IntMatrix build_beta_matrix(std::size_t n, std::size_t cap = beta_matrix_cap) {
  const auto cols = beta_columns(n, cap);
  IntMatrix m(cols.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto &[r, v] : cols[c])
      m(r, c) = v;
  return m;
}

/// beta_n tensor Z/2.
inline GF2Matrix build_beta_matrix_gf2(std::size_t n, std::size_t cap = beta_matrix_cap) {
  const auto cols = beta_columns(n, cap);
  GF2Matrix m(cols.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto &[r, v] : cols[c])
      if (v % 2 != 0)
        m.set(r, c);
  return m;
}

} // namespace jset
