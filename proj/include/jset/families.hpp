#pragma once

// The permutation families sigma_{alpha,beta,k,l}, C_{k,l}, Phi_{k,l} and
// T_{k,l,n}, together with the set operations that preserve the Jacobi
// property (left translation, right multiplication by (1,2), embedding).

#include "jset/permutation.hpp"

#include <string>

namespace jset {

/// sigma_{alpha,beta,k,l} in S_{k+l}.
///
/// The auxiliary permutation fixes 1..k, sends k+j to k+beta(i+1-j) for
/// j <= i and k+i+j to k+alpha(j); the result is that permutation composed on
/// the right with (1,2)^i, which turns the sign (-1)^i of the expansion into
/// a swap of the first two bracket entries.
inline Permutation make_sigma(const Shuffle &alpha_beta, std::size_t k, std::size_t l,
                              std::size_t i) {
  detail::require(k >= 1 && l >= 1, "make_sigma: k and l must be positive");
  detail::require(i + 1 <= l, "make_sigma: need 0 <= i <= l-1");
  detail::require(alpha_beta.valid(), "make_sigma: not a shuffle");
  detail::require(alpha_beta.s() == l - i && alpha_beta.t() == i,
                  "make_sigma: shuffle shape must be (l-i, i)");
  detail::require(alpha_beta.alpha.front() == 1, "make_sigma: shuffle must have alpha(1) = 1");
  if (i % 2 == 1)
    detail::require(k + l >= 2, "make_sigma: odd i needs degree >= 2");

  std::vector<int> image;
  image.reserve(k + l);
  const int base = static_cast<int>(k);
  for (int p = 1; p <= base; ++p)
    image.push_back(p);
  for (std::size_t j = i; j >= 1; --j)
    image.push_back(base + alpha_beta.beta[j - 1]);
  for (int a : alpha_beta.alpha)
    image.push_back(base + a);

  Permutation sigma = Permutation::from_one_line(image);
  return i % 2 == 1 ? sigma.swapped_front() : sigma;
}

/// C_{k,l}: all sigma_{alpha,beta,k,l}; 2^{l-1} members.
inline PermSet build_C(std::size_t k, std::size_t l) {
  detail::require(k >= 1 && l >= 1, "build_C: k and l must be positive");
  PermSet out(k + l);
  for (std::size_t i = 0; i < l; ++i)
    for (const auto &sh : enumerate_shuffles_first(l - i, i))
      detail::require(out.insert(make_sigma(sh, k, l, i)),
                      "build_C: repeated permutation");
  return out;
}

/// Phi_{k,l}(i) = i + k for i <= l, i - l otherwise.
inline Permutation build_Phi(std::size_t k, std::size_t l) {
  detail::require(k >= 1 && l >= 1, "build_Phi: k and l must be positive");
  std::vector<int> image;
  const int kk = static_cast<int>(k);
  const int ll = static_cast<int>(l);
  for (int i = 1; i <= kk + ll; ++i)
    image.push_back(i <= ll ? i + kk : i - ll);
  return Permutation::from_one_line(image);
}

/// {sigma * tau : tau in T}.
inline PermSet left_translate(const Permutation &sigma, const PermSet &T) {
  detail::require(sigma.degree() == T.degree(), "left_translate: degree mismatch");
  std::vector<Permutation> out;
  out.reserve(T.size());
  for (const auto &tau : T)
    out.push_back(sigma * tau);
  return PermSet(T.degree(), std::move(out));
}

/// {tau * (1,2) : tau in T}.
inline PermSet right_swap(const PermSet &T) {
  detail::require(T.degree() >= 2, "right_swap: degree must be at least 2");
  std::vector<Permutation> out;
  out.reserve(T.size());
  for (const auto &tau : T)
    out.push_back(tau.swapped_front());
  return PermSet(T.degree(), std::move(out));
}

/// iota_{n,m}(T).
inline PermSet embed(const PermSet &T, std::size_t m) {
  detail::require(m >= T.degree(), "embed: target degree smaller than set degree");
  std::vector<Permutation> out;
  out.reserve(T.size());
  for (const auto &tau : T)
    out.push_back(tau.extended(m));
  return PermSet(m, std::move(out));
}

/// T_{k,l} = C_{k,l} u Phi_{k,l} C_{l,k}, embedded in S_n.
inline PermSet build_T(std::size_t k, std::size_t l, std::size_t n) {
  detail::require(k >= 1 && l >= 1, "build_T: k and l must be positive");
  detail::require(k + l <= n, "build_T: need k + l <= n");
  const PermSet first = build_C(k, l);
  const PermSet second = left_translate(build_Phi(k, l), build_C(l, k));
  if (!first.disjoint_from(second))
    throw InternalError("build_T: C_{k,l} and Phi_{k,l} C_{l,k} intersect for k=" +
                        std::to_string(k) + ", l=" + std::to_string(l));
  return embed(set_union(first, second), n);
}

} // namespace jset
