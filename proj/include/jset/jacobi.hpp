#pragma once

// Jacobi and 2-Jacobi subsets of S_n.
//
// T is Jacobi when sum_{sigma in T} [x_{sigma(1)}, ..., x_{sigma(n)}] = 0 in
// every Lie ring, which holds exactly when beta_n(Sum(T)) = 0 in the free
// associative ring; 2-Jacobi is the same condition modulo 2.

#include "jset/beta_matrix.hpp"
#include "jset/families.hpp"
#include "jset/gf2_matrix.hpp"
#include "jset/int_matrix.hpp"
#include "jset/multilinear.hpp"
#include "jset/perm_io.hpp"
#include "jset/poly_io.hpp"
#include "jset/report.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace jset {

/// beta_n(Sum(T)); zero exactly when T is Jacobi.
inline MultilinearPoly jacobi_residual(const PermSet &T) { return beta(sum_of_set(T)); }

/// The terms of beta_n(Sum(T)) with odd coefficient, each with coefficient 1.
inline MultilinearPoly jacobi_residual_mod2(const PermSet &T) {
  MultilinearPoly out(T.degree());
  const auto residual = jacobi_residual(T);
  for (const auto &[sigma, c] : residual.terms())
    if (mpz_odd_p(c.backend().data()))
      out.add_term(sigma, 1);
  return out;
}

inline bool is_jacobi(const PermSet &T) { return jacobi_residual(T).is_zero(); }

inline bool is_2jacobi(const PermSet &T) { return jacobi_residual_mod2(T).is_zero(); }

// ---------------------------------------------------------------------------
// Kernel basis {sigma T_{k,1,n} : sigma(k+1) = 1}

struct BasisElement {
  std::size_t k = 1;
  Permutation sigma;
  PermSet set;
};

/// Ordered by k ascending, then sigma lexicographically;
/// (n-1)! * (n-1) elements.
inline std::vector<BasisElement> theorem2_basis(std::size_t n) {
  detail::require(n >= 2, "kernel basis needs n >= 2");
  const auto perms = all_permutations(n);
  std::vector<BasisElement> out;
  for (std::size_t k = 1; k < n; ++k) {
    const PermSet T = build_T(k, 1, n);
    for (const auto &sigma : perms)
      if (sigma(static_cast<int>(k + 1)) == 1)
        out.push_back(BasisElement{k, sigma, left_translate(sigma, T)});
  }
  return out;
}

inline nlohmann::json to_json(const BasisElement &b) {
  return {{"k", b.k}, {"sigma", b.sigma.one_line()}, {"set", perm_set_to_json(b.set)}};
}

inline constexpr std::size_t verify_cap = 6;
inline constexpr std::size_t lattice_check_cap = 5;

/// Checks the kernel-basis claims for one n: the sets are Jacobi, their Sum
/// vectors are independent over GF(2) and Q, their number is the kernel rank
/// over Q and over GF(2), and (n <= lattice_max_n) every vector of an
/// integer kernel basis is an integer combination of them.
inline Report verify_theorem2(std::size_t n, std::size_t lattice_max_n = lattice_check_cap) {
  detail::require(n >= 2, "verify_theorem2: need n >= 2");
  if (n > verify_cap)
    throw CapExceeded("verify_theorem2: n must be at most " + std::to_string(verify_cap));

  Report rep;
  rep.subject = "kernel basis sigma*T_{k,1,n}, n = " + std::to_string(n);
  const std::size_t N = factorial(n);
  const std::size_t expected = factorial(n - 1) * (n - 1);
  const auto basis = theorem2_basis(n);

  rep.run("basis-count", [&] {
    return std::pair{basis.size() == expected,
                     nlohmann::json{{"count", basis.size()}, {"expected", expected}}};
  });

  rep.run("basis-sets-jacobi", [&] {
    for (const auto &b : basis)
      if (!is_jacobi(b.set))
        return std::pair{false, nlohmann::json{{"first_failure", to_json(b)}}};
    return std::pair{true, nlohmann::json{{"checked", basis.size()}}};
  });

  std::vector<BitVector> bits;
  std::vector<IntVector> ints;
  for (const auto &b : basis) {
    bits.push_back(indicator(b.set));
    ints.push_back(to_int_vector(sum_of_set(b.set)));
  }

  rep.run("independent-gf2", [&] {
    const auto r = gf2_rank(GF2Matrix::from_columns(bits, N));
    return std::pair{r == basis.size(), nlohmann::json{{"rank", r}}};
  });

  rep.run("independent-rational", [&] {
    const auto r = int_rank(IntMatrix::from_rows(ints, N));
    return std::pair{r == basis.size(), nlohmann::json{{"rank", r}}};
  });

  const IntMatrix beta_m = build_beta_matrix(n);
  std::size_t image_rank = 0;
  rep.run("kernel-rank-rational", [&] {
    image_rank = int_rank(beta_m);
    const auto kernel = N - image_rank;
    return std::pair{kernel == expected,
                     nlohmann::json{{"image_rank", image_rank}, {"kernel_rank", kernel}}};
  });

  rep.run("kernel-rank-gf2", [&] {
    const auto r = gf2_rank(build_beta_matrix_gf2(n));
    const auto kernel = N - r;
    return std::pair{kernel == expected,
                     nlohmann::json{{"image_rank", r}, {"kernel_rank", kernel}}};
  });

  if (n <= lattice_max_n) {
    rep.run("integer-kernel-spanned", [&] {
      const auto kernel = int_kernel_basis(beta_m);
      const IntegerLattice lattice(ints, N);
      for (std::size_t i = 0; i < kernel.size(); ++i)
        if (!lattice.contains(kernel[i]))
          return std::pair{false, nlohmann::json{{"kernel_vector_not_spanned",
                                                  to_json(from_int_vector(n, kernel[i]))}}};
      return std::pair{true, nlohmann::json{{"kernel_vectors_checked", kernel.size()},
                                            {"lattice_rank", lattice.rank()}}};
    });
  } else {
    rep.notes.push_back("integer spanning check skipped above n = " +
                        std::to_string(lattice_max_n));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// theta_{j,n}

/// beta(theta_{j,n}) = 0 and theta_{j,n} in the GF(2) span of the kernel
/// basis for 2 <= j <= n; comparison with Sum(T_{j-1,1,n}) is recorded under
/// findings, not as a claim.
inline Report theta_report(std::size_t n) {
  detail::require(n >= 2, "theta_report: need n >= 2");
  if (n > verify_cap)
    throw CapExceeded("theta_report: n must be at most " + std::to_string(verify_cap));
  Report rep;
  rep.subject = "theta_{j,n} kernel elements, n = " + std::to_string(n);
  const std::size_t N = factorial(n);
  const auto basis = theorem2_basis(n);
  std::vector<BitVector> bits;
  std::vector<IntVector> ints;
  for (const auto &b : basis) {
    bits.push_back(indicator(b.set));
    ints.push_back(to_int_vector(sum_of_set(b.set)));
  }
  const GF2Matrix span = GF2Matrix::from_columns(bits, N);
  std::optional<IntegerLattice> lattice;
  if (n <= lattice_check_cap)
    lattice.emplace(ints, N);

  nlohmann::json comparisons = nlohmann::json::array();
  for (std::size_t j = 2; j <= n; ++j) {
    const auto th = theta(j, n);
    const std::string tag = "j=" + std::to_string(j);
    rep.run("theta-in-kernel " + tag, [&] {
      const auto r = beta(th);
      return std::pair{r.is_zero(), r.is_zero() ? nlohmann::json{} : to_json(r)};
    });
    rep.run("theta-in-gf2-span " + tag, [&] {
      return std::pair{gf2_solve(span, reduce_mod2(th)).has_value(), nlohmann::json{}};
    });
    if (lattice) {
      rep.run("theta-in-integer-span " + tag, [&] {
        const auto coords = lattice->coordinates(to_int_vector(th));
        return std::pair{coords.has_value(), nlohmann::json{}};
      });
    }
    const auto sum_t = sum_of_set(build_T(j - 1, 1, n));
    const auto diff = th - sum_t;
    comparisons.push_back({{"j", j},
                           {"theta", to_text(th)},
                           {"sum_T", to_text(sum_t)},
                           {"equal", th == sum_t},
                           {"difference_in_kernel", beta(diff).is_zero()}});
  }
  rep.findings["theta_vs_sum_T_{j-1,1,n}"] = std::move(comparisons);
  return rep;
}

// ---------------------------------------------------------------------------
// 2-Jacobi decomposition

/// Thrown by decompose_2jacobi for a set that is not 2-Jacobi.
class NotTwoJacobi : public std::invalid_argument {
public:
  explicit NotTwoJacobi(MultilinearPoly residual)
      : std::invalid_argument("set is not 2-Jacobi; beta(Sum(T)) mod 2 = " + to_text(residual)),
        residual_(std::move(residual)) {}

  /// Nonzero reduction of beta_n(Sum(T)) modulo 2.
  const MultilinearPoly &residual() const { return residual_; }

private:
  MultilinearPoly residual_;
};

/// Basis elements whose sets' iterated symmetric difference is exactly T.
inline std::vector<BasisElement> decompose_2jacobi(const PermSet &T) {
  const std::size_t n = T.degree();
  if (n > verify_cap)
    throw CapExceeded("decompose_2jacobi: degree must be at most " + std::to_string(verify_cap));
  auto residual = jacobi_residual_mod2(T);
  if (!residual.is_zero())
    throw NotTwoJacobi(std::move(residual));
  if (n == 1) {
    // S_1: the only 2-Jacobi set is empty.
    return {};
  }
  const auto basis = theorem2_basis(n);
  std::vector<BitVector> bits;
  for (const auto &b : basis)
    bits.push_back(indicator(b.set));
  const auto x = gf2_solve(GF2Matrix::from_columns(bits, factorial(n)), indicator(T));
  if (!x)
    throw InternalError("2-Jacobi set outside the span of the kernel basis");
  std::vector<BasisElement> out;
  PermSet acc(n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (x->get(i)) {
      acc = symmetric_difference(acc, basis[i].set);
      out.push_back(basis[i]);
    }
  }
  if (acc != T)
    throw InternalError("2-Jacobi decomposition does not recombine");
  return out;
}

// ---------------------------------------------------------------------------
// Counting

inline constexpr std::size_t jacobi_listing_cap = 3;
inline constexpr std::size_t jacobi_count_cap = 4;
inline constexpr std::size_t two_jacobi_count_cap = 7;
inline constexpr std::size_t two_jacobi_exhaustive_cap = 4;

struct JacobiCount {
  std::uint64_t count = 0;
  std::vector<PermSet> listing; // filled when requested, canonical order
};

/// Number of Jacobi subsets of S_n by a Gray-code walk over all 2^{n!}
/// subsets with an incrementally updated integer image vector.
inline JacobiCount enumerate_jacobi(std::size_t n, bool with_listing = false) {
  detail::require(n >= 1, "enumerate_jacobi: n must be positive");
  if (n > jacobi_count_cap)
    throw CapExceeded("Jacobi counting is limited to n <= " + std::to_string(jacobi_count_cap));
  if (with_listing && n > jacobi_listing_cap)
    throw CapExceeded("Jacobi listing is limited to n <= " + std::to_string(jacobi_listing_cap));

  const auto cols = beta_columns(n);
  const std::size_t N = cols.size();
  std::vector<std::int32_t> acc(N, 0);
  std::size_t nonzero = 0;
  std::uint64_t members = 0;
  JacobiCount out;
  auto record = [&] {
    ++out.count;
    if (with_listing) {
      PermSet s(n);
      for (std::size_t i = 0; i < N; ++i)
        if ((members >> i) & 1U)
          s.insert(lex_unrank(n, i));
      out.listing.push_back(std::move(s));
    }
  };
  record(); // empty set
  const std::uint64_t total = std::uint64_t{1} << N;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    const bool adding = ((members >> bit) & 1U) == 0;
    members ^= std::uint64_t{1} << bit;
    for (const auto &[r, v] : cols[bit]) {
      std::int32_t &a = acc[r];
      const bool was_zero = a == 0;
      a += adding ? v : -v;
      if (was_zero && a != 0)
        ++nonzero;
      else if (!was_zero && a == 0)
        --nonzero;
    }
    if (nonzero == 0)
      record();
  }
  if (with_listing)
    std::sort(out.listing.begin(), out.listing.end(),
              [](const PermSet &a, const PermSet &b) {
                if (a.size() != b.size())
                  return a.size() < b.size();
                return a.members() < b.members();
              });
  return out;
}

struct TwoJacobiCount {
  Integer count;                          // 2^kernel_dimension
  std::size_t kernel_dimension = 0;       // n! - rank of beta_n mod 2
  std::optional<std::uint64_t> exhaustive; // direct sweep for small n
};

/// Number of 2-Jacobi subsets of S_n: 2^dim ker(beta_n mod 2); confirmed by
/// an exhaustive GF(2) sweep for n <= two_jacobi_exhaustive_cap.
inline TwoJacobiCount enumerate_2jacobi(std::size_t n) {
  detail::require(n >= 1, "enumerate_2jacobi: n must be positive");
  if (n > two_jacobi_count_cap)
    throw CapExceeded("2-Jacobi counting is limited to n <= " +
                      std::to_string(two_jacobi_count_cap));
  const GF2Matrix m = build_beta_matrix_gf2(n);
  TwoJacobiCount out;
  out.kernel_dimension = m.cols() - gf2_rank(m);
  out.count = Integer(1) << static_cast<unsigned>(out.kernel_dimension);

  if (n <= two_jacobi_exhaustive_cap) {
    const std::size_t N = m.cols();
    std::vector<std::uint32_t> col_mask(N, 0);
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        if (m.get(r, c))
          col_mask[c] |= std::uint32_t{1} << r;
    std::uint32_t acc = 0;
    std::uint64_t count = 1;
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << N); ++step) {
      acc ^= col_mask[static_cast<std::size_t>(std::countr_zero(step))];
      if (acc == 0)
        ++count;
    }
    out.exhaustive = count;
    if (Integer(count) != out.count)
      throw InternalError("2-Jacobi count: sweep and kernel dimension disagree");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closure properties under randomized and exhaustive checks

namespace detail {

inline Permutation random_permutation(std::size_t n, std::mt19937_64 &rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(v[i - 1], v[pick(rng)]);
  }
  return Permutation::from_one_line(v);
}

/// sigma * T_{k,l,n} * (1,2)^e with random sigma, k, l, e.
inline PermSet random_known_jacobi(std::size_t n, std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::size_t> pick_k(1, n - 1);
  const std::size_t k = pick_k(rng);
  std::uniform_int_distribution<std::size_t> pick_l(1, n - k);
  const std::size_t l = pick_l(rng);
  PermSet T = left_translate(random_permutation(n, rng), build_T(k, l, n));
  if (std::bernoulli_distribution(0.5)(rng))
    T = right_swap(T);
  return T;
}

/// Subgroup of S_n generated by gens (BFS closure).
inline PermSet generate_group(const std::vector<Permutation> &gens, std::size_t n) {
  PermSet group(n);
  std::vector<Permutation> frontier{Permutation::identity(n)};
  group.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto &g : frontier)
      for (const auto &s : gens) {
        Permutation h = g * s;
        if (group.insert(h))
          next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return group;
}

} // namespace detail

inline constexpr std::size_t property_suite_cap = 6;

/// Randomized and exhaustive checks of the closure rules: disjoint union,
/// left translation, right multiplication by (1,2), embedding, and subgroups
/// containing (1,2) or (1,2,3).
inline Report lemma1_property_suite(std::size_t n, std::size_t trials,
                                    std::uint64_t seed = 20240601) {
  detail::require(n >= 2, "property suite needs n >= 2");
  if (n > property_suite_cap)
    throw CapExceeded("property suite is limited to n <= " + std::to_string(property_suite_cap));
  std::mt19937_64 rng(seed);
  Report rep;
  rep.subject = "closure rules for Jacobi subsets, n = " + std::to_string(n);

  auto failure = [](const PermSet &T) {
    return nlohmann::json{{"set", perm_set_to_json(T)}};
  };

  rep.run("disjoint-union", [&] {
    std::size_t tested = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const PermSet a = detail::random_known_jacobi(n, rng);
      const PermSet b = detail::random_known_jacobi(n, rng);
      if (!a.disjoint_from(b))
        continue;
      ++tested;
      const PermSet u = set_union(a, b);
      if (!is_jacobi(u))
        return std::pair{false, failure(u)};
    }
    return std::pair{true, nlohmann::json{{"disjoint_pairs_tested", tested}}};
  });

  rep.run("left-translation", [&] {
    for (std::size_t t = 0; t < trials; ++t) {
      const PermSet T =
          left_translate(detail::random_permutation(n, rng), detail::random_known_jacobi(n, rng));
      if (!is_jacobi(T))
        return std::pair{false, failure(T)};
    }
    return std::pair{true, nlohmann::json{{"tested", trials}}};
  });

  rep.run("right-swap", [&] {
    for (std::size_t t = 0; t < trials; ++t) {
      const PermSet T = right_swap(detail::random_known_jacobi(n, rng));
      if (!is_jacobi(T))
        return std::pair{false, failure(T)};
    }
    return std::pair{true, nlohmann::json{{"tested", trials}}};
  });

  rep.run("embedding", [&] {
    const std::size_t top = std::max<std::size_t>(n + 1, property_suite_cap + 1);
    std::uniform_int_distribution<std::size_t> pick_m(n, top);
    for (std::size_t t = 0; t < trials; ++t) {
      const PermSet T = embed(detail::random_known_jacobi(n, rng), pick_m(rng));
      if (!is_jacobi(T))
        return std::pair{false, failure(T)};
    }
    return std::pair{true, nlohmann::json{{"tested", trials}}};
  });

  rep.run("subgroups", [&] {
    std::vector<std::vector<std::vector<int>>> pool_cycles = {
        {{1, 3}}, {{2, 3}}, {{3, 4}}, {{1, 4}}, {{1, 2, 3, 4}}, {{1, 2}, {3, 4}},
        {{4, 5}}, {{1, 5}, {2, 3}}, {{5, 6}}, {{1, 6}}};
    std::vector<Permutation> pool;
    for (const auto &cyc : pool_cycles) {
      int top = 0;
      for (const auto &c : cyc)
        for (int v : c)
          top = std::max(top, v);
      if (static_cast<std::size_t>(top) <= n)
        pool.push_back(Permutation::from_cycles(cyc, n));
    }
    std::vector<Permutation> required{Permutation::transposition(n, 1, 2)};
    if (n >= 3)
      required.push_back(Permutation::from_cycles({{1, 2, 3}}, n));

    std::set<PermSet, bool (*)(const PermSet &, const PermSet &)> seen(
        [](const PermSet &a, const PermSet &b) { return a.members() < b.members(); });
    for (const auto &req : required) {
      // The required generator alone, with one extra, or with two extras.
      std::vector<std::vector<Permutation>> gen_sets{{req}};
      for (std::size_t i = 0; i < pool.size(); ++i) {
        gen_sets.push_back({req, pool[i]});
        for (std::size_t j = i + 1; j < pool.size(); ++j)
          gen_sets.push_back({req, pool[i], pool[j]});
      }
      for (const auto &gens : gen_sets) {
        PermSet G = detail::generate_group(gens, n);
        if (!seen.insert(G).second)
          continue;
        if (!is_jacobi(G)) {
          nlohmann::json gj = nlohmann::json::array();
          for (const auto &g : gens)
            gj.push_back(format_cycles(g));
          return std::pair{false, nlohmann::json{{"generators", gj}, {"order", G.size()}}};
        }
      }
    }
    return std::pair{true, nlohmann::json{{"distinct_subgroups", seen.size()}}};
  });

  return rep;
}

} // namespace jset
