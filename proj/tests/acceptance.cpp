// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact;
// the wall-clock budget of each criterion is part of its pass condition.

#include "jset/jset.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace jset;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines; // detail printed under the verdict

  void check(bool ok, const std::string &what) {
    if (!ok)
      pass = false;
    lines.push_back(std::string(ok ? "ok    " : "FAILED") + " " + what);
  }
  void info(const std::string &what) { lines.push_back("info   " + what); }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome &)> body;
};

PermSet from_words(std::size_t n, std::initializer_list<std::initializer_list<int>> words) {
  PermSet s(n);
  for (const auto &w : words)
    s.insert(Permutation::from_one_line(w));
  return s;
}

std::string kln(std::size_t k, std::size_t l, std::size_t n) {
  return "T_{" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(n) + "}";
}

PermSet random_2jacobi(std::size_t n, const std::vector<BasisElement> &basis,
                       std::mt19937_64 &rng) {
  PermSet acc(n);
  for (const auto &b : basis)
    if (rng() & 1U)
      acc = symmetric_difference(acc, b.set);
  return acc;
}

void listed_identities(Outcome &o) {
  struct Golden {
    std::size_t k, l;
    PermSet set;
  };
  const std::vector<Golden> goldens{
      {1, 1, from_words(2, {{1, 2}, {2, 1}})},
      {1, 2, from_words(3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}})},
      {2, 2, from_words(4, {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}})},
      {1, 3, from_words(4, {{1, 2, 3, 4}, {3, 1, 2, 4}, {4, 1, 2, 3}, {1, 4, 3, 2}, {2, 3, 4, 1}})},
      {2, 3, from_words(5, {{1, 2, 3, 4, 5}, {2, 1, 4, 3, 5}, {2, 1, 5, 3, 4}, {1, 2, 5, 4, 3},
                            {3, 4, 5, 1, 2}, {4, 3, 5, 2, 1}})},
      {3, 3, from_words(6, {{1, 2, 3, 4, 5, 6}, {2, 1, 3, 5, 4, 6}, {2, 1, 3, 6, 4, 5},
                            {1, 2, 3, 6, 5, 4}, {4, 5, 6, 1, 2, 3}, {5, 4, 6, 2, 1, 3},
                            {5, 4, 6, 3, 1, 2}, {4, 5, 6, 3, 2, 1}})},
  };
  for (const auto &g : goldens) {
    const auto T = build_T(g.k, g.l, g.k + g.l);
    o.check(T == g.set, kln(g.k, g.l, g.k + g.l) + " matches the listed set");
    o.check(jacobi_residual(T).is_zero(), kln(g.k, g.l, g.k + g.l) + " beta(Sum) = 0");
  }
}

void family_sweep(Outcome &o) {
  std::size_t checked = 0, failed = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t l = 1; k + l <= n; ++l) {
        ++checked;
        if (!is_jacobi(build_T(k, l, n))) {
          ++failed;
          o.check(false, kln(k, l, n) + " is Jacobi");
        }
      }
  o.check(failed == 0, std::to_string(checked) + " sets T_{k,l,n}, k+l <= n <= 6, are Jacobi");
}

void expansion_oracle(Outcome &o) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t mismatches = 0;
    const auto perms = all_permutations(n);
    for (const auto &sigma : perms)
      if (expand_bracket_shuffle(sigma) != expand_bracket_recursive(sigma))
        ++mismatches;
    o.check(mismatches == 0,
            "n = " + std::to_string(n) + ": " + std::to_string(perms.size()) + " expansions agree");
  }
}

void block_brackets(Outcome &o) {
  std::size_t pairs = 0, bad = 0;
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t l = 1; k + l <= 6; ++l) {
      ++pairs;
      std::vector<int> first, second;
      for (std::size_t i = 1; i <= k; ++i)
        first.push_back(static_cast<int>(i));
      for (std::size_t i = k + 1; i <= k + l; ++i)
        second.push_back(static_cast<int>(i));
      const bool c_ok = bracket_of_blocks(first, second) == beta(sum_of_set(build_C(k, l)));
      const bool phi_ok = bracket_of_blocks(second, first) ==
                          beta(sum_of_set(left_translate(build_Phi(k, l), build_C(l, k))));
      if (!c_ok || !phi_ok) {
        ++bad;
        o.check(false, "k=" + std::to_string(k) + " l=" + std::to_string(l));
      }
    }
  o.check(bad == 0, std::to_string(pairs) + " pairs (k,l) with k+l <= 6: both block brackets match");
}

void disjointness_sizes(Outcome &o) {
  std::size_t bad = 0;
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t l = 1; l <= 6; ++l) {
      const auto C = build_C(k, l);
      const auto PC = left_translate(build_Phi(k, l), build_C(l, k));
      const auto T = build_T(k, l, k + l);
      const std::size_t expected = (std::size_t{1} << (k - 1)) + (std::size_t{1} << (l - 1));
      if (!C.disjoint_from(PC) || T.size() != expected)
        ++bad;
    }
  o.check(bad == 0, "36 pairs k,l <= 6: parts disjoint, |T_{k,l}| = 2^{k-1} + 2^{l-1}");
  // Term counts of the six listed identities.
  const std::size_t kl[6][2] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}};
  const std::size_t terms[6] = {2, 3, 4, 5, 6, 8};
  for (int i = 0; i < 6; ++i)
    o.check(build_T(kl[i][0], kl[i][1], kl[i][0] + kl[i][1]).size() == terms[i],
            kln(kl[i][0], kl[i][1], kl[i][0] + kl[i][1]) + " has " + std::to_string(terms[i]) +
                " terms");
}

void kernel_ranks(Outcome &o) {
  const std::size_t expected[] = {0, 0, 1, 4, 18, 96, 600};
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::size_t N = factorial(n);
    const auto q = N - int_rank(build_beta_matrix(n));
    const auto two = N - gf2_rank(build_beta_matrix_gf2(n));
    o.check(q == expected[n] && two == expected[n] && expected[n] == factorial(n - 1) * (n - 1),
            "n = " + std::to_string(n) + ": kernel rank Q " + std::to_string(q) + ", GF(2) " +
                std::to_string(two) + ", expected " + std::to_string(expected[n]));
  }
}

void kernel_basis(Outcome &o) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Report rep = verify_theorem2(n, 5);
    std::string names;
    for (const auto &c : rep.claims) {
      names += (names.empty() ? "" : ", ") + c.name;
      if (c.status != ClaimStatus::verified)
        names += " (FALSIFIED)";
    }
    o.check(rep.all_verified(), "n = " + std::to_string(n) + ": " + names);
    if (n <= 5)
      o.check(rep.find("integer-kernel-spanned") != nullptr,
              "n = " + std::to_string(n) + ": integer span check ran");
  }
}

void counts(Outcome &o) {
  const auto all = all_permutations(3);
  std::size_t jac = 0, two = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    PermSet T(3);
    for (std::size_t i = 0; i < 6; ++i)
      if ((mask >> i) & 1U)
        T.insert(all[i]);
    jac += is_jacobi(T);
    two += is_2jacobi(T);
  }
  o.check(jac == 10, "direct sweep over 64 subsets of S_3: " + std::to_string(jac) + " Jacobi");
  o.check(two == 16, "direct sweep over 64 subsets of S_3: " + std::to_string(two) + " 2-Jacobi");
  o.check(enumerate_jacobi(3).count == 10, "enumerate_jacobi(3) = 10");
  const auto t3 = enumerate_2jacobi(3);
  o.check(t3.count == 16 && t3.exhaustive == std::optional<std::uint64_t>(16),
          "enumerate_2jacobi(3) = 16, exhaustive sweep agrees");
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t e = n == 1 ? 0 : factorial(n - 1) * (n - 1);
    const auto c = enumerate_2jacobi(n);
    o.check(c.count == (Integer(1) << static_cast<unsigned>(e)),
            "enumerate_2jacobi(" + std::to_string(n) + ") = 2^" + std::to_string(e));
  }
}

void two_jacobi_structure(Outcome &o) {
  const PermSet stated = parse_perm_set("() (123) (13)", 3);
  const bool stated_2 = is_2jacobi(stated), stated_j = is_jacobi(stated);
  o.check(stated_2 && !stated_j, "{(), (123), (13)} is 2-Jacobi and not Jacobi: 2-Jacobi=" +
                                     std::string(stated_2 ? "yes" : "no") +
                                     ", Jacobi=" + (stated_j ? "yes" : "no"));
  if (!stated_2)
    o.info("beta(Sum) mod 2 = " + to_text(jacobi_residual_mod2(stated)) +
           "; (123) is read as 1->2->3->1, one-line [2,3,1]");

  try {
    PermSet acc(3);
    for (const auto &b : decompose_2jacobi(stated))
      acc = symmetric_difference(acc, b.set);
    o.check(acc == stated, "decompose_2jacobi({(), (123), (13)}) recombines");
  } catch (const NotTwoJacobi &e) {
    o.check(false, "decompose_2jacobi({(), (123), (13)}) rejected, residual " +
                       to_text(e.residual()));
  }

  // The same shape with the other 3-cycle.
  const PermSet other = parse_perm_set("() (132) (13)", 3);
  o.info("{(), (132), (13)}: 2-Jacobi=" + std::string(is_2jacobi(other) ? "yes" : "no") +
         ", Jacobi=" + (is_jacobi(other) ? "yes" : "no"));
  if (is_2jacobi(other)) {
    PermSet acc(3);
    const auto parts = decompose_2jacobi(other);
    for (const auto &b : parts)
      acc = symmetric_difference(acc, b.set);
    o.info("decompose_2jacobi({(), (132), (13)}): " + std::to_string(parts.size()) +
           " basis sets, recombines=" + (acc == other ? "yes" : "no"));
  }

  std::mt19937_64 rng(20240601);
  for (std::size_t n : {4, 5}) {
    const auto basis = theorem2_basis(n);
    std::size_t bad = 0;
    for (int t = 0; t < 200; ++t) {
      const auto a = random_2jacobi(n, basis, rng);
      const auto b = random_2jacobi(n, basis, rng);
      if (!is_2jacobi(a) || !is_2jacobi(b) || !is_2jacobi(symmetric_difference(a, b)))
        ++bad;
    }
    o.check(bad == 0, "n = " + std::to_string(n) +
                          ": 200 symmetric differences of 2-Jacobi sets are 2-Jacobi");
  }
}

void non_obtainability(Outcome &o) {
  const PermSet target = from_words(4, {{1, 2, 3, 4}, {3, 1, 2, 4}, {4, 1, 2, 3},
                                        {1, 4, 3, 2}, {4, 3, 2, 1}, {2, 4, 3, 1}});
  o.check(is_jacobi(target), "six-element S_4 target is Jacobi");
  const auto r = obtainability_check(target);
  o.check(!r.found && r.exhausted,
          "target: no cover, search exhausted (" + std::to_string(r.candidates) + " of " +
              std::to_string(r.family_size) + " translated sets fit inside)");
  for (std::size_t k = 1; k < 4; ++k)
    for (std::size_t l = 1; k + l <= 4; ++l) {
      const auto T = build_T(k, l, 4);
      const auto c = obtainability_check(T);
      o.check(c.found && verify_cover(T, c.cover), kln(k, l, 4) + ": verified cover");
    }
  const auto piece_a = from_words(4, {{1, 2, 3, 4}, {2, 1, 3, 4}});
  const auto piece_b = left_translate(Permutation::from_one_line({3, 4, 1, 2}), build_T(1, 2, 4));
  const auto u = set_union(piece_a, piece_b);
  const auto c = obtainability_check(u);
  o.check(piece_a.disjoint_from(piece_b) && c.found && verify_cover(u, c.cover),
          "disjoint union of T_{1,1,4} and a translate of T_{1,2,4}: verified cover");
}

void theta_probe(Outcome &o) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto basis = theorem2_basis(n);
    std::vector<BitVector> bits;
    for (const auto &b : basis)
      bits.push_back(indicator(b.set));
    const GF2Matrix span = GF2Matrix::from_columns(bits, factorial(n));
    for (std::size_t j = 2; j <= n; ++j) {
      const auto th = theta(j, n);
      const auto sum_t = sum_of_set(build_T(j - 1, 1, n));
      const std::string tag = "j=" + std::to_string(j) + " n=" + std::to_string(n);
      o.check(beta(th).is_zero() && gf2_solve(span, reduce_mod2(th)).has_value(),
              tag + ": beta(theta) = 0, theta in GF(2) span");
      o.info(tag + ": theta " + (th == sum_t ? "==" : "!=") + " Sum(" + kln(j - 1, 1, n) +
             "), difference in kernel: " + (beta(th - sum_t).is_zero() ? "yes" : "no"));
    }
  }
}

void jacobi_count_n4(Outcome &o) {
  const auto first = enumerate_jacobi(4);
  const auto second = enumerate_jacobi(4);
  o.check(first.count == second.count,
          "Gray-code sweep over 2^24 subsets of S_4: " + std::to_string(first.count) +
              " Jacobi subsets (stable across two runs)");
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "listed identities reproduced by build_T", 1, listed_identities},
      {2, "T_{k,l,n} Jacobi for k+l <= n <= 6", 10, family_sweep},
      {3, "shuffle expansion equals recursive expansion, n <= 6", 30, expansion_oracle},
      {4, "block brackets equal beta(Sum(C)) and beta(Sum(Phi C))", 5, block_brackets},
      {5, "C and Phi*C disjoint, |T_{k,l}| = 2^{k-1}+2^{l-1}", 1, disjointness_sizes},
      {6, "kernel rank of beta_n = (n-1)!(n-1), Q and GF(2), n <= 6", 600, kernel_ranks},
      {7, "kernel basis: Jacobi, independent, spans integer kernel", 300, kernel_basis},
      {8, "Jacobi and 2-Jacobi counts", 5, counts},
      {9, "2-Jacobi structure and decomposition", 10, two_jacobi_structure},
      {10, "six-element S_4 set not obtainable; controls covered", 30, non_obtainability},
      {11, "theta_{j,n} kernel probe", 5, theta_probe},
      {12, "Jacobi count for n = 4", 120, jacobi_count_n4},
  };

  int failed = 0;
  for (const auto &c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception &e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream budget;
    budget.precision(3);
    budget << std::fixed << secs << " s of " << c.budget_seconds << " s";
    o.check(secs < c.budget_seconds, "runtime " + budget.str());
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << '\n';
    for (const auto &line : o.lines)
      std::cout << "       " << line << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
