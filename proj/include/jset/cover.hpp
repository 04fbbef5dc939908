#pragma once

// Whether a permutation set is a disjoint union of translated T_{k,l,n}.
//
// Obtainable sets are modelled as disjoint unions of sigma * T_{k,l,n} *
// (1,2)^e: left translation and right multiplication by (1,2) distribute over
// disjoint unions, so these pieces together with disjoint union generate
// everything reachable from the T_{k,l,n}. Deciding membership is an exact
// cover problem over the target's elements, solved by Algorithm X with the
// fewest-candidates column rule.

#include "jset/families.hpp"
#include "jset/perm_io.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace jset {

inline constexpr std::size_t cover_degree_cap = 4;

inline constexpr const char *cover_model_note =
    "obtainable sets are modelled as disjoint unions of sigma*T_{k,l,n}*(1,2)^e "
    "(sigma in S_n, e in {0,1}, k,l >= 1, k+l <= n); left translation and right "
    "(1,2)-multiplication distribute over disjoint unions, and subgroups containing "
    "(1,2) or (1,2,3) are such unions of cosets";

struct CoverPiece {
  Permutation sigma;
  std::size_t k = 1;
  std::size_t l = 1;
  bool swapped = false;
  PermSet set;
};

inline nlohmann::json to_json(const CoverPiece &p) {
  return {{"sigma", p.sigma.one_line()}, {"k", p.k}, {"l", p.l},
          {"right_swap", p.swapped}, {"set", perm_set_to_json(p.set)}};
}

struct CoverResult {
  bool found = false;
  std::vector<CoverPiece> cover;
  std::size_t family_size = 0; // distinct translated sets of the degree
  std::size_t candidates = 0;  // those contained in the target
  std::uint64_t nodes = 0;     // search nodes visited
  bool exhausted = false;      // search space fully explored without a cover
};

/// Distinct sets sigma * T_{k,l,n} * (1,2)^e, first description kept;
/// ordered by k, l, sigma, e.
inline std::vector<CoverPiece> translated_family(std::size_t n) {
  std::vector<CoverPiece> out;
  if (n < 2)
    return out;
  std::map<std::vector<Permutation>, bool> seen;
  const auto perms = all_permutations(n);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t l = 1; k + l <= n; ++l) {
      const PermSet T = build_T(k, l, n);
      for (const auto &sigma : perms)
        for (bool e : {false, true}) {
          PermSet s = left_translate(sigma, T);
          if (e)
            s = right_swap(s);
          if (seen.emplace(s.members(), true).second)
            out.push_back(CoverPiece{sigma, k, l, e, std::move(s)});
        }
    }
  return out;
}

/// True when the pieces are pairwise disjoint and their union is target.
inline bool verify_cover(const PermSet &target, const std::vector<CoverPiece> &pieces) {
  PermSet acc(target.degree());
  for (const auto &p : pieces) {
    if (p.set.degree() != target.degree() || !acc.disjoint_from(p.set))
      return false;
    acc = set_union(acc, p.set);
  }
  return acc == target;
}

namespace detail {

class ExactCover {
public:
  ExactCover(std::size_t universe, std::vector<std::uint64_t> rows)
      : universe_(universe), rows_(std::move(rows)) {}

  bool solve(std::vector<std::size_t> &chosen, std::uint64_t &nodes) {
    return search(0, chosen, nodes);
  }

private:
  bool search(std::uint64_t covered, std::vector<std::size_t> &chosen, std::uint64_t &nodes) {
    ++nodes;
    const std::uint64_t full =
        universe_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe_) - 1;
    if (covered == full)
      return true;
    // Column with the fewest rows still usable.
    std::size_t best_col = universe_;
    std::size_t best_count = SIZE_MAX;
    for (std::size_t c = 0; c < universe_; ++c) {
      if ((covered >> c) & 1U)
        continue;
      std::size_t count = 0;
      for (auto r : rows_)
        if (((r >> c) & 1U) && (r & covered) == 0)
          ++count;
      if (count < best_count) {
        best_count = count;
        best_col = c;
      }
    }
    if (best_count == 0)
      return false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto r = rows_[i];
      if (((r >> best_col) & 1U) && (r & covered) == 0) {
        chosen.push_back(i);
        if (search(covered | r, chosen, nodes))
          return true;
        chosen.pop_back();
      }
    }
    return false;
  }

  std::size_t universe_;
  std::vector<std::uint64_t> rows_;
};

} // namespace detail

/// Searches for a disjoint union of translated T_{k,l,n} equal to target.
inline CoverResult obtainability_check(const PermSet &target) {
  if (target.degree() > cover_degree_cap)
    throw CapExceeded("cover check is limited to degree <= " + std::to_string(cover_degree_cap));
  CoverResult out;
  const auto family = translated_family(target.degree());
  out.family_size = family.size();

  std::vector<const CoverPiece *> candidates;
  std::vector<std::uint64_t> rows;
  for (const auto &piece : family) {
    if (piece.set.empty() || !piece.set.is_subset_of(target))
      continue;
    std::uint64_t mask = 0;
    for (const auto &p : piece.set) {
      const auto pos = std::lower_bound(target.begin(), target.end(), p) - target.begin();
      mask |= std::uint64_t{1} << pos;
    }
    candidates.push_back(&piece);
    rows.push_back(mask);
  }
  out.candidates = candidates.size();

  detail::ExactCover solver(target.size(), rows);
  std::vector<std::size_t> chosen;
  out.found = solver.solve(chosen, out.nodes);
  out.exhausted = !out.found;
  if (out.found) {
    for (auto i : chosen)
      out.cover.push_back(*candidates[i]);
    if (!verify_cover(target, out.cover))
      throw InternalError("exact cover solver returned an invalid cover");
  }
  return out;
}

inline nlohmann::json to_json(const CoverResult &r) {
  nlohmann::json j{{"cover_found", r.found},
                   {"family_size", r.family_size},
                   {"candidates_inside_target", r.candidates},
                   {"search_nodes", r.nodes},
                   {"search_exhausted", r.exhausted},
                   {"model", cover_model_note}};
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto &p : r.cover)
    pieces.push_back(to_json(p));
  j["cover"] = std::move(pieces);
  return j;
}

} // namespace jset
