#pragma once

// Text formats for permutations and permutation sets.
//
//   one-line:  "3 1 2"   (commas also accepted: "3,1,2")
//   cycles:    "(1 3 2)", "(132)", "(1,3)(2,4)", "()" for the identity
//   sets:      one permutation per line, several whitespace-separated cycle
//              permutations per line ("() (123) (13)"), or a bracketed list
//              "[[1,2,3],[2,3,1]]"; a JSON object with a "permutations"
//              array is read the same way. '#' starts a comment.
//
// A cycle-notation permutation only fixes a lower bound on the degree; it is
// extended to the degree of the surrounding set.

#include "jset/permutation.hpp"

#include <json.hpp>

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace jset {

inline std::string format_one_line(const Permutation &p) {
  std::string out;
  for (std::size_t i = 1; i <= p.degree(); ++i) {
    if (i > 1)
      out += ' ';
    out += std::to_string(p(static_cast<int>(i)));
  }
  return out;
}

inline std::string format_cycles(const Permutation &p) {
  const auto cycles = p.cycles();
  if (cycles.empty())
    return "()";
  std::string out;
  for (const auto &c : cycles) {
    out += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j > 0)
        out += ' ';
      out += std::to_string(c[j]);
    }
    out += ')';
  }
  return out;
}

/// One member per line, one-line notation, canonical order.
inline std::string format_perm_set(const PermSet &T) {
  std::string out;
  for (const auto &p : T) {
    out += format_one_line(p);
    out += '\n';
  }
  return out;
}

inline nlohmann::json perm_set_to_json(const PermSet &T) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &p : T)
    arr.push_back(p.one_line());
  return arr;
}

/// Single-line bracketed list, e.g. "[[1,2,3],[2,3,1]]".
inline std::string format_perm_set_bracketed(const PermSet &T) {
  return perm_set_to_json(T).dump();
}

namespace detail {

// A parsed permutation whose degree may still grow (cycle notation).
struct PendingPerm {
  std::vector<int> one_line;               // fixed degree when non-empty
  std::vector<std::vector<int>> cycles;    // otherwise
  std::size_t min_degree = 1;
  bool is_cycle_form = false;

  Permutation resolve(std::size_t degree) const {
    if (!is_cycle_form) {
      require(one_line.size() == degree, "permutation of degree " +
                                             std::to_string(one_line.size()) +
                                             " in a set of degree " + std::to_string(degree));
      return Permutation::from_one_line(one_line);
    }
    return Permutation::from_cycles(cycles, degree);
  }
};

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty())
      return;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(token, &pos);
    } catch (const std::exception &) {
      fail("not an integer: '" + token + "'");
    }
    require(pos == token.size(), "not an integer: '" + token + "'");
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',')
      flush();
    else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
      token += c;
    else
      fail(std::string("unexpected character '") + c + "' in permutation");
  }
  flush();
  return out;
}

// Parses one cycle-notation permutation such as "(1 3)(2 4)" or "()".
inline PendingPerm parse_cycle_word(std::string_view word) {
  PendingPerm pp;
  pp.is_cycle_form = true;
  std::size_t pos = 0;
  while (pos < word.size()) {
    require(word[pos] == '(', "expected '(' in cycle notation: '" + std::string(word) + "'");
    const auto close = word.find(')', pos);
    require(close != std::string_view::npos,
            "unbalanced parenthesis: '" + std::string(word) + "'");
    const std::string_view body = word.substr(pos + 1, close - pos - 1);
    std::vector<int> cycle;
    const bool separated = body.find_first_of(" \t,") != std::string_view::npos;
    if (separated) {
      cycle = parse_int_list(body);
    } else {
      // "(132)": single-digit points written without separators.
      for (char c : body) {
        require(std::isdigit(static_cast<unsigned char>(c)) && c != '0',
                "bad point '" + std::string(1, c) + "' in cycle '" + std::string(word) + "'");
        cycle.push_back(c - '0');
      }
    }
    for (int v : cycle) {
      require(v >= 1, "cycle entries must be positive");
      pp.min_degree = std::max(pp.min_degree, static_cast<std::size_t>(v));
    }
    if (cycle.size() >= 2)
      pp.cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return pp;
}

inline std::string strip_comment(const std::string &line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline PermSet resolve_all(const std::vector<PendingPerm> &pending,
                           std::optional<std::size_t> degree) {
  std::size_t deg = degree.value_or(0);
  std::optional<std::size_t> fixed;
  for (const auto &pp : pending) {
    if (!pp.is_cycle_form) {
      if (fixed)
        require(*fixed == pp.one_line.size(), "permutations of different degrees in one set");
      fixed = pp.one_line.size();
    }
  }
  if (fixed) {
    require(!degree || *degree == *fixed, "declared degree does not match the permutations");
    deg = *fixed;
  }
  for (const auto &pp : pending)
    deg = std::max(deg, pp.min_degree);
  if (deg == 0)
    deg = 1;
  std::vector<Permutation> members;
  for (const auto &pp : pending)
    members.push_back(pp.resolve(deg));
  return PermSet(deg, std::move(members));
}

} // namespace detail

namespace detail {

inline PendingPerm pending_from_text(std::string_view text) {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t\r\n");
  require(first != std::string::npos, "empty permutation");
  s = s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
  if (s.front() == '(') {
    // Inside a single permutation whitespace between cycles is insignificant.
    std::string compact;
    int depth = 0;
    for (char c : s) {
      if (c == '(')
        ++depth;
      if (c == ')')
        --depth;
      if (depth == 0 && std::isspace(static_cast<unsigned char>(c)))
        continue;
      compact += c;
    }
    return parse_cycle_word(compact);
  }
  if (s.front() == '[' && s.back() == ']')
    s = s.substr(1, s.size() - 2);
  PendingPerm pp;
  pp.one_line = parse_int_list(s);
  require(!pp.one_line.empty(), "empty permutation");
  return pp;
}

} // namespace detail

/// Parses a single permutation in one-line or cycle notation.
inline Permutation parse_permutation(std::string_view text,
                                     std::optional<std::size_t> degree = std::nullopt) {
  return detail::resolve_all({detail::pending_from_text(text)}, degree).members().front();
}

/// Parses a permutation set; see the header comment for accepted layouts.
inline PermSet parse_perm_set(std::string_view text,
                              std::optional<std::size_t> degree = std::nullopt) {
  std::string body(text);
  const auto first = body.find_first_not_of(" \t\r\n");
  std::vector<detail::PendingPerm> pending;

  if (first != std::string::npos && (body[first] == '[' || body[first] == '{')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception &e) {
      detail::fail(std::string("malformed bracketed permutation list: ") + e.what());
    }
    if (j.is_object()) {
      detail::require(j.contains("permutations"), "JSON object lacks a 'permutations' array");
      if (!degree && j.contains("n") && j["n"].is_number_unsigned())
        degree = j["n"].get<std::size_t>();
      j = j["permutations"];
    }
    detail::require(j.is_array(), "expected a JSON array of permutations");
    for (const auto &entry : j) {
      detail::PendingPerm pp;
      if (entry.is_string()) {
        pp = detail::pending_from_text(entry.get<std::string>());
      } else {
        detail::require(entry.is_array(), "permutation entries must be arrays");
        for (const auto &v : entry) {
          detail::require(v.is_number_integer(), "permutation entries must be integers");
          pp.one_line.push_back(v.get<int>());
        }
        detail::require(!pp.one_line.empty(), "empty permutation");
      }
      pending.push_back(std::move(pp));
    }
    return detail::resolve_all(pending, degree);
  }

  std::istringstream in(body);
  std::string line;
  while (std::getline(in, line)) {
    line = detail::strip_comment(line);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (line.find('(') != std::string::npos) {
      // Whitespace outside parentheses separates permutations; whitespace
      // inside a cycle is part of it.
      std::string current;
      int depth = 0;
      for (char c : line) {
        if (c == '(')
          ++depth;
        if (c == ')')
          --depth;
        detail::require(depth >= 0 && depth <= 1, "unbalanced parentheses in: " + line);
        if (depth == 0 && (std::isspace(static_cast<unsigned char>(c)) || c == '\r')) {
          if (!current.empty())
            pending.push_back(detail::parse_cycle_word(current));
          current.clear();
        } else {
          current += c;
        }
      }
      detail::require(depth == 0, "unbalanced parentheses in: " + line);
      if (!current.empty())
        pending.push_back(detail::parse_cycle_word(current));
    } else {
      detail::PendingPerm pp;
      pp.one_line = detail::parse_int_list(line);
      pending.push_back(std::move(pp));
    }
  }
  return detail::resolve_all(pending, degree);
}

} // namespace jset
