#pragma once

// Printing polynomials and bracket identities.

#include "jset/multilinear.hpp"
#include "jset/perm_io.hpp"

#include <json.hpp>

#include <limits>
#include <string>

namespace jset {

/// "x1.x2.x3 - x2.x1.x3 + 2*x3.x1.x2"; "0" for the zero polynomial.
inline std::string to_text(const MultilinearPoly &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[sigma, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (mag != 1)
      out += mag.str() + "*";
    for (std::size_t i = 1; i <= sigma.degree(); ++i) {
      if (i > 1)
        out += '.';
      out += 'x' + std::to_string(sigma(static_cast<int>(i)));
    }
  }
  return out;
}

/// Coefficients that fit in 64 bits are JSON integers, larger ones decimal
/// strings.
inline nlohmann::json integer_to_json(const Integer &c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max())
    return c.convert_to<std::int64_t>();
  return c.str();
}

/// [{"permutation":[...],"coefficient":c}, ...] in canonical order.
inline nlohmann::json to_json(const MultilinearPoly &p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &[sigma, c] : p.terms())
    arr.push_back({{"permutation", sigma.one_line()}, {"coefficient", integer_to_json(c)}});
  return arr;
}

inline MultilinearPoly poly_from_json(const nlohmann::json &j, std::size_t degree) {
  detail::require(j.is_array(), "polynomial JSON must be an array");
  MultilinearPoly p(degree);
  for (const auto &term : j) {
    const auto one_line = term.at("permutation").get<std::vector<int>>();
    const auto &c = term.at("coefficient");
    const Integer coeff = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::int64_t>());
    p.add_term(Permutation::from_one_line(one_line), coeff);
  }
  return p;
}

enum class IdentityStyle { text, latex };

/// "[x1,x2]+[x2,x1] = 0" (text) or "[x_1,x_2]+[x_2,x_1] = 0" (LaTeX body),
/// members in canonical order.
inline std::string format_identity(const PermSet &T, IdentityStyle style) {
  std::string out;
  bool first = true;
  for (const auto &sigma : T) {
    if (!first)
      out += '+';
    first = false;
    out += '[';
    for (std::size_t i = 1; i <= sigma.degree(); ++i) {
      if (i > 1)
        out += ',';
      out += style == IdentityStyle::latex ? "x_" : "x";
      const int v = sigma(static_cast<int>(i));
      out += style == IdentityStyle::latex && v >= 10 ? "{" + std::to_string(v) + "}"
                                                      : std::to_string(v);
    }
    out += ']';
  }
  if (first)
    out += '0';
  out += " = 0";
  return out;
}

/// A single displayed LaTeX equation.
inline std::string latex_identity(const PermSet &T) {
  return "\\[ " + format_identity(T, IdentityStyle::latex) + " \\]";
}

} // namespace jset
