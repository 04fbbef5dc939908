#include "jset/multilinear.hpp"
#include "jset/poly_io.hpp"

#include <gtest/gtest.h>

using namespace jset;

namespace {

Permutation P(std::initializer_list<int> v) { return Permutation::from_one_line(v); }

MultilinearPoly poly(std::size_t n,
                     std::initializer_list<std::pair<std::initializer_list<int>, int>> terms) {
  MultilinearPoly p(n);
  for (const auto &[w, c] : terms)
    p.add_term(Permutation::from_one_line(w), c);
  return p;
}

const MultilinearPoly bracket123 =
    poly(3, {{{1, 2, 3}, 1}, {{2, 1, 3}, -1}, {{3, 1, 2}, -1}, {{3, 2, 1}, 1}});

} // namespace

TEST(Monomial, Examples) {
  EXPECT_EQ(to_text(monomial(Permutation::identity(2))), "x1.x2");
  EXPECT_EQ(to_text(monomial(P({2, 1}))), "x2.x1");
  EXPECT_EQ(to_text(monomial(P({3, 1, 2}))), "x3.x1.x2");
}

TEST(SumOfSet, Examples) {
  EXPECT_TRUE(sum_of_set(PermSet(3)).is_zero());
  EXPECT_EQ(to_text(sum_of_set(build_T(1, 1, 2))), "x1.x2 + x2.x1");
  EXPECT_EQ(to_text(sum_of_set(build_T(1, 2, 3))), "x1.x2.x3 + x2.x3.x1 + x3.x1.x2");
}

TEST(ExpandRecursive, Examples) {
  EXPECT_EQ(expand_bracket_recursive(Permutation::identity(1)), monomial(Permutation::identity(1)));
  EXPECT_EQ(expand_bracket_recursive(Permutation::identity(2)),
            poly(2, {{{1, 2}, 1}, {{2, 1}, -1}}));
  EXPECT_EQ(expand_bracket_recursive(Permutation::identity(3)), bracket123);
}

TEST(ExpandShuffle, Examples) {
  EXPECT_EQ(expand_bracket_shuffle(Permutation::identity(2)),
            poly(2, {{{1, 2}, 1}, {{2, 1}, -1}}));
  EXPECT_EQ(expand_bracket_shuffle(Permutation::identity(3)), bracket123);
}

TEST(ExpandProperty, ShuffleFormulaMatchesRecursion) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto &sigma : all_permutations(n))
      ASSERT_EQ(expand_bracket_shuffle(sigma), expand_bracket_recursive(sigma))
          << format_one_line(sigma);
}

TEST(ExpandProperty, TermCountSignsAndLeadingTerm) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto &sigma : all_permutations(n)) {
      if (n == 7 && lex_rank(sigma) % 97 != 0)
        continue;
      const auto e = expand_bracket_recursive(sigma);
      EXPECT_EQ(e.size(), std::size_t{1} << (n - 1));
      for (const auto &[w, c] : e.terms())
        EXPECT_TRUE(c == 1 || c == -1);
      EXPECT_EQ(e.coefficient(sigma), 1);
    }
}

TEST(ExpandProperty, SwappingFirstTwoLettersNegates) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto &sigma : all_permutations(n))
      ASSERT_EQ(expand_bracket_recursive(sigma.swapped_front()), -expand_bracket_recursive(sigma));
}

TEST(Beta, Examples) {
  EXPECT_TRUE(beta(MultilinearPoly(4)).is_zero());
  EXPECT_TRUE(beta(sum_of_set(build_T(1, 1, 2))).is_zero());
  EXPECT_EQ(beta(monomial(Permutation::identity(3))), bracket123);
  // Linearity.
  const auto p = monomial(P({2, 3, 1}), 3) - monomial(P({1, 3, 2}), 2);
  EXPECT_EQ(beta(p), expand_bracket_recursive(P({2, 3, 1})) * Integer(3) -
                         expand_bracket_recursive(P({1, 3, 2})) * Integer(2));
}

TEST(BlockBracket, Examples) {
  EXPECT_EQ(bracket_of_two_blocks(1, 1), poly(2, {{{1, 2}, 1}, {{2, 1}, -1}}));
  EXPECT_EQ(bracket_of_two_blocks(1, 2), beta(sum_of_set(build_C(1, 2))));
  EXPECT_EQ(bracket_of_two_blocks(2, 1), beta(monomial(Permutation::identity(3))));
}

TEST(BlockBracketProperty, CSetsEncodeBlockBrackets) {
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t l = 1; k + l <= 6; ++l) {
      EXPECT_EQ(bracket_of_two_blocks(k, l), beta(sum_of_set(build_C(k, l))));
      std::vector<int> first, second;
      for (std::size_t i = 1; i <= k; ++i)
        first.push_back(static_cast<int>(i));
      for (std::size_t i = k + 1; i <= k + l; ++i)
        second.push_back(static_cast<int>(i));
      EXPECT_EQ(bracket_of_blocks(second, first),
                beta(sum_of_set(left_translate(build_Phi(k, l), build_C(l, k)))));
      EXPECT_TRUE(beta(sum_of_set(build_T(k, l, k + l))).is_zero());
    }
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(2, 2), poly(2, {{{1, 2}, 1}, {{2, 1}, 1}}));
  EXPECT_EQ(theta(3, 3), poly(3, {{{1, 2, 3}, 1}, {{3, 1, 2}, 1}, {{3, 2, 1}, -1}}));
  EXPECT_THROW(theta(1, 3), std::invalid_argument);
  EXPECT_THROW(theta(4, 3), std::invalid_argument);
}

TEST(ThetaProperty, KernelElementsWithExpectedSize) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t j = 2; j <= n; ++j) {
      const auto t = theta(j, n);
      EXPECT_EQ(t.size(), 1 + (std::size_t{1} << (j - 2)));
      EXPECT_TRUE(beta(t).is_zero()) << j << "," << n;
    }
}

TEST(PolyArithmetic, Basics) {
  const auto p = bracket123;
  EXPECT_TRUE(add(p, negate(p)).is_zero());
  EXPECT_EQ(scale(p, 0), MultilinearPoly(3));
  EXPECT_EQ(scale(p, 2) - p, p);
  EXPECT_THROW(p + MultilinearPoly(2), std::invalid_argument);
  MultilinearPoly q(2);
  q.add_term(P({1, 2}), 3);
  q.add_term(P({1, 2}), -3);
  EXPECT_TRUE(q.is_zero());
}

TEST(ReduceMod2, Parities) {
  const auto v = reduce_mod2(poly(2, {{{1, 2}, 1}, {{2, 1}, 2}}));
  EXPECT_EQ(v.to_string(), "10");
  const auto T = build_T(2, 2, 4);
  EXPECT_EQ(reduce_mod2(sum_of_set(T)), indicator(T));
  EXPECT_EQ(reduce_mod2(poly(3, {{{3, 2, 1}, -5}})).to_string(), "000001");
}

TEST(PolySerialization, TextAndJson) {
  EXPECT_EQ(to_text(bracket123), "x1.x2.x3 - x2.x1.x3 - x3.x1.x2 + x3.x2.x1");
  EXPECT_EQ(to_text(MultilinearPoly(3)), "0");
  EXPECT_EQ(to_text(poly(2, {{{2, 1}, -2}, {{1, 2}, 3}})), "3*x1.x2 - 2*x2.x1");
  const auto j = to_json(bracket123);
  EXPECT_EQ(j.dump(), R"([{"coefficient":1,"permutation":[1,2,3]},{"coefficient":-1,"permutation":[2,1,3]},{"coefficient":-1,"permutation":[3,1,2]},{"coefficient":1,"permutation":[3,2,1]}])");
  EXPECT_EQ(poly_from_json(j, 3), bracket123);

  MultilinearPoly big(2);
  big.add_term(P({1, 2}), Integer("123456789012345678901234567890"));
  EXPECT_EQ(poly_from_json(to_json(big), 2), big);
}

TEST(IdentityFormat, TextAndLatex) {
  EXPECT_EQ(format_identity(build_T(1, 1, 2), IdentityStyle::text), "[x1,x2]+[x2,x1] = 0");
  EXPECT_EQ(latex_identity(build_T(1, 2, 3)),
            "\\[ [x_1,x_2,x_3]+[x_2,x_3,x_1]+[x_3,x_1,x_2] = 0 \\]");
}
