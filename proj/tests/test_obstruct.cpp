#include <gtest/gtest.h>

#include <random>

#include "lspace/obstruct.hpp"

namespace lspace {
namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

TEST(Decompose, Examples) {
  auto t23 = decompose_into_consecutive_torus(upsilon_of_knot(KnotExpr::torus(2, 3)));
  ASSERT_TRUE(t23.success);
  EXPECT_EQ(t23.coefficients, (std::map<std::int64_t, Rational>{{2, R(1)}}));

  auto t37 = decompose_into_consecutive_torus(upsilon_of_knot(KnotExpr::torus(3, 7)));
  ASSERT_TRUE(t37.integral());
  EXPECT_EQ(t37.coefficients, (std::map<std::int64_t, Rational>{{3, R(2)}}));

  auto j3 = decompose_into_consecutive_torus(j_family_upsilon(3));
  EXPECT_FALSE(j3.success);
  EXPECT_EQ(j3.failure_reason, DecompositionFailure::NonDyadicLocation);
  EXPECT_EQ(j3.failure_location, R(4, 5));
  EXPECT_EQ(j3.coefficients, (std::map<std::int64_t, Rational>{{5, R(1)}}));

  auto zero = decompose_into_consecutive_torus(PiecewiseLinear());
  EXPECT_TRUE(zero.integral());
  EXPECT_TRUE(zero.coefficients.empty());
}

TEST(Decompose, NegativeAndFractionalCoefficients) {
  auto f = pl_combine({{Integer(-3), torus_consecutive_upsilon(4)}, {Integer(2), torus_consecutive_upsilon(7)}});
  auto d = decompose_into_consecutive_torus(f);
  ASSERT_TRUE(d.integral());
  EXPECT_FALSE(d.all_nonnegative);
  EXPECT_EQ(d.coefficients, (std::map<std::int64_t, Rational>{{4, R(-3)}, {7, R(2)}}));

  auto half = pl_axpy(PiecewiseLinear(), R(1, 2), torus_consecutive_upsilon(3));
  auto h = decompose_into_consecutive_torus(half);
  EXPECT_TRUE(h.success);
  EXPECT_FALSE(h.all_integer);
  EXPECT_FALSE(h.integral());
}

TEST(Decompose, RecombinationReproducesInput) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::int64_t> pick_n(2, 20), coeff(-3, 3), count(1, 5);
  for (int trial = 0; trial < 80; ++trial) {
    std::map<std::int64_t, Rational> chosen;
    for (std::int64_t j = count(rng); j > 0; --j) chosen[pick_n(rng)] += coeff(rng);
    std::erase_if(chosen, [](const auto& kv) { return kv.second == 0; });
    const auto f = recombine(chosen);
    const auto d = decompose_into_consecutive_torus(f);
    ASSERT_TRUE(d.success);
    EXPECT_EQ(d.coefficients, chosen);
    EXPECT_EQ(recombine(d.coefficients), f);
  }
}

TEST(Decompose, AlgebraicKnotsDecomposeNonnegatively) {
  for (const char* text : {"T(2,5)", "T(4,9)", "T(5,7)", "C(T(2,3);2,13)", "C(T(2,3);3,19)", "C(T(3,4);2,25)"}) {
    const auto k = parse_knot(text);
    ASSERT_EQ(classify_algebraic(k), AlgebraicClass::Algebraic) << text;
    const auto d = decompose_into_consecutive_torus(upsilon_of_knot(k));
    EXPECT_TRUE(d.integral()) << text;
    EXPECT_TRUE(d.all_nonnegative) << text;
  }
}

TEST(Decompose, Preconditions) {
  auto expect_domain = [](const PiecewiseLinear& f) {
    try {
      decompose_into_consecutive_torus(f);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DomainError);
    }
  };
  expect_domain(PiecewiseLinear::linear(R(1), R(0)));
  expect_domain(PiecewiseLinear({R(0), R(1, 2), R(2)}, R(0), {R(-1), R(1, 3)}));
}

TEST(JumpEquality, Examples) {
  EXPECT_TRUE(jump_equality(upsilon_of_knot(KnotExpr::torus(3, 7)), 3).equal);
  auto j3 = jump_equality(j_family_upsilon(3), 5);
  EXPECT_FALSE(j3.equal);
  EXPECT_EQ(j3.at_two_over_p, R(5));
  EXPECT_EQ(j3.at_four_over_p, R(0));
  EXPECT_THROW(jump_equality(PiecewiseLinear(), 4), Error);
  EXPECT_THROW(jump_equality(PiecewiseLinear(), 1), Error);
}

TEST(Lambda, Examples) {
  EXPECT_EQ(lambda(3, j_family_upsilon(3)), R(1));
  EXPECT_EQ(lambda(4, j_family_upsilon(3)), R(0));
  EXPECT_EQ(lambda(3, upsilon_of_knot(KnotExpr::torus(5, 6))), R(0));
  EXPECT_THROW(lambda(1, PiecewiseLinear()), Error);
}

// lambda vanishes on every combination of the T(n,n+1) basis.
TEST(Lambda, VanishesOnBasisCombinations) {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<std::int64_t> pick_n(2, 20), coeff(-3, 3), count(1, 6), pick_k(2, 12);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<std::pair<Integer, PiecewiseLinear>> terms;
    for (std::int64_t j = count(rng); j > 0; --j)
      terms.emplace_back(Integer(coeff(rng)), torus_consecutive_upsilon(pick_n(rng)));
    const auto f = pl_combine(terms);
    const auto k = pick_k(rng);
    EXPECT_EQ(lambda(k, f), 0) << "k = " << k;
  }
}

TEST(IndependenceMatrix, LowerTriangularWithUnitDiagonal) {
  const auto m = independence_matrix(3, 10);
  ASSERT_EQ(m.entries.size(), 8u);
  for (std::int64_t k = 3; k <= 10; ++k) {
    EXPECT_EQ(m.at(k, k), 1) << k;
    for (std::int64_t i = k + 1; i <= 10; ++i) EXPECT_EQ(m.at(k, i), 0) << k << "," << i;
  }
  EXPECT_THROW(independence_matrix(2, 5), Error);
  EXPECT_THROW(independence_matrix(6, 5), Error);
}

TEST(Report, TorusIsAlgebraic) {
  const auto r = algebraicity_report(KnotExpr::torus(3, 7));
  EXPECT_EQ(r.verdict, Verdict::Algebraic);
  EXPECT_TRUE(r.reasons.empty());
  EXPECT_TRUE(r.semigroup_closed.closed);
  EXPECT_EQ(r.jump_tested, (std::vector<std::int64_t>{3}));
}

TEST(Report, JFourFailsJumpEquality) {
  const auto r = algebraicity_report(KnotExpr::j_family(4));
  EXPECT_EQ(r.verdict, Verdict::NotAlgebraic);
  EXPECT_TRUE(r.semigroup_closed.closed);
  std::vector<std::int64_t> failing;
  for (const auto& f : r.jump_equality_failures) failing.push_back(f.p);
  EXPECT_EQ(failing, (std::vector<std::int64_t>{5, 7}));
  EXPECT_EQ(r.jump_equality_failures.back().at_two_over_p, 7);
  EXPECT_EQ(r.jump_equality_failures.back().at_four_over_p, 0);
  EXPECT_FALSE(r.decomposition.integral());
  EXPECT_EQ(r.index_criterion, AlgebraicClass::NotAlgebraic);
}

TEST(Report, PretzelFailsClosure) {
  const auto r = algebraicity_report(KnotExpr::pretzel_p237());
  EXPECT_EQ(r.verdict, Verdict::NotAlgebraic);
  EXPECT_FALSE(r.semigroup_closed.closed);
  EXPECT_EQ(r.semigroup_closed.witness, (std::pair<std::int64_t, std::int64_t>{3, 3}));
  ASSERT_FALSE(r.reasons.empty());
  EXPECT_EQ(r.reasons.front().obstruction, "semigroup_closure");
  EXPECT_EQ(r.reasons.front().anchor, anchors::kSemigroupClosure);
}

TEST(Report, ExplicitPolynomialWithoutObstruction) {
  const auto r = algebraicity_report(KnotExpr::explicit_alexander(torus_alexander(2, 5)));
  EXPECT_EQ(r.verdict, Verdict::NoObstructionFound);
}

TEST(Report, NonLSpaceIsRejected) {
  try {
    algebraicity_report(parse_knot("C(T(2,3);2,1)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLSpace);
  }
}

}  // namespace
}  // namespace lspace
