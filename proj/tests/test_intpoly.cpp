#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "lspace/intpoly.hpp"

namespace lspace {
namespace {

// Dense schoolbook product, independent of the sparse implementation.
std::vector<long long> dense_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntPolynomial from_ll(const std::vector<long long>& c) {
  IntPolynomial p;
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term(i, c[i]);
  return p;
}

// Power series a(t) / (1 - t) up to degree n by running sums.
std::vector<long long> series_oracle(const std::vector<long long>& a, std::size_t n) {
  std::vector<long long> out(n + 1, 0);
  long long acc = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i < a.size()) acc += a[i];
    out[i] = acc;
  }
  return out;
}

const IntPolynomial kT37{{0, 1}, {1, -1}, {3, 1}, {4, -1}, {6, 1}, {8, -1}, {9, 1}, {11, -1}, {12, 1}};

TEST(IntPolynomial, AddCancels) {
  EXPECT_EQ(poly_add({{0, 1}, {1, -1}}, {{1, 1}}), (IntPolynomial{{0, 1}}));
  IntPolynomial p{{2, 5}, {7, -3}};
  EXPECT_EQ(poly_add(IntPolynomial(), p), p);
  EXPECT_EQ(poly_add({{0, 1}, {1, -1}, {2, 1}}, {{1, 1}, {2, -1}}), (IntPolynomial{{0, 1}}));
}

TEST(IntPolynomial, ZeroPolynomialHasNoDegree) {
  IntPolynomial z = IntPolynomial{{1, 1}} - IntPolynomial{{1, 1}};
  EXPECT_TRUE(z.is_zero());
  EXPECT_THROW(z.degree(), Error);
  EXPECT_EQ(z.to_string(), "0");
}

TEST(IntPolynomial, Multiply) {
  EXPECT_EQ(poly_mul({{0, 1}, {1, -1}}, {{0, 1}, {1, 1}}), (IntPolynomial{{0, 1}, {2, -1}}));
  IntPolynomial p{{3, 2}, {5, -1}};
  EXPECT_EQ(poly_mul(IntPolynomial::constant(1), p), p);

  const std::vector<long long> a{1, 0, -1, 0, 1};
  const std::vector<long long> b{1, -1, 1, -1, 1, -1, 1};
  const auto expected = from_ll(dense_mul(a, b));
  EXPECT_EQ(expected, (IntPolynomial{{0, 1}, {1, -1}, {4, 1}, {5, -1}, {6, 1}, {9, -1}, {10, 1}}));
  EXPECT_EQ(poly_mul(from_ll(a), from_ll(b)), expected);
}

TEST(IntPolynomial, ExactDivision) {
  auto binom = [](std::uint64_t n) { return IntPolynomial{{n, 1}, {0, -1}}; };
  EXPECT_EQ(poly_exact_div(binom(21) * binom(1), binom(3) * binom(7)), kT37);
  EXPECT_EQ(poly_exact_div(binom(2), binom(1)), (IntPolynomial{{0, 1}, {1, 1}}));
  try {
    poly_exact_div({{2, 1}, {0, 1}}, binom(1));
    FAIL() << "expected NotDivisible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
  }
  EXPECT_THROW(poly_exact_div(binom(2), IntPolynomial()), Error);
}

TEST(IntPolynomial, NonMonicDivisorNeedsIntegerQuotient) {
  IntPolynomial two_t{{1, 2}};
  EXPECT_EQ(poly_exact_div({{3, 4}, {1, 2}}, two_t), (IntPolynomial{{2, 2}, {0, 1}}));
  try {
    poly_exact_div({{2, 3}}, two_t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
  }
}

TEST(IntPolynomial, SubstitutePower) {
  EXPECT_EQ(substitute_power({{0, 1}, {1, -1}, {2, 1}}, 2), (IntPolynomial{{0, 1}, {2, -1}, {4, 1}}));
  EXPECT_EQ(substitute_power(kT37, 1), kT37);
  EXPECT_EQ(substitute_power({{0, 1}, {1, -1}, {3, 1}}, 3), (IntPolynomial{{0, 1}, {3, -1}, {9, 1}}));
}

TEST(IntPolynomial, TorusAlexander) {
  EXPECT_EQ(torus_alexander(3, 7), kT37);
  EXPECT_EQ(torus_alexander(1, 5), IntPolynomial::constant(1));
  EXPECT_EQ(torus_alexander(2, 3), (IntPolynomial{{0, 1}, {1, -1}, {2, 1}}));
  EXPECT_EQ(torus_alexander(7, 3), kT37);
  try {
    torus_alexander(4, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
  }
}

TEST(IntPolynomial, TorusAlexanderShape) {
  for (std::int64_t p = 1; p <= 9; ++p) {
    for (std::int64_t q = 1; q <= 17; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto d = torus_alexander(p, q);
      EXPECT_EQ(d.coefficient(0), 1);
      EXPECT_EQ(d.leading_coefficient(), 1);
      EXPECT_EQ(d.degree(), static_cast<std::uint64_t>((p - 1) * (q - 1)));
      int sign = 1;
      for (const auto& [e, c] : d.terms()) {
        EXPECT_EQ(c, sign) << "T(" << p << "," << q << ") at t^" << e;
        sign = -sign;
      }
    }
  }
}

TEST(IntPolynomial, CableAlexander) {
  const auto t23 = torus_alexander(2, 3);
  EXPECT_EQ(cable_alexander(t23, 2, 7), (IntPolynomial{{0, 1}, {1, -1}, {4, 1}, {5, -1}, {6, 1}, {9, -1}, {10, 1}}));
  EXPECT_EQ(cable_alexander(kT37, 1, 4), kT37);
  const auto j3 = cable_alexander(t23, 3, 5);
  EXPECT_EQ(j3.degree(), 14u);
  EXPECT_EQ(j3.coefficient(0), 1);
  EXPECT_EQ(j3.leading_coefficient(), 1);
  // product oracle on dense coefficients
  const auto expected = from_ll(dense_mul({1, 0, 0, -1, 0, 0, 1}, {1, -1, 0, 1, -1, 1, 0, -1, 1}));
  EXPECT_EQ(j3, expected);
}

TEST(IntPolynomial, AlexanderFunctionPrefix) {
  const std::vector<int> t37{1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1};
  EXPECT_EQ(alexander_function_prefix(kT37, 14), t37);
  EXPECT_EQ(alexander_function_prefix(IntPolynomial::constant(1), 3), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(alexander_function_prefix(torus_alexander(2, 3), 4), (std::vector<int>{1, 0, 1, 1, 1}));

  try {
    alexander_function_prefix({{0, 1}, {1, 1}}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLSpaceShape);
  }
}

TEST(IntPolynomial, AlexanderFunctionMatchesSeriesOracle) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {3, 7}, {4, 9}, {5, 6}}) {
    const auto d = torus_alexander(p, q);
    std::vector<long long> dense;
    for (const auto& c : d.dense()) dense.push_back(static_cast<long long>(c));
    const auto n = d.degree() + 5;
    const auto oracle = series_oracle(dense, n);
    const auto got = alexander_function_prefix(d, n);
    for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(got[i], oracle[i]);

    // (1 - t) * prefix reproduces Delta up to degree n
    IntPolynomial back;
    for (std::size_t i = 0; i <= n; ++i) {
      back.add_term(i, got[i]);
      if (i + 1 <= n) back.add_term(i + 1, -got[i]);
    }
    IntPolynomial truncated;
    for (const auto& [e, c] : d.terms())
      if (e <= n) truncated.add_term(e, c);
    EXPECT_EQ(back, truncated);
  }
}

TEST(IntPolynomial, DivisionInvertsMultiplication) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> len(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long long> a(len(rng)), b(len(rng));
    for (auto& c : a) c = coeff(rng);
    for (auto& c : b) c = coeff(rng);
    if (b.back() == 0) b.back() = 1;
    const auto pa = from_ll(a);
    const auto pb = from_ll(b);
    EXPECT_EQ(pa * pb, from_ll(dense_mul(a, b)));
    EXPECT_EQ(poly_exact_div(pa * pb, pb), pa);
  }
}

TEST(IntPolynomial, BigCoefficientsStayExact) {
  IntPolynomial p{{0, 1}, {1, 1}};
  IntPolynomial acc = IntPolynomial::constant(1);
  for (int i = 0; i < 80; ++i) acc = acc * p;
  // central binomial coefficient C(80,40) exceeds 64 bits
  EXPECT_EQ(acc.coefficient(40).str(), "107507208733336176461620");
  for (int i = 0; i < 80; ++i) acc = poly_exact_div(acc, p);
  EXPECT_EQ(acc, IntPolynomial::constant(1));
}

TEST(IntPolynomial, ShapeChecks) {
  EXPECT_FALSE(lspace_shape_violation(kT37));
  EXPECT_TRUE(is_palindromic(kT37));
  EXPECT_TRUE(lspace_shape_violation({{0, 1}, {1, -1}, {3, 1}}));  // odd degree
  EXPECT_TRUE(lspace_shape_violation({{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_TRUE(lspace_shape_violation({{0, -1}, {1, 1}, {2, -1}}));
  EXPECT_TRUE(lspace_shape_violation(IntPolynomial()));
  EXPECT_FALSE(is_palindromic({{0, 1}, {1, -1}, {3, 1}, {4, -1}, {6, 1}}));
}

TEST(IntPolynomial, TextRoundTrip) {
  EXPECT_EQ(kT37.to_string(), "1 - t + t^3 - t^4 + t^6 - t^8 + t^9 - t^11 + t^12");
  EXPECT_EQ(parse_polynomial(kT37.to_string()), kT37);
  EXPECT_EQ(parse_polynomial("1 - t + t^3"), (IntPolynomial{{0, 1}, {1, -1}, {3, 1}}));
  EXPECT_EQ(parse_polynomial("-3*t^2 + 2t + 1"), (IntPolynomial{{2, -3}, {1, 2}, {0, 1}}));
  EXPECT_EQ(parse_polynomial("t - t"), IntPolynomial());
  EXPECT_EQ(parse_polynomial("3 t"), (IntPolynomial{{1, 3}}));
  EXPECT_THROW(parse_polynomial(""), SyntaxError);
  EXPECT_THROW(parse_polynomial("1 + + t"), SyntaxError);
  EXPECT_THROW(parse_polynomial("t^"), SyntaxError);
  try {
    parse_polynomial("t^2 3");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
}

}  // namespace
}  // namespace lspace
