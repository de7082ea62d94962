#include <gtest/gtest.h>

#include <random>

#include "lieons/multivector.hpp"
#include "test_util.hpp"

using namespace lieons;
using lieons::testing::random_multivector;

namespace {

MultiVector xi(int n, std::vector<int> idx, AffinePoly c = AffinePoly::constant_of(1)) {
  return MultiVector::monomial(n, idx, c);
}

int sgn(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

TEST(Wedge, SignsAndRepeats) {
  EXPECT_EQ(wedge(xi(3, {1}), xi(3, {2})), xi(3, {1, 2}));
  EXPECT_EQ(wedge(xi(3, {2}), xi(3, {1})), Rational(-1) * xi(3, {1, 2}));
  auto p = xi(3, {1, 2}, AffinePoly::x(3));
  EXPECT_TRUE(wedge(p, p).is_zero());
  EXPECT_THROW(wedge(xi(3, {1}), xi(4, {1})), std::invalid_argument);
}

TEST(Wedge, RejectsQuadraticCoefficients) {
  auto a = xi(3, {1}, AffinePoly::x(1));
  auto b = xi(3, {2}, AffinePoly::x(2));
  EXPECT_THROW(wedge(a, b), std::domain_error);
}

TEST(Derivatives, CoordinateAndOdd) {
  auto p = xi(3, {1, 2}, AffinePoly::x(3));
  EXPECT_EQ(d_dx(p, 3), xi(3, {1, 2}));
  EXPECT_TRUE(d_dx(p, 1).is_zero());
  MultiVector q = xi(3, {1}, AffinePoly::constant_of(5)) + xi(3, {2}, AffinePoly::x(2));
  EXPECT_EQ(d_dx(q, 2), xi(3, {2}));
  EXPECT_EQ(d_dxi(xi(3, {1, 2}), 1), xi(3, {2}));
  EXPECT_EQ(d_dxi(xi(3, {1, 2}), 2), Rational(-1) * xi(3, {1}));
  EXPECT_TRUE(d_dxi(p, 3).is_zero());
  EXPECT_THROW(d_dx(p, 4), std::out_of_range);
  EXPECT_THROW(d_dxi(p, 0), std::out_of_range);
}

TEST(Schouten, HeisenbergSquareVanishes) {
  auto p = xi(3, {1, 2}, AffinePoly::x(3));
  EXPECT_TRUE(schouten(p, p).is_zero());
}

TEST(Schouten, HamiltonianOfCoordinate) {
  auto p = xi(3, {1, 2}, AffinePoly::x(3));
  MultiVector f(3, 0);
  f.add({}, AffinePoly::x(1));
  EXPECT_EQ(schouten(p, f), xi(3, {2}, AffinePoly::x(3, -1)));
}

TEST(Schouten, IncompatibleTeesGiveNonzeroTrivector) {
  auto a = xi(4, {3, 4}, AffinePoly::x(1));
  auto b = xi(4, {1, 2}, AffinePoly::x(3));
  auto r = schouten(a, b);
  EXPECT_EQ(r.grade(), 3);
  EXPECT_FALSE(r.is_zero());
}

TEST(Schouten, VectorFieldsGiveLieBracket) {
  // [x1 d2, x2 d3] = x1 d3 up to the sign convention of the bracket.
  auto x = xi(3, {2}, AffinePoly::x(1));
  auto y = xi(3, {3}, AffinePoly::x(2));
  auto r = schouten(x, y);
  EXPECT_EQ(r.grade(), 1);
  EXPECT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(abs(r.coeff({3}).coeff(1)), 1);
}

class SchoutenIdentities : public ::testing::TestWithParam<int> {};

TEST_P(SchoutenIdentities, SkewJacobiBiderivation) {
  std::mt19937 rng(GetParam());
  std::uniform_int_distribution<int> dim(1, 5), grade(0, 3);
  for (int rep = 0; rep < 40; ++rep) {
    int n = dim(rng);
    int p = std::min(grade(rng), n), q = std::min(grade(rng), n), r = std::min(grade(rng), n);
    auto P = random_multivector(rng, n, p);
    auto Q = random_multivector(rng, n, q);
    auto R = random_multivector(rng, n, r);
    EXPECT_EQ(schouten(P, Q), Rational(-sgn((p - 1) * (q - 1))) * schouten(Q, P));
    auto lhs = schouten(P, schouten(Q, R));
    auto rhs = schouten(schouten(P, Q), R) + Rational(sgn((p - 1) * (q - 1))) * schouten(Q, schouten(P, R));
    EXPECT_EQ(lhs, rhs) << "n=" << n << " grades " << p << q << r;
    if (q + r <= n) {
      auto Qc = random_multivector(rng, n, q, false);
      auto left = schouten(P, wedge(Qc, R));
      auto right = wedge(schouten(P, Qc), R) + Rational(sgn((p - 1) * q)) * wedge(Qc, schouten(P, R));
      EXPECT_EQ(left, right);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SchoutenIdentities, ::testing::Values(1, 2, 3, 4));

TEST(WedgeProperties, AssociativeAndGradedCommutative) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> grade(0, 2);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 5;
    int p = grade(rng), q = grade(rng), r = grade(rng);
    auto P = random_multivector(rng, n, p);
    auto Q = random_multivector(rng, n, q, false);
    auto R = random_multivector(rng, n, r, false);
    EXPECT_EQ(wedge(wedge(P, Q), R), wedge(P, wedge(Q, R)));
    EXPECT_EQ(wedge(P, Q), Rational(sgn(p * q)) * wedge(Q, P));
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(mv_rank(xi(3, {1, 2}, AffinePoly::x(3))), 2);
  auto p = xi(5, {1, 2}, AffinePoly::x(5)) + xi(5, {3, 4}, AffinePoly::x(5));
  EXPECT_EQ(mv_rank(p), 4);
  EXPECT_EQ(mv_rank(MultiVector(4, 2)), 0);
  EXPECT_THROW(mv_rank(xi(3, {1})), std::invalid_argument);
}

TEST(Rank, EvenAndBoundedByDimension) {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 2 + rep % 5;
    auto p = random_multivector(rng, n, 2);
    int r = mv_rank(p);
    EXPECT_EQ(r % 2, 0);
    EXPECT_LE(r, n);
  }
}
