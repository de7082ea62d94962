#include <gtest/gtest.h>

#include <random>

#include "lieons/lie.hpp"
#include "test_util.hpp"

using namespace lieons;
using namespace lieons::testing;

namespace {

LieStructure heisenberg() {
  LieStructure g(3);
  g.add(1, 2, 3, 1);
  return g;
}

LieStructure dee2() {
  LieStructure g(2);
  g.add(1, 2, 2, 1);
  return g;
}

LieStructure triangle() {
  LieStructure g(3);
  g.add(1, 2, 3, 1);
  g.add(2, 3, 1, 1);
  g.add(3, 1, 2, 1);
  return g;
}

// Direct sum placing h after g.
LieStructure direct_sum(const LieStructure& g, const LieStructure& h) {
  LieStructure s(g.dim() + h.dim());
  for (const auto& [k, c] : g.constants()) s.add(k[0], k[1], k[2], c);
  for (const auto& [k, c] : h.constants()) s.add(k[0] + g.dim(), k[1] + g.dim(), k[2] + g.dim(), c);
  return s;
}

Mat mat(std::initializer_list<std::initializer_list<long>> rows) {
  Mat m;
  for (auto r : rows) {
    Vec v;
    for (long x : r) v.push_back(Rational(x));
    m.push_back(v);
  }
  return m;
}

}  // namespace

TEST(Bracket, Basics) {
  auto h = heisenberg();
  EXPECT_EQ(bracket(h, unit(3, 0), unit(3, 1)), unit(3, 2));
  Vec u{1, 2, 3};
  EXPECT_TRUE(is_zero(bracket(h, u, u)));
  EXPECT_EQ(bracket(dee2(), unit(2, 1), unit(2, 0)), Rational(-1) * unit(2, 1));
  EXPECT_THROW(bracket(h, Vec{1, 2}, u), std::invalid_argument);
}

TEST(Bivector, RoundTripAndExamples) {
  auto h = heisenberg();
  EXPECT_EQ(to_bivector(h), MultiVector::monomial(3, {1, 2}, AffinePoly::x(3)));
  EXPECT_EQ(to_bivector(dee2()), MultiVector::monomial(2, {1, 2}, AffinePoly::x(2)));
  EXPECT_TRUE(to_bivector(LieStructure(4)).is_zero());
  EXPECT_EQ(from_bivector(to_bivector(h)), h);
  auto p = MultiVector::monomial(5, {1, 2}, AffinePoly::x(5)) + MultiVector::monomial(5, {3, 4}, AffinePoly::x(5));
  auto g = from_bivector(p);
  EXPECT_EQ(g.c(1, 2, 5), 1);
  EXPECT_EQ(g.c(3, 4, 5), 1);
  EXPECT_EQ(g.constants().size(), 2u);
  EXPECT_THROW(from_bivector(MultiVector::monomial(2, {1, 2}, AffinePoly::constant_of(1))), std::invalid_argument);
  std::mt19937 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    auto a = random_skew(rng, 5), b = random_skew(rng, 5);
    EXPECT_EQ(from_bivector(to_bivector(a)), a);
    EXPECT_EQ(to_bivector(a + Rational(3) * b), to_bivector(a) + Rational(3) * to_bivector(b));
  }
}

TEST(Jacobi, Examples) {
  EXPECT_TRUE(jacobi_defect(heisenberg()).is_zero());
  EXPECT_TRUE(jacobi_defect(LieStructure(3)).is_zero());
  LieStructure bad(3);
  bad.add(1, 2, 3, 1);
  bad.add(2, 3, 1, 1);
  bad.add(1, 3, 1, 1);
  EXPECT_FALSE(jacobi_defect(bad).is_zero());
  EXPECT_FALSE(cyclic_jacobi(bad));
}

TEST(Jacobi, AgreesWithCyclicOracle) {
  std::mt19937 rng(8);
  int positives = 0;
  for (int rep = 0; rep < 300; ++rep) {
    int n = 3 + rep % 5;
    auto g = rep % 3 == 0 ? random_solvable(rng, n) : random_skew(rng, n, 0.08);
    bool a = is_jacobi(g);
    EXPECT_EQ(a, cyclic_jacobi(g)) << g.str();
    positives += a;
  }
  EXPECT_GT(positives, 50);
}

TEST(Compatible, ExamplesAndPencils) {
  LieStructure a(5), b(5);
  a.add(1, 2, 5, 1);
  b.add(3, 4, 5, 1);
  EXPECT_TRUE(compatible(a, b));
  LieStructure c(4), d(4);
  c.add(1, 2, 3, 1);
  d.add(3, 4, 1, 1);
  EXPECT_FALSE(compatible(c, d));
  EXPECT_TRUE(compatible(c, LieStructure(4)));
  EXPECT_THROW(compatible(a, c), std::invalid_argument);

  std::mt19937 rng(21);
  for (int rep = 0; rep < 120; ++rep) {
    auto g1 = random_solvable(rng, 4);
    auto g2 = random_solvable(rng, 4);
    bool comp = compatible(g1, g2);
    EXPECT_EQ(comp, is_jacobi(g1 + g2));
    bool pencil = true;
    for (auto [s, t] : {std::pair{2, 3}, std::pair{-1, 5}, std::pair{7, -2}})
      pencil = pencil && is_jacobi(Rational(s) * g1 + Rational(t) * g2);
    EXPECT_EQ(comp, pencil);
  }
}

TEST(Modular, VectorExamples) {
  EXPECT_EQ(modular_vector(dee2()), (Vec{-1, 0}));
  EXPECT_TRUE(is_zero(modular_vector(heisenberg())));
  EXPECT_TRUE(is_zero(modular_vector(triangle())));
}

TEST(Modular, VanishesOnDerivedAndAdditive) {
  std::mt19937 rng(4);
  for (int rep = 0; rep < 60; ++rep) {
    auto g = random_solvable(rng, 3 + rep % 4);
    auto theta = modular_vector(g);
    for (const auto& v : derived_algebra(g)) EXPECT_EQ(dot(theta, v), 0);
  }
  for (int rep = 0; rep < 60; ++rep) {
    auto g1 = random_solvable(rng, 4), g2 = random_solvable(rng, 4);
    if (!compatible(g1, g2)) continue;
    EXPECT_EQ(modular_vector(g1 + g2), modular_vector(g1) + modular_vector(g2));
  }
}

TEST(Modular, SplitExamples) {
  auto s = modular_split(dee2());
  EXPECT_TRUE(s.uni.is_abelian());
  EXPECT_EQ(s.non, dee2());
  EXPECT_EQ(s.nu, (Vec{-1, 0}));
  EXPECT_THROW(modular_split(heisenberg()), std::domain_error);

  auto g = direct_sum(dee2(), heisenberg());
  auto sp = modular_split(g);
  EXPECT_EQ(sp.uni + sp.non, g);
  EXPECT_TRUE(is_jacobi(sp.uni));
  EXPECT_TRUE(is_zero(modular_vector(sp.uni)));
  EXPECT_TRUE(compatible(sp.uni, sp.non));
  EXPECT_FALSE(sp.non.is_abelian());
}

TEST(Modular, SplitPostconditions) {
  std::mt19937 rng(17);
  for (int rep = 0; rep < 80; ++rep) {
    auto g = random_nonunimodular_solvable(rng, 3 + rep % 4);
    auto s = modular_split(g);
    EXPECT_EQ(s.uni + s.non, g);
    EXPECT_TRUE(compatible(s.uni, s.non));
    EXPECT_TRUE(is_jacobi(s.uni));
    EXPECT_TRUE(is_jacobi(s.non));
    EXPECT_TRUE(is_zero(modular_vector(s.uni)));
    EXPECT_EQ(dot(s.theta, s.nu), 1);
    EXPECT_TRUE(is_zero(transpose(s.A) * s.theta));
    EXPECT_EQ(trace(s.A), -1);
    EXPECT_TRUE(is_zero(s.A * s.nu));
    EXPECT_EQ(lie_rank(s.non), 2);
  }
}

TEST(Structure, DerivedCenterSolvable) {
  auto h = heisenberg();
  EXPECT_EQ(derived_algebra(h), (Basis{Vec{0, 0, 1}}));
  EXPECT_EQ(center(h), (Basis{Vec{0, 0, 1}}));
  EXPECT_TRUE(is_solvable(h));
  EXPECT_EQ(derived_algebra(triangle()).size(), 3u);
  EXPECT_FALSE(is_solvable(triangle()));
  LieStructure ab(3);
  EXPECT_TRUE(derived_algebra(ab).empty());
  EXPECT_EQ(center(ab).size(), 3u);
  EXPECT_TRUE(is_solvable(ab));
}

TEST(Rank, LieRank) {
  EXPECT_EQ(lie_rank(heisenberg()), 2);
  EXPECT_EQ(lie_rank(LieStructure(4)), 0);
  LieStructure g(5);
  g.add(1, 2, 5, 1);
  g.add(3, 4, 5, 1);
  EXPECT_EQ(lie_rank(g), 4);
}

TEST(Rank, UnimodularEvenDimensionBound) {
  std::mt19937 rng(2);
  int checked = 0;
  for (int rep = 0; rep < 40; ++rep) {
    auto g = rep % 2 ? random_unimodular_solvable(rng, rep % 4 == 1 ? 4 : 6)
                     : modular_split(random_nonunimodular_solvable(rng, rep % 4 == 0 ? 4 : 6)).uni;
    ASSERT_TRUE(is_zero(modular_vector(g)));
    ASSERT_TRUE(is_jacobi(g));
    ++checked;
    EXPECT_LT(lie_rank(g), g.dim());
  }
  EXPECT_EQ(checked, 40);
}

TEST(Recognize, Lieons) {
  LieStructure f(4);
  f.add(1, 2, 3, 5);
  EXPECT_EQ(recognize_lieon(f).str(), "fork(4)");
  EXPECT_EQ(recognize_lieon(dee2()).str(), "dee(2)");
  EXPECT_EQ(recognize_lieon(triangle()).str(), "other");
  EXPECT_EQ(recognize_lieon(LieStructure(2)).str(), "abelian");
  LieStructure bad(3);
  bad.add(1, 2, 3, 1);
  bad.add(2, 3, 1, 1);
  bad.add(1, 3, 1, 1);
  EXPECT_THROW(recognize_lieon(bad), std::invalid_argument);
}

TEST(Gamma, Operators) {
  EXPECT_EQ(gamma_of_operator(mat({{1}})), dee2());
  EXPECT_EQ(recognize_lieon(gamma_of_operator(mat({{0, 1}, {0, 0}}))).str(), "fork(3)");
  EXPECT_TRUE(gamma_of_operator(mat({{0, 0}, {0, 0}})).is_abelian());
}

TEST(ChangeBasis, Examples) {
  auto h = heisenberg();
  EXPECT_EQ(change_basis(h, identity(3)), h);
  auto swapped = change_basis(h, mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(swapped.c(1, 2, 3), -1);
  auto g = gamma_of_operator(mat({{1, 0}, {0, -1}}));
  auto t = mat({{1, 0, 0}, {0, 1, 1}, {0, 1, -1}});
  EXPECT_EQ(change_basis(g, t), gamma_of_operator(mat({{0, 1}, {1, 0}})));
  EXPECT_THROW(change_basis(h, mat({{1, 0, 0}, {1, 0, 0}, {0, 0, 1}})), std::domain_error);
  std::mt19937 rng(9);
  for (int rep = 0; rep < 20; ++rep) {
    auto a = random_solvable(rng, 4);
    Mat t2 = identity(4);
    for (auto& row : t2)
      for (auto& x : row) x += small_rational(rng, -1, 1);
    if (det(t2) == 0) continue;
    auto b = change_basis(a, t2);
    EXPECT_TRUE(is_jacobi(b));
    EXPECT_EQ(change_basis(b, inverse(t2)), a);
  }
}

TEST(Matching, QuadrupleExamples) {
  auto check = [](const MatchQuadruple& q) {
    auto [p1, p2] = matching_from_quadruple(q);
    EXPECT_EQ(p1.dim(), q.dimV + 2);
    EXPECT_TRUE(is_jacobi(p1));
    EXPECT_TRUE(is_jacobi(p2));
    EXPECT_TRUE(compatible(p1, p2));
    EXPECT_TRUE(modular_split(p1).uni.is_abelian());
    EXPECT_TRUE(modular_split(p2).uni.is_abelian());
  };
  check({1, mat({{0}}), mat({{4}}), 1, {}, {}});
  check({2, mat({{0, 1}, {0, 0}}), mat({{1, 0}, {0, 3}}), 1, {}, {}});
  check({2, mat({{0, 0}, {0, 0}}), mat({{1, 0}, {0, 1}}), 0, {}, {}});
  check({2, mat({{0, 1}, {0, 0}}), mat({{1, 0}, {0, 1}}), 0, Vec{1, 0}, Vec{2, 0}});
  EXPECT_THROW(matching_from_quadruple({2, mat({{0, 1}, {0, 0}}), mat({{4, 0}, {0, 0}}), 1, {}, {}}),
               std::invalid_argument);
}
