#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "lieons/clusters.hpp"

using namespace lieons;

namespace {

BaseFamily fam(int n, std::vector<std::array<int, 3>> tees, std::vector<std::array<int, 2>> dees) {
  BaseFamily f{n, {}, {}};
  for (auto [i, j, k] : tees) f.tees.emplace_back(std::min(i, j), std::max(i, j), k);
  for (auto [p, q] : dees) f.dees.emplace_back(p, q);
  return f;
}

BaseFamily triangle(int a = 1, int b = 2, int c = 3, int n = 3) {
  return fam(n, {{a, b, c}, {b, c, a}, {a, c, b}}, {});
}
BaseFamily d_bridge() { return fam(3, {{1, 2, 3}}, {{1, 3}, {2, 3}}); }
BaseFamily framed_twain() { return fam(3, {{1, 2, 3}, {1, 3, 2}}, {{1, 2}, {1, 3}}); }
BaseFamily double_() { return fam(2, {}, {{1, 2}, {2, 1}}); }

std::set<std::array<int, 4>> shapes(const BaseFamily& f) {
  std::set<std::array<int, 4>> s;
  for (const auto& t : f.tees) s.insert({0, t.i, t.j, t.k});
  for (const auto& d : f.dees) s.insert({1, d.p, d.q, 0});
  return s;
}

// Independent oracle: search all bijections S(a) -> S(b) for one that maps members onto members.
bool relabel_equivalent(const BaseFamily& a, const BaseFamily& b) {
  auto sa = a.vertices(), sb = b.vertices();
  if (sa.size() != sb.size() || a.tees.size() != b.tees.size() || a.dees.size() != b.dees.size()) return false;
  std::vector<int> src(sa.begin(), sa.end()), img(sb.begin(), sb.end());
  auto target = shapes(b);
  do {
    std::map<int, int> m;
    for (std::size_t x = 0; x < src.size(); ++x) m[src[x]] = img[x];
    std::set<std::array<int, 4>> s;
    for (const auto& t : a.tees) s.insert({0, std::min(m[t.i], m[t.j]), std::max(m[t.i], m[t.j]), m[t.k]});
    for (const auto& d : a.dees) s.insert({1, m[d.p], m[d.q], 0});
    if (s == target) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

BaseFamily random_relabel(const BaseFamily& f, int dim, std::mt19937& rng) {
  std::vector<int> img(dim);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  std::map<int, int> m;
  int x = 0;
  for (int v : f.vertices()) m[v] = img[x++];
  return relabel(f, m, dim);
}

ClusterCard card(int nt, int ne, int nd, int ntr, int nr, std::vector<int> t = {}, std::vector<int> p = {},
                 std::vector<std::vector<int>> b = {}, std::vector<std::vector<int>> d = {}) {
  ClusterCard c{nt, ne, nd, ntr, nr, t, p, b, d};
  if (c.t.empty()) c.t.assign(ne, 0);
  if (c.p.empty()) c.p.assign(ne, 0);
  if (c.B.empty()) c.B.assign(ne, std::vector<int>(ne, 0));
  if (c.D.empty()) c.D.assign(ne, std::vector<int>(ne, 0));
  return detail::canonical_card(c);
}

std::vector<ClusterCard> named_cards(int n) {
  switch (n) {
    case 2: return {card(0, 0, 0, 0, 1)};
    case 3:
      return {card(0, 0, 0, 1, 0), card(1, 0, 0, 0, 1), card(0, 1, 0, 0, 0, {0}, {2}),
              card(0, 2, 0, 0, 0, {}, {}, {}, {{0, 1}, {1, 0}})};
    case 4:
      return {card(0, 3, 1, 0, 0), card(1, 0, 0, 1, 0), card(2, 0, 0, 0, 1),
              card(0, 2, 0, 0, 0, {}, {}, {}, {{0, 2}, {2, 0}}), card(0, 1, 0, 0, 0, {0}, {3})};
    default: return {};
  }
}

std::vector<Rational> random_coeffs(std::size_t m, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(1, 4);
  std::bernoulli_distribution sign(0.5);
  std::vector<Rational> c;
  for (std::size_t a = 0; a < m; ++a) c.push_back(Rational(sign(rng) ? d(rng) : -d(rng)));
  return c;
}

}  // namespace

TEST(Clusters, IsClusterExamples) {
  EXPECT_TRUE(is_cluster(double_()));
  EXPECT_TRUE(is_cluster(triangle()));
  EXPECT_TRUE(is_cluster(d_bridge()));
  EXPECT_FALSE(is_cluster(fam(3, {{1, 2, 3}}, {})));
  EXPECT_FALSE(is_cluster(fam(4, {}, {{1, 2}, {2, 1}, {3, 4}, {4, 3}})));
  EXPECT_THROW(is_cluster(fam(4, {{1, 2, 3}, {3, 4, 1}}, {})), std::invalid_argument);
}

TEST(Clusters, CompleteFamilyExamples) {
  auto t = complete_family(fam(3, {{1, 2, 3}, {2, 3, 1}}, {}));
  EXPECT_EQ(shapes(t), shapes(triangle()));
  EXPECT_EQ(shapes(complete_family(fam(3, {}, {{1, 3}, {2, 3}}))), shapes(d_bridge()));
  for (const auto& f : enumerate_clusters(4)) EXPECT_EQ(shapes(complete_family(f)), shapes(f));
  EXPECT_THROW(complete_family(fam(4, {{1, 2, 3}, {3, 4, 1}}, {})), std::invalid_argument);
}

TEST(Clusters, CompleteFamilyProperties) {
  std::mt19937 rng(11);
  auto pool = all_base_lieons(5);
  for (int trial = 0; trial < 300; ++trial) {
    BaseFamily f{5, {}, {}};
    std::shuffle(pool.begin(), pool.end(), rng);
    for (const auto& x : pool) {
      if (f.size() >= 3) break;
      auto ms = f.members();
      if (std::all_of(ms.begin(), ms.end(), [&](const BaseLieon& m) { return compatible_base(x, m); })) {
        if (const auto* te = std::get_if<Tee>(&x))
          f.tees.push_back(*te);
        else
          f.dees.push_back(std::get<Dee>(x));
      }
    }
    auto g = complete_family(f);
    EXPECT_TRUE(family_is_compatible(g));
    auto sg = shapes(g);
    for (const auto& s : shapes(f)) EXPECT_TRUE(sg.count(s));
    EXPECT_EQ(g.vertices(), f.vertices());
    if (detail::upsilon_connected(g)) {
      EXPECT_TRUE(is_cluster(g));
    }
    auto ext = maximal_extensions(f);
    EXPECT_TRUE(std::any_of(ext.begin(), ext.end(), [&](const BaseFamily& e) { return shapes(e) == sg; }));
  }
}

TEST(Clusters, EnumerationCounts) {
  std::vector<std::size_t> expected{0, 0, 1, 4, 5};
  for (int n = 2; n <= 4; ++n) {
    auto cl = enumerate_clusters(n);
    EXPECT_EQ(cl.size(), expected[n]) << "n=" << n;
    for (const auto& f : cl) {
      EXPECT_TRUE(is_cluster(f));
      EXPECT_EQ(static_cast<int>(f.vertices().size()), n);
      EXPECT_EQ(shapes(canonical_form(f)), shapes(f));
    }
    for (std::size_t a = 0; a < cl.size(); ++a)
      for (std::size_t b = a + 1; b < cl.size(); ++b) EXPECT_FALSE(relabel_equivalent(cl[a], cl[b]));
  }
  EXPECT_THROW(enumerate_clusters(7), std::out_of_range);
  EXPECT_THROW(enumerate_clusters(0), std::out_of_range);
}

TEST(Clusters, EnumerationAgreesWithBlockingRuleScan) {
  // Brute force over all subsets of base lieons at n = 3.
  auto pool = all_base_lieons(3);
  std::set<std::set<std::array<int, 4>>> found;
  for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
    BaseFamily f{3, {}, {}};
    for (std::size_t a = 0; a < pool.size(); ++a)
      if (mask >> a & 1u) {
        if (const auto* te = std::get_if<Tee>(&pool[a]))
          f.tees.push_back(*te);
        else
          f.dees.push_back(std::get<Dee>(pool[a]));
      }
    if (f.vertices().size() != 3 || !family_is_compatible(f) || !is_cluster(f)) continue;
    found.insert(shapes(canonical_form(f)));
  }
  std::set<std::set<std::array<int, 4>>> enumerated;
  for (const auto& f : enumerate_clusters(3)) enumerated.insert(shapes(f));
  EXPECT_EQ(found, enumerated);
}

TEST(Clusters, DeeClustersAreDoubleOrSpiders) {
  for (int n = 2; n <= 5; ++n) {
    auto cl = enumerate_dee_clusters(n);
    std::set<int> spider_sizes;
    for (const auto& f : cl) {
      EXPECT_TRUE(f.tees.empty());
      std::set<int> i0, i1;
      for (const auto& d : f.dees) {
        i0.insert(d.p);
        i1.insert(d.q);
      }
      bool is_double = n == 2 && f.dees.size() == 2 && i0 == i1;
      bool disjoint = std::none_of(i0.begin(), i0.end(), [&](int v) { return i1.count(v); });
      bool spider = disjoint && f.dees.size() == i0.size() * i1.size() && static_cast<int>(i0.size() + i1.size()) == n;
      EXPECT_TRUE(is_double || spider) << f.str();
      if (spider) spider_sizes.insert(static_cast<int>(i0.size()));
    }
    if (n == 2) {
      EXPECT_EQ(cl.size(), 1u);
    } else {
      EXPECT_EQ(cl.size(), static_cast<std::size_t>(n - 1));
      EXPECT_EQ(spider_sizes.size(), static_cast<std::size_t>(n - 1));
    }
  }
}

TEST(Clusters, VertexTypesExamples) {
  auto db = vertex_types(d_bridge());
  EXPECT_EQ(db[1], VertexType::end);
  EXPECT_EQ(db[2], VertexType::end);
  EXPECT_EQ(db[3], VertexType::mixing);
  for (auto [v, t] : vertex_types(triangle())) EXPECT_EQ(t, VertexType::mixing);
  auto sp = vertex_types(fam(4, {}, {{1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(sp[4], VertexType::d_center);
  for (int v = 1; v <= 3; ++v) EXPECT_EQ(sp[v], VertexType::end);
  auto hh = vertex_types(fam(4, {{1, 2, 3}, {2, 3, 1}, {1, 3, 2}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, {}));
  EXPECT_EQ(hh[4], VertexType::t_center);
}

TEST(Clusters, CardExamples) {
  EXPECT_EQ(compute_card(triangle()), card(0, 0, 0, 1, 0));
  EXPECT_EQ(compute_card(d_bridge()), card(0, 2, 0, 0, 0, {0, 0}, {0, 0}, {{0, 0}, {0, 0}}, {{0, 1}, {1, 0}}));
  EXPECT_EQ(compute_card(framed_twain()), card(0, 1, 0, 0, 0, {0}, {2}));
  EXPECT_EQ(compute_card(double_()), card(0, 0, 0, 0, 1));
  EXPECT_EQ(compute_card(triangle()).str(), "(0,0,0,1,0,[t=(),p=(),B=[],D=[]])");
  EXPECT_THROW(compute_card(fam(3, {{1, 2, 3}}, {})), std::invalid_argument);
}

TEST(Clusters, CardMultisetsMatchNamedLists) {
  for (int n = 2; n <= 4; ++n) {
    std::multiset<ClusterCard> got, want;
    for (const auto& f : enumerate_clusters(n)) got.insert(compute_card(f));
    for (const auto& c : named_cards(n)) want.insert(c);
    EXPECT_EQ(got, want) << "n=" << n;
  }
}

TEST(Clusters, CardDimensionAndInvariants) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& f : enumerate_clusters(n)) {
      auto c = compute_card(f);
      EXPECT_EQ(c.dimension(), n) << f.str();
      EXPECT_EQ(static_cast<int>(c.t.size()), c.n_e);
      EXPECT_EQ(static_cast<int>(c.p.size()), c.n_e);
      for (int i = 0; i < c.n_e; ++i) {
        EXPECT_EQ(c.B[i][i], 0);
        EXPECT_EQ(c.D[i][i], 0);
        for (int j = 0; j < c.n_e; ++j) {
          EXPECT_EQ(c.B[i][j], c.B[j][i]);
          EXPECT_EQ(c.D[i][j], c.D[j][i]);
        }
      }
      EXPECT_EQ(detail::canonical_card(c), c);
    }
}

TEST(Clusters, CardMatchesRelabelOracle) {
  std::mt19937 rng(5);
  for (int n = 2; n <= 5; ++n) {
    auto cl = enumerate_clusters(n);
    std::vector<BaseFamily> pool;
    for (const auto& f : cl) {
      pool.push_back(f);
      for (int r = 0; r < 2; ++r) pool.push_back(random_relabel(f, n + 1, rng));
    }
    for (std::size_t a = 0; a < pool.size(); ++a)
      for (std::size_t b = a; b < pool.size(); ++b)
        EXPECT_EQ(equivalent(pool[a], pool[b]), relabel_equivalent(pool[a], pool[b]))
            << pool[a].str() << " vs " << pool[b].str();
  }
}

TEST(Clusters, EquivalenceExamples) {
  EXPECT_TRUE(equivalent(triangle(1, 2, 3, 4), triangle(2, 3, 4, 4)));
  EXPECT_FALSE(equivalent(d_bridge(), framed_twain()));
  auto raft_a = fam(4, {{1, 4, 2}, {1, 4, 3}}, {{1, 2}, {1, 3}, {4, 2}, {4, 3}});
  auto raft_b = fam(4, {{2, 3, 1}, {2, 3, 4}}, {{2, 1}, {2, 4}, {3, 1}, {3, 4}});
  EXPECT_TRUE(equivalent(raft_a, raft_b));
  EXPECT_TRUE(relabel_equivalent(raft_a, raft_b));
}

TEST(Clusters, VertexRolesPartitionVertices) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& f : enumerate_clusters(n)) EXPECT_EQ(static_cast<int>(vertex_roles(f).size()), n);
  auto roles = vertex_roles(d_bridge());
  EXPECT_EQ(roles[3], "d-bridge 1,2");
}

TEST(Clusters, SynthesizeExamples) {
  auto tri = synthesize(triangle(), {1, 1, 1});
  EXPECT_EQ(derived_algebra(tri).size(), 3u);
  EXPECT_NE(det(killing_form(tri)), 0);
  auto d = synthesize(double_(), {1, 1});
  EXPECT_TRUE(cyclic_jacobi(d));
  EXPECT_EQ(d.c(1, 2, 2), 1);
  EXPECT_EQ(d.c(1, 2, 1), -1);
  EXPECT_TRUE(synthesize(d_bridge(), {0, 0, 0}).is_abelian());
  EXPECT_THROW(synthesize(fam(4, {{1, 2, 3}, {3, 4, 1}}, {}), {1, 1}), std::invalid_argument);
  EXPECT_THROW(synthesize(triangle(), {1, 1}), std::invalid_argument);
}

TEST(Clusters, SynthesizedAlgebrasSatisfyJacobi) {
  std::mt19937 rng(9);
  for (int n = 2; n <= 5; ++n)
    for (const auto& f : enumerate_clusters(n))
      for (int r = 0; r < 3; ++r) {
        auto g = synthesize(f, random_coeffs(f.size(), rng));
        EXPECT_TRUE(cyclic_jacobi(g)) << f.str();
      }
}

TEST(Clusters, CoaxialIdealsOnAllSmallClusters) {
  std::mt19937 rng(21);
  for (int n = 2; n <= 5; ++n)
    for (const auto& f : enumerate_clusters(n)) {
      auto c = compute_card(f);
      auto r = coaxial_ideals(f, random_coeffs(f.size(), rng));
      EXPECT_TRUE(r.non_ideals.empty()) << f.str() << " " << r.non_ideals.front();
      EXPECT_TRUE(r.center_ok) << f.str();
      EXPECT_GE(r.radical_derived_length, 0) << f.str();
      EXPECT_LE(r.radical_derived_length, 3) << f.str();
      EXPECT_TRUE(r.quotient_ok) << f.str();
      EXPECT_EQ(r.spans["c"].size(), static_cast<std::size_t>(c.n_t));
      EXPECT_EQ(r.spans["cd"].size(), static_cast<std::size_t>(c.n_d));
    }
}

TEST(Clusters, CoaxialIdealsExamples) {
  auto tri = coaxial_ideals(triangle(), {1, 1, 1});
  EXPECT_TRUE(tri.ok());
  EXPECT_TRUE(tri.spans["rad"].empty());
  auto db = coaxial_ideals(d_bridge(), {1, 1, 1});
  EXPECT_TRUE(db.ok());
  EXPECT_TRUE(is_solvable(synthesize(d_bridge(), {1, 1, 1})));
  auto hh = fam(4, {{1, 2, 3}, {2, 3, 1}, {1, 3, 2}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, {});
  auto h = coaxial_ideals(hh, {1, 1, 1, 1, 1, 1});
  EXPECT_TRUE(h.ok());
  EXPECT_EQ(h.spans["c"], std::vector<int>{4});
  EXPECT_THROW(coaxial_ideals(fam(3, {{1, 2, 3}}, {}), {1}), std::invalid_argument);
}
