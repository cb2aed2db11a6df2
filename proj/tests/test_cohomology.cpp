#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace chromcoh {
namespace {

using testing::describe;
using testing::groups;
using testing::make_graph;
using testing::poly;

// Reference groups below come from a dense Smith-form computation in
// oracle/cohomology_reference.py.

TEST(Cohomology, SingleVertex) {
  EXPECT_EQ(cohomology(Graph(1)), groups({{0, 0, 1, {}}, {0, 1, 1, {}}}));
}

TEST(Cohomology, EmptyGraph) {
  EXPECT_EQ(cohomology(Graph(0)), groups({{0, 0, 1, {}}}));
}

TEST(Cohomology, Triangle) {
  const auto h = cohomology(cycle_graph(3));
  EXPECT_EQ(h, groups({{0, 3, 1, {}}, {1, 1, 1, {}}, {1, 2, 0, {2}}})) << describe(h);
}

TEST(Cohomology, Square) {
  const auto h = cohomology(cycle_graph(4));
  EXPECT_EQ(h, groups({{0, 3, 1, {}}, {0, 4, 1, {}}, {1, 3, 1, {}}, {2, 1, 1, {}}, {2, 2, 0, {2}}})) << describe(h);
}

TEST(Cohomology, CompleteGraphK4) {
  const auto h = cohomology(complete_graph(4));
  EXPECT_EQ(h, groups({{0, 4, 1, {}}, {1, 2, 1, {}}, {1, 3, 2, {2}}, {2, 1, 2, {}}, {2, 2, 0, {2, 2}}}))
      << describe(h);
}

TEST(Cohomology, TriangleWithIsolatedVertex) {
  const auto h = cohomology(disjoint_union(cycle_graph(3), Graph(1)));
  EXPECT_EQ(h, groups({{0, 3, 1, {}}, {0, 4, 1, {}}, {1, 1, 1, {}}, {1, 2, 1, {2}}, {1, 3, 0, {2}}})) << describe(h);
}

TEST(Cohomology, TwoTriangles) {
  const auto h = cohomology(disjoint_union(cycle_graph(3), cycle_graph(3)));
  EXPECT_EQ(h, groups({{0, 6, 1, {}},
                       {1, 4, 2, {2}},
                       {1, 5, 0, {2, 2}},
                       {2, 2, 1, {}},
                       {2, 3, 0, {2, 2}},
                       {2, 4, 0, {2}}}))
      << describe(h);
}

TEST(Cohomology, CapacityError) {
  EXPECT_THROW(cohomology(path_tree(21)), CapacityError);
  EXPECT_THROW(cohomology(cycle_graph(6), Limits{5, 1 << 20}), CapacityError);
}

TEST(Polynomials, QdimIgnoresTorsion) {
  const auto h = cohomology(cycle_graph(3));
  EXPECT_EQ(qdim(row(h, 0)), poly({0, 0, 0, 1}));
  EXPECT_EQ(qdim(row(h, 1)), poly({0, 1}));
  EXPECT_TRUE(qdim(row(h, 2)).is_zero());
}

TEST(Polynomials, PoincareAndEulerOfTriangle) {
  const auto h = cohomology(cycle_graph(3));
  TwoVarPolynomial r;
  r.add_term(0, 3, 1);
  r.add_term(1, 1, 1);
  EXPECT_EQ(poincare_polynomial(h), r);
  EXPECT_EQ(graded_euler_characteristic(h), poly({0, -1, 0, 1}));
  EXPECT_EQ(chain_level_euler(cycle_graph(3)), poly({0, -1, 0, 1}));
}

TEST(Polynomials, LoopHasZeroEuler) {
  EXPECT_TRUE(chain_level_euler(cycle_graph(1)).is_zero());
  EXPECT_TRUE(graded_euler_characteristic(cohomology(cycle_graph(1))).is_zero());
}

TEST(CohomologyProperties, HeightZeroIsTorsionFree) {
  std::mt19937_64 rng(301);
  RandomGraphOptions opt{1, 6, 8, true, true};
  for (int trial = 0; trial < 60; ++trial) {
    const auto h = cohomology(random_graph(opt, rng));
    for (const auto& [j, grp] : row(h, 0)) EXPECT_TRUE(grp.is_free());
  }
}

TEST(CohomologyProperties, LoopsKillEverything) {
  std::mt19937_64 rng(307);
  RandomGraphOptions opt{1, 5, 6, true, true};
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(opt, rng);
    std::uniform_int_distribution<std::size_t> pos(0, g.edge_count());
    std::uniform_int_distribution<Vertex> vert(0, static_cast<Vertex>(g.vertex_count() - 1));
    const Vertex u = vert(rng);
    g = insert_edge(g, pos(rng), {u, u});
    EXPECT_TRUE(cohomology(g).is_trivial()) << describe(cohomology(g));
  }
}

TEST(CohomologyProperties, EdgeOrderDoesNotMatter) {
  std::mt19937_64 rng(311);
  RandomGraphOptions opt{1, 6, 7, true, true};
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(opt, rng);
    const auto h = cohomology(g);
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(cohomology(permute_edge_order(g, random_permutation(g.edge_count(), rng))), h);
    }
  }
}

TEST(CohomologyProperties, ParallelEdgesCollapse) {
  std::mt19937_64 rng(313);
  RandomGraphOptions opt{1, 5, 8, false, true};
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(opt, rng);
    EXPECT_EQ(cohomology(g), cohomology(simplify(g).graph));
  }
}

TEST(CohomologyProperties, RankBoundedByChainGroup) {
  std::mt19937_64 rng(317);
  RandomGraphOptions opt{1, 6, 7, true, true};
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(opt, rng);
    const BasisIndex b = enumerate_basis(g);
    const auto h = cohomology(g, b);
    for (const auto& [bd, grp] : h.entries()) {
      EXPECT_LE(grp.free_rank() + grp.torsion().size(), b.size(bd.i, bd.j));
    }
  }
}

TEST(AbelianGroup, CanonicalForm) {
  EXPECT_EQ(AbelianGroup(1, {Integer(1), Integer(6), Integer(4)}).torsion(),
            (std::vector<Integer>{2, 12}));
  EXPECT_EQ(AbelianGroup(2, {Integer(2)}).to_string(), "Z^2 + Z_2");
  EXPECT_EQ(AbelianGroup().to_string(), "0");
  EXPECT_EQ(AbelianGroup::cyclic(2) + AbelianGroup::free(1), AbelianGroup(1, {Integer(2)}));
}

TEST(BigradedGroups, TrivialEntriesAreDropped) {
  BigradedGroups h;
  h.set({0, 1}, AbelianGroup());
  h.add({0, 2}, AbelianGroup());
  EXPECT_TRUE(h.is_trivial());
  h.add({1, 1}, AbelianGroup::cyclic(3));
  h.add({1, 1}, AbelianGroup::free(1));
  EXPECT_EQ(h.at(1, 1), AbelianGroup(1, {Integer(3)}));
  EXPECT_EQ(h.shifted(2).at(1, 3), AbelianGroup(1, {Integer(3)}));
}

TEST(Report, TableNotation) {
  const auto h = cohomology(cycle_graph(3));
  EXPECT_EQ(render_row(h, 0), "Z{3}");
  EXPECT_EQ(render_row(h, 1), "Z_2{2} ⊕ Z{1}");
  EXPECT_EQ(render_row(h, 2), "0");
}

TEST(Report, JsonFieldOrder) {
  const Graph g = cycle_graph(3);
  const auto h = cohomology(g);
  const Json j = cohomology_report(g, h, chromatic_deletion_contraction(g), {{"d_squared", true}});
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"graph", "groups", "poincare", "euler", "chromatic", "checks"}));
  EXPECT_EQ(j["groups"][2]["torsion"], Json::array({2}));
  EXPECT_EQ(j["chromatic"].dump(), "[[1,2],[2,-3],[3,1]]");
}

TEST(Report, HugeCoefficientsBecomeStrings) {
  EXPECT_EQ(to_json(Integer("100000000000000000000000")), Json("100000000000000000000000"));
  EXPECT_EQ(to_json(Integer(-5)), Json(-5));
}

}  // namespace
}  // namespace chromcoh
