#include <random>
#include <queue>
#include <sstream>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace chromcoh {
namespace {

using testing::make_graph;

Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

TEST(ParseEdgeList, Triangle) {
  const Graph g = parse_edge_list("v 3\ne 0 1\ne 1 2\ne 2 0\n");
  EXPECT_EQ(g, triangle());
}

TEST(ParseEdgeList, LoopAndParallelEdges) {
  const Graph p1 = parse_edge_list("v 1\ne 0 0\n");
  EXPECT_EQ(p1.vertex_count(), 1U);
  ASSERT_EQ(p1.edge_count(), 1U);
  EXPECT_TRUE(p1.edge(0).is_loop());

  const Graph p2 = parse_edge_list("# two parallel edges\nv 2\n\ne 0 1\ne 0 1\n");
  EXPECT_EQ(p2, make_graph(2, {{0, 1}, {0, 1}}));
}

TEST(ParseEdgeList, EmptyGraphIsLegal) {
  const Graph g = parse_edge_list("v 0\n");
  EXPECT_EQ(g.vertex_count(), 0U);
  EXPECT_EQ(g.edge_count(), 0U);
}

TEST(ParseEdgeList, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("v 3\ne 0 1\ne 1 3\n"), 3U);   // index out of range
  EXPECT_EQ(line_of("# c\nv -2\n"), 2U);           // negative count
  EXPECT_EQ(line_of("v 3\ne 0\n"), 2U);            // missing endpoint
  EXPECT_EQ(line_of("v 3\nx 0 1\n"), 2U);          // unknown record
  EXPECT_EQ(line_of("v 3\ne 0 -1\n"), 2U);         // negative index
  EXPECT_EQ(line_of("e 0 1\n"), 1U);               // edge before header
  EXPECT_EQ(line_of("v 3\ne 0 1x\n"), 2U);         // trailing garbage
  EXPECT_THROW(parse_edge_list("# only a comment\n"), ParseError);
}

TEST(ParseGraph6, SmallGraphsInLexicographicOrder) {
  EXPECT_EQ(parse_graph6("Bw"), make_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(parse_graph6("A_"), make_graph(2, {{0, 1}}));
  // 4-cycle; expected edges from networkx' graph6 decoder.
  EXPECT_EQ(parse_graph6("Cl\n"), make_graph(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), parse_graph6("Bw"));
  EXPECT_EQ(parse_graph6("?"), Graph(0));
}

TEST(ParseGraph6, LongFormVertexCount) {
  // Path on 70 vertices (encoded by networkx).
  const Graph g = parse_graph6("~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@???????????G");
  EXPECT_EQ(g.vertex_count(), 70U);
  ASSERT_EQ(g.edge_count(), 69U);
  for (std::size_t k = 0; k < 69; ++k) EXPECT_EQ(g.edge(k), (Edge{Vertex(k), Vertex(k + 1)}));
}

TEST(ParseGraph6, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B"), ParseError);       // truncated
  EXPECT_THROW(parse_graph6("B\x01"), ParseError);   // invalid byte
  EXPECT_THROW(parse_graph6("Bww"), ParseError);     // trailing data
}

TEST(Components, Triangle) {
  const Graph g = triangle();
  EXPECT_EQ(components(g, {0b000}).count, 3U);
  EXPECT_EQ(components(g, {0b001}).count, 2U);
  EXPECT_EQ(components(g, {0b111}).count, 1U);
}

TEST(Components, CanonicalIdsFollowMinimalVertex) {
  const Graph g = make_graph(5, {{3, 4}, {1, 4}, {0, 2}});
  const auto p = components(g, {0b011});
  EXPECT_EQ(p.count, 3U);
  EXPECT_EQ(p.component_of, (std::vector<std::uint32_t>{0, 1, 2, 1, 1}));
}

// Independent breadth-first count.
std::size_t bfs_count(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<bool> seen(g.vertex_count());
  std::size_t count = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
  }
  return count;
}

TEST(Components, AgreesWithBreadthFirstSearch) {
  std::mt19937_64 rng(7);
  RandomGraphOptions opt{0, 12, 14, true, true};
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_graph(opt, rng);
    EXPECT_EQ(components(g, g.full_state()).count, bfs_count(g));
  }
}

TEST(DeleteEdge, Examples) {
  EXPECT_EQ(delete_edge(triangle(), 2), make_graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(delete_edge(make_graph(2, {{0, 1}}), 0), Graph(2));
  EXPECT_EQ(delete_edge(make_graph(2, {{0, 1}, {0, 1}}), 1), make_graph(2, {{0, 1}}));
  EXPECT_THROW(delete_edge(triangle(), 3), std::out_of_range);
}

TEST(DeleteEdge, ReinsertRestoresSequence) {
  std::mt19937_64 rng(11);
  RandomGraphOptions opt{1, 6, 8, true, true};
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(opt, rng);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      EXPECT_EQ(insert_edge(delete_edge(g, e), e, g.edge(e)), g);
    }
  }
}

TEST(ContractEdge, Examples) {
  // Contracting 2-0 merges vertex 2 into 0: the remaining edges 0-1, 1-0.
  EXPECT_EQ(contract_edge(triangle(), 2), make_graph(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(contract_edge(make_graph(2, {{0, 1}, {0, 1}}), 1), make_graph(1, {{0, 0}}));
  EXPECT_EQ(contract_edge(make_graph(2, {{0, 1}}), 0), Graph(1));
}

TEST(ContractEdge, RenumbersVerticesAboveMergedOne) {
  const Graph g = make_graph(5, {{1, 3}, {3, 4}, {0, 2}, {2, 4}});
  EXPECT_EQ(contract_edge(g, 0), make_graph(4, {{1, 3}, {0, 2}, {2, 3}}));
}

TEST(ContractEdge, LoopIsRejected) {
  EXPECT_THROW(contract_edge(make_graph(1, {{0, 0}}), 0), LoopContractionError);
}

TEST(ContractEdge, CountsDropByOne) {
  std::mt19937_64 rng(5);
  RandomGraphOptions opt{2, 7, 9, true, true};
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(opt, rng);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).is_loop()) continue;
      const Graph c = contract_edge(g, e);
      EXPECT_EQ(c.vertex_count(), g.vertex_count() - 1);
      EXPECT_EQ(c.edge_count(), g.edge_count() - 1);
    }
  }
}

TEST(Simplify, Examples) {
  const auto p2 = simplify(make_graph(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(p2.graph, make_graph(2, {{0, 1}}));
  EXPECT_FALSE(p2.has_loop);

  const auto p1 = simplify(make_graph(1, {{0, 0}}));
  EXPECT_EQ(p1.graph, make_graph(1, {{0, 0}}));
  EXPECT_TRUE(p1.has_loop);

  const auto t = simplify(triangle());
  EXPECT_EQ(t.graph, triangle());
  EXPECT_FALSE(t.has_loop);
}

TEST(Simplify, Idempotent) {
  std::mt19937_64 rng(3);
  RandomGraphOptions opt{1, 5, 10, true, true};
  for (int trial = 0; trial < 80; ++trial) {
    const Graph once = simplify(random_graph(opt, rng)).graph;
    EXPECT_EQ(simplify(once).graph, once);
  }
}

TEST(DisjointUnion, Examples) {
  EXPECT_EQ(disjoint_union(Graph(1), Graph(1)), Graph(2));
  EXPECT_EQ(disjoint_union(make_graph(2, {{0, 1}}), Graph(1)), make_graph(3, {{0, 1}}));
  const Graph tt = disjoint_union(triangle(), triangle());
  EXPECT_EQ(tt.vertex_count(), 6U);
  EXPECT_EQ(tt, make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));
}

TEST(DisjointUnion, EmptyGraphIsIdentity) {
  std::mt19937_64 rng(13);
  RandomGraphOptions opt{0, 6, 6, true, true};
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(opt, rng);
    EXPECT_EQ(disjoint_union(g, Graph(0)), g);
  }
}

TEST(PermuteEdgeOrder, Examples) {
  const Graph g = triangle();
  const std::vector<std::size_t> identity{0, 1, 2};
  EXPECT_EQ(permute_edge_order(g, identity), g);
  const std::vector<std::size_t> swap{1, 0, 2};
  EXPECT_EQ(permute_edge_order(g, swap), make_graph(3, {{1, 2}, {0, 1}, {2, 0}}));
  const std::vector<std::size_t> bad{0, 0, 2};
  EXPECT_THROW(permute_edge_order(g, bad), std::invalid_argument);
}

TEST(PermuteEdgeOrder, InverseRestores) {
  std::mt19937_64 rng(17);
  RandomGraphOptions opt{1, 6, 8, true, true};
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(opt, rng);
    const auto sigma = random_permutation(g.edge_count(), rng);
    EXPECT_EQ(permute_edge_order(permute_edge_order(g, sigma), inverse_permutation(sigma)), g);
  }
}

TEST(Generators, RandomTreesAreTrees) {
  std::mt19937_64 rng(19);
  for (std::size_t n = 0; n <= 9; ++n) {
    const Graph t = random_tree(n, rng);
    EXPECT_EQ(t.edge_count(), n);
    EXPECT_EQ(t.vertex_count(), n + 1);
    EXPECT_EQ(component_count(t), 1U);
  }
}

TEST(Generators, ConnectedSimpleGraphCounts) {
  // Unlabeled connected graphs on 1..5 vertices: 1, 1, 2, 6, 21.
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21};
  for (std::size_t v = 1; v <= 5; ++v) EXPECT_EQ(connected_simple_graphs(v).size(), expected[v - 1]);
}

}  // namespace
}  // namespace chromcoh
