#pragma once

// Named graph families and seeded random graphs.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromcoh/graph.hpp"

namespace chromcoh {

// N_v
inline Graph null_graph(std::size_t v) { return Graph(v); }

// Path tree T_n with n edges: 0-1, 1-2, ...
inline Graph path_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < n; ++k) edges.push_back({static_cast<Vertex>(k), static_cast<Vertex>(k + 1)});
  return Graph(n + 1, std::move(edges));
}

inline Graph star_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t k = 1; k <= n; ++k) edges.push_back({0, static_cast<Vertex>(k)});
  return Graph(n + 1, std::move(edges));
}

// Polygon P_n: a loop for n = 1, a double edge for n = 2, otherwise the
// n-cycle 0-1-...-(n-1)-0.
inline Graph cycle_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("polygon graphs need at least one edge");
  if (n == 1) return Graph(1, {{0, 0}});
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < n; ++k) {
    edges.push_back({static_cast<Vertex>(k), static_cast<Vertex>((k + 1) % n)});
  }
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(std::size_t v) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  return Graph(v, std::move(edges));
}

// Uniform random labeled tree with n edges, decoded from a random Pruefer
// sequence.
template <class Rng>
Graph random_tree(std::size_t n, Rng& rng) {
  const std::size_t v = n + 1;
  if (v <= 2) return v == 2 ? Graph(2, {{0, 1}}) : Graph(v);
  std::uniform_int_distribution<std::size_t> pick(0, v - 1);
  std::vector<std::size_t> code(v - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> degree(v, 1);
  for (auto c : code) ++degree[c];
  std::set<std::size_t> leaves;
  for (std::size_t u = 0; u < v; ++u) {
    if (degree[u] == 1) leaves.insert(u);
  }
  std::vector<Edge> edges;
  for (auto c : code) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({static_cast<Vertex>(std::min(leaf, c)), static_cast<Vertex>(std::max(leaf, c))});
    if (--degree[c] == 1) leaves.insert(c);
  }
  const std::size_t a = *leaves.begin();
  const std::size_t b = *std::next(leaves.begin());
  edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(v, std::move(edges));
}

struct RandomGraphOptions {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 5;
  std::size_t max_edges = 6;
  bool loops = false;
  bool parallel = true;
};

// Random multigraph; edges drawn uniformly among allowed endpoint pairs.
template <class Rng>
Graph random_graph(const RandomGraphOptions& opt, Rng& rng) {
  std::uniform_int_distribution<std::size_t> vdist(opt.min_vertices, opt.max_vertices);
  const std::size_t v = vdist(rng);
  if (v == 0) return Graph(0);
  std::uniform_int_distribution<std::size_t> edist(0, opt.max_edges);
  std::size_t target = edist(rng);
  if (!opt.parallel) {
    const std::size_t slots = v * (v - 1) / 2 + (opt.loops ? v : 0);
    target = std::min(target, slots);
  }
  if (v == 1 && !opt.loops) target = 0;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(v - 1));
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> used;
  while (edges.size() < target) {
    Edge e{pick(rng), pick(rng)};
    if (e.is_loop() && !opt.loops) continue;
    if (!opt.parallel && !used.insert({e.lo(), e.hi()}).second) continue;
    edges.push_back(e);
  }
  return Graph(v, std::move(edges));
}

template <class Rng>
std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

// One representative of every isomorphism class of connected simple graphs
// on v vertices (brute-force canonical form; practical for v <= 6).
inline std::vector<Graph> connected_simple_graphs(std::size_t v) {
  if (v == 0) return {};
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex a = 0; a < v; ++a) {
    for (Vertex b = a + 1; b < v; ++b) slots.emplace_back(a, b);
  }
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> p(v);
  std::iota(p.begin(), p.end(), Vertex{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<bool>, Graph> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1U) edges.push_back({slots[k].first, slots[k].second});
    }
    Graph g(v, edges);
    if (component_count(g) != 1) continue;
    std::vector<bool> best;
    for (const auto& perm : perms) {
      std::vector<bool> adj(slots.size(), false);
      for (const Edge& e : edges) {
        const Vertex a = std::min(perm[e.a], perm[e.b]);
        const Vertex b = std::max(perm[e.a], perm[e.b]);
        const auto idx = static_cast<std::size_t>(std::find(slots.begin(), slots.end(), std::make_pair(a, b)) - slots.begin());
        adj[idx] = true;
      }
      if (best.empty() || adj > best) best = adj;
    }
    classes.emplace(best, g);
  }
  std::vector<Graph> out;
  for (auto& [key, g] : classes) out.push_back(g);
  return out;
}

}  // namespace chromcoh
