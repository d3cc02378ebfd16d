// Copyright 2026 The lpa-ideals Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Fixture graphs and brute-force oracles shared by the test binaries. The
// oracles work directly on edge lists and never call the library's
// reachability, closure or cycle code.

#ifndef LPA_TESTS_SUPPORT_H_
#define LPA_TESTS_SUPPORT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lpa/graph.h"

namespace lpa::testing {

inline DirectedGraph make_graph(std::vector<std::string> vertices,
                                std::vector<EdgeSpec> edges,
                                std::vector<BundleSpec> bundles = {}) {
  return DirectedGraph::build(std::move(vertices), std::move(edges),
                              std::move(bundles));
}

// u carries loops f1, g1; u -> v -> w; w carries loop c.
inline DirectedGraph three_vertex_a() {
  return make_graph({"u", "v", "w"}, {{"f1", "u", "u"},
                                      {"g1", "u", "u"},
                                      {"e1", "u", "v"},
                                      {"e2", "v", "w"},
                                      {"c", "w", "w"}});
}

// u carries loops f1, g1; v -> u and v -> w; w carries loop c.
inline DirectedGraph three_vertex_b() {
  return make_graph({"u", "v", "w"}, {{"f1", "u", "u"},
                                      {"g1", "u", "u"},
                                      {"e1", "v", "u"},
                                      {"e2", "v", "w"},
                                      {"c", "w", "w"}});
}

// n vertices v1..vn, each with loops a_i, b_i, and chain edges e_i. Forward
// runs v_{i+1} -> v_i, reversed runs v_i -> v_{i+1}.
inline DirectedGraph two_loop_chain(int n, bool reversed) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= n; ++i) {
    const std::string v = "v" + std::to_string(i);
    vertices.push_back(v);
    edges.push_back({"a" + std::to_string(i), v, v});
    edges.push_back({"b" + std::to_string(i), v, v});
  }
  for (int i = 1; i < n; ++i) {
    const std::string lo = "v" + std::to_string(i);
    const std::string hi = "v" + std::to_string(i + 1);
    edges.push_back({"e" + std::to_string(i), reversed ? lo : hi,
                     reversed ? hi : lo});
  }
  return make_graph(std::move(vertices), std::move(edges));
}

// Vertex ids v{first}..v{last}.
inline std::vector<std::string> chain_ids(int first, int last) {
  std::vector<std::string> ids;
  for (int i = first; i <= last; ++i) ids.push_back("v" + std::to_string(i));
  return ids;
}

// v emits a bundle to w and named edges a, b to x.
inline DirectedGraph omega_fixture() {
  return make_graph({"v", "w", "x"}, {{"a", "v", "x"}, {"b", "v", "x"}},
                    {{"v", "w"}});
}

struct RandomGraphOptions {
  int max_vertices = 7;
  int max_edges = 14;
  double bundle_probability = 0.25;
};

inline DirectedGraph random_graph(std::mt19937_64& rng,
                                  const RandomGraphOptions& opt = {}) {
  std::uniform_int_distribution<int> nv(1, opt.max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> ne(0, opt.max_edges);
  const int m = ne(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<std::string> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back("x" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < m; ++i) {
    edges.push_back({"e" + std::to_string(i), vertices[pick(rng)],
                     vertices[pick(rng)]});
  }
  std::vector<BundleSpec> bundles;
  std::set<std::pair<int, int>> seen;
  std::bernoulli_distribution coin(opt.bundle_probability);
  while (coin(rng) && seen.size() < 3) {
    const int s = pick(rng);
    const int d = pick(rng);
    if (seen.insert({s, d}).second) bundles.push_back({vertices[s], vertices[d]});
  }
  return make_graph(std::move(vertices), std::move(edges), std::move(bundles));
}

// Adjacency straight from the edge and bundle lists.
struct RawGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> edge_targets;  // named edges only
  std::vector<std::vector<std::size_t>> edge_ids;      // parallel to above
  std::vector<std::vector<std::size_t>> bundle_targets;

  explicit RawGraph(const DirectedGraph& g)
      : n(g.vertex_count()),
        edge_targets(n),
        edge_ids(n),
        bundle_targets(n) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      edge_targets[g.edge(e).src].push_back(g.edge(e).dst);
      edge_ids[g.edge(e).src].push_back(e);
    }
    for (const auto& b : g.bundles()) bundle_targets[b.src].push_back(b.dst);
  }

  bool regular(std::size_t v) const {
    return bundle_targets[v].empty() && !edge_targets[v].empty();
  }
};

inline bool in_mask(std::uint64_t mask, std::size_t v) {
  return (mask >> v) & 1U;
}

inline bool brute_hereditary(const RawGraph& r, std::uint64_t mask) {
  for (std::size_t v = 0; v < r.n; ++v) {
    if (!in_mask(mask, v)) continue;
    for (auto w : r.edge_targets[v]) if (!in_mask(mask, w)) return false;
    for (auto w : r.bundle_targets[v]) if (!in_mask(mask, w)) return false;
  }
  return true;
}

inline bool brute_saturated(const RawGraph& r, std::uint64_t mask) {
  for (std::size_t v = 0; v < r.n; ++v) {
    if (in_mask(mask, v) || !r.regular(v)) continue;
    bool all_in = true;
    for (auto w : r.edge_targets[v]) all_in = all_in && in_mask(mask, w);
    if (all_in) return false;
  }
  return true;
}

inline VertexSet mask_to_set(std::size_t n, std::uint64_t mask) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) if (in_mask(mask, v)) s.insert(v);
  return s;
}

// Every hereditary saturated subset, by filtering all 2^n subsets.
inline std::set<VertexSet> brute_hs_sets(const DirectedGraph& g) {
  const RawGraph r(g);
  std::set<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r.n); ++mask) {
    if (brute_hereditary(r, mask) && brute_saturated(r, mask)) {
      out.insert(mask_to_set(r.n, mask));
    }
  }
  return out;
}

// Reflexive-transitive reachability by Floyd-Warshall over all edges.
inline std::vector<std::vector<bool>> brute_reach(const DirectedGraph& g) {
  const RawGraph r(g);
  std::vector<std::vector<bool>> reach(r.n, std::vector<bool>(r.n, false));
  for (std::size_t v = 0; v < r.n; ++v) {
    reach[v][v] = true;
    for (auto w : r.edge_targets[v]) reach[v][w] = true;
    for (auto w : r.bundle_targets[v]) reach[v][w] = true;
  }
  for (std::size_t k = 0; k < r.n; ++k)
    for (std::size_t i = 0; i < r.n; ++i)
      for (std::size_t j = 0; j < r.n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  return reach;
}

// Simple cycles over named edges, each as its edge sequence starting at its
// least vertex.
inline std::set<std::vector<std::size_t>> brute_simple_cycles(
    const DirectedGraph& g) {
  const RawGraph r(g);
  std::set<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(r.n, false);
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start,
                                                          std::size_t v) {
    for (std::size_t i = 0; i < r.edge_targets[v].size(); ++i) {
      const auto w = r.edge_targets[v][i];
      const auto e = r.edge_ids[v][i];
      if (w == start) {
        path.push_back(e);
        out.insert(path);
        path.pop_back();
      } else if (w > start && !on_path[w]) {
        on_path[w] = true;
        path.push_back(e);
        dfs(start, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (std::size_t s = 0; s < r.n; ++s) {
    on_path[s] = true;
    dfs(s, s);
    on_path[s] = false;
  }
  return out;
}

// An exit of a cycle: an infinite emitter on it, or an edge leaving one of
// its vertices other than the cycle's own edge there.
inline bool brute_has_exit(const DirectedGraph& g,
                           const std::vector<std::size_t>& cycle) {
  const RawGraph r(g);
  for (auto e : cycle) {
    const auto v = g.edge(e).src;
    if (!r.bundle_targets[v].empty()) return true;
    if (r.edge_ids[v].size() > 1) return true;
  }
  return false;
}

inline bool brute_condition_L(const DirectedGraph& g) {
  for (const auto& c : brute_simple_cycles(g)) {
    if (!brute_has_exit(g, c)) return false;
  }
  return true;
}

// Counts first-return closed paths at v (paths v -> v meeting v only at
// their ends) of length at most 2n, stopping at two. A bundle counts as two
// parallel edges. Exactly one such path means v sits on a cycle without K.
inline int first_return_paths(const DirectedGraph& g, std::size_t v) {
  const RawGraph r(g);
  const std::size_t bound = 2 * r.n;
  int count = 0;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t at,
                                                           std::size_t len) {
    if (count >= 2 || len >= bound) return;
    auto step = [&](std::size_t w, int multiplicity) {
      for (int k = 0; k < multiplicity && count < 2; ++k) {
        if (w == v) {
          ++count;
        } else {
          walk(w, len + 1);
        }
      }
    };
    for (auto w : r.edge_targets[at]) step(w, 1);
    for (auto w : r.bundle_targets[at]) step(w, 2);
  };
  walk(v, 0);
  return count;
}

inline bool brute_condition_K(const DirectedGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (first_return_paths(g, v) == 1) return false;
  }
  return true;
}

// Breaking vertices straight from the definition.
inline VertexSet brute_breaking(const DirectedGraph& g, const VertexSet& h) {
  const RawGraph r(g);
  VertexSet out(r.n);
  for (std::size_t v = 0; v < r.n; ++v) {
    if (h.contains(v) || r.bundle_targets[v].empty()) continue;
    bool bundles_inside = true;
    for (auto w : r.bundle_targets[v]) bundles_inside &= h.contains(w);
    std::size_t outside = 0;
    for (auto w : r.edge_targets[v]) outside += h.contains(w) ? 0 : 1;
    if (bundles_inside && outside >= 1) out.insert(v);
  }
  return out;
}

}  // namespace lpa::testing

#endif  // LPA_TESTS_SUPPORT_H_
