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

#include "lpa/structure.h"

#include <algorithm>
#include <functional>
#include <utility>

#include "lpa/errors.h"

namespace lpa {
namespace {

// Strongly connected components (Tarjan), restricted to vertices in `alive`.
// Returns a component id per vertex; vertices outside `alive` get npos.
std::vector<std::size_t> strong_components(
    const std::vector<std::vector<std::size_t>>& adj,
    const std::vector<bool>& alive) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const std::size_t n = adj.size();
  std::vector<std::size_t> comp(n, npos), index(n, npos), low(n, 0);
  std::vector<std::size_t> stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0, comps = 0;

  // Iterative to keep deep graphs off the call stack.
  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (!alive[root] || index[root] != npos) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj[f.v].size()) {
        std::size_t w = adj[f.v][f.next++];
        if (!alive[w]) continue;
        if (index[w] == npos) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      std::size_t v = f.v;
      frames.pop_back();
      if (!frames.empty()) {
        low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
    }
  }
  return comp;
}

// Johnson's elementary circuit enumeration on the simple digraph underlying
// the named edges; each vertex circuit is then expanded over the parallel
// edges between consecutive vertices.
class CycleEnumerator {
 public:
  CycleEnumerator(const DirectedGraph& g, std::size_t cap)
      : g_(g), cap_(cap), n_(g.vertex_count()) {
    parallel_.assign(n_, {});
    adj_.assign(n_, {});
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      auto& slots = parallel_[edge.src];
      auto it = std::find_if(slots.begin(), slots.end(),
                             [&](const auto& s) { return s.first == edge.dst; });
      if (it == slots.end()) {
        slots.push_back({edge.dst, {e}});
        adj_[edge.src].push_back(edge.dst);
      } else {
        it->second.push_back(e);
      }
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  std::vector<Cycle> run() {
    blocked_.assign(n_, false);
    block_map_.assign(n_, {});
    for (start_ = 0; start_ < n_; ++start_) {
      // Strong component of start_ in the subgraph induced by {start_, ...}.
      std::vector<bool> alive(n_, false);
      for (std::size_t v = start_; v < n_; ++v) alive[v] = true;
      auto comp = strong_components(adj_, alive);
      in_scope_.assign(n_, false);
      for (std::size_t v = start_; v < n_; ++v) {
        in_scope_[v] = comp[v] == comp[start_];
      }
      for (std::size_t v = start_; v < n_; ++v) {
        blocked_[v] = false;
        block_map_[v].clear();
      }
      path_.clear();
      circuit(start_);
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  bool circuit(std::size_t v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (std::size_t w : adj_[v]) {
      if (!in_scope_[w]) continue;
      if (w == start_) {
        emit();
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (std::size_t w : adj_[v]) {
        if (!in_scope_[w]) continue;
        auto& bm = block_map_[w];
        if (std::find(bm.begin(), bm.end(), v) == bm.end()) bm.push_back(v);
      }
    }
    path_.pop_back();
    return found;
  }

  void unblock(std::size_t u) {
    std::vector<std::size_t> work{u};
    while (!work.empty()) {
      std::size_t x = work.back();
      work.pop_back();
      if (!blocked_[x]) continue;
      blocked_[x] = false;
      for (std::size_t w : block_map_[x]) work.push_back(w);
      block_map_[x].clear();
    }
  }

  const std::vector<std::size_t>& edges_between(std::size_t a,
                                                std::size_t b) const {
    for (const auto& [dst, edges] : parallel_[a]) {
      if (dst == b) return edges;
    }
    throw std::logic_error("missing adjacency");
  }

  // Expands the vertex circuit in path_ over every choice of parallel edge.
  void emit() {
    const std::size_t len = path_.size();
    std::vector<const std::vector<std::size_t>*> choices(len);
    for (std::size_t i = 0; i < len; ++i) {
      choices[i] = &edges_between(path_[i], path_[(i + 1) % len]);
    }
    std::vector<std::size_t> pick(len, 0);
    while (true) {
      if (out_.size() >= cap_) {
        throw ResourceLimit("more than " + std::to_string(cap_) +
                                " simple cycles",
                            cap_);
      }
      std::vector<std::size_t> edges(len);
      for (std::size_t i = 0; i < len; ++i) edges[i] = (*choices[i])[pick[i]];
      out_.push_back(Cycle::from_edges(g_, std::move(edges)));
      std::size_t i = 0;
      while (i < len && ++pick[i] == choices[i]->size()) pick[i++] = 0;
      if (i == len) break;
    }
  }

  const DirectedGraph& g_;
  std::size_t cap_;
  std::size_t n_;
  std::vector<std::vector<std::pair<std::size_t, std::vector<std::size_t>>>>
      parallel_;
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t start_ = 0;
  std::vector<bool> in_scope_;
  std::vector<bool> blocked_;
  std::vector<std::vector<std::size_t>> block_map_;
  std::vector<std::size_t> path_;
  std::vector<Cycle> out_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Cycle

Cycle Cycle::from_edges(const DirectedGraph& g,
                        std::vector<std::size_t> edges) {
  if (edges.empty()) throw InvalidArgument("a cycle needs at least one edge");
  for (std::size_t e : edges) {
    if (e >= g.edge_count()) throw InvalidArgument("cycle edge not in graph");
  }
  const std::size_t len = edges.size();
  VertexSet seen(g.vertex_count());
  for (std::size_t i = 0; i < len; ++i) {
    const Edge& cur = g.edge(edges[i]);
    const Edge& next = g.edge(edges[(i + 1) % len]);
    if (cur.dst != next.src) {
      throw InvalidArgument("edges '" + cur.id + "' and '" + next.id +
                            "' do not compose");
    }
    if (seen.contains(cur.src)) {
      throw InvalidArgument("closed path repeats vertex '" +
                            g.vertex_id(cur.src) + "'");
    }
    seen.insert(cur.src);
  }
  auto least = std::min_element(
      edges.begin(), edges.end(),
      [&g](std::size_t a, std::size_t b) { return g.edge(a).src < g.edge(b).src; });
  std::rotate(edges.begin(), least, edges.end());

  Cycle c;
  c.base_ = g.edge(edges.front()).src;
  c.edges_ = std::move(edges);
  c.vertices_ = std::move(seen);
  return c;
}

Cycle Cycle::from_edge_ids(const DirectedGraph& g,
                           std::span<const std::string> ids) {
  std::vector<std::size_t> edges;
  for (const auto& id : ids) edges.push_back(g.edge_index(id));
  return from_edges(g, std::move(edges));
}

std::vector<std::string> Cycle::edge_ids(const DirectedGraph& g) const {
  std::vector<std::string> out;
  for (std::size_t e : edges_) out.push_back(g.edge(e).id);
  return out;
}

std::strong_ordering operator<=>(const Cycle& a, const Cycle& b) {
  if (auto c = a.base_ <=> b.base_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end());
}

// ---------------------------------------------------------------------------
// Analyses

std::vector<Cycle> simple_cycles(const DirectedGraph& g, std::size_t cap) {
  return CycleEnumerator(g, cap).run();
}

bool has_exit(const DirectedGraph& g, const Cycle& c) {
  // Re-validate so that a cycle from another graph is rejected.
  Cycle checked = Cycle::from_edges(
      g, std::vector<std::size_t>(c.edges().begin(), c.edges().end()));
  for (std::size_t e : checked.edges()) {
    std::size_t v = g.edge(e).src;
    if (!g.out_bundles(v).empty()) return true;
    for (std::size_t f : g.out_edges(v)) {
      if (f != e) return true;
    }
  }
  return false;
}

ConditionReport condition_L(const DirectedGraph& g, std::size_t cap) {
  for (auto& c : simple_cycles(g, cap)) {
    if (!has_exit(g, c)) return {false, std::move(c)};
  }
  return {true, std::nullopt};
}

std::vector<Cycle> cycles_without_K(const DirectedGraph& g, std::size_t cap) {
  auto cycles = simple_cycles(g, cap);
  const std::size_t n = g.vertex_count();

  std::vector<std::size_t> through(n, 0);
  for (const auto& c : cycles) {
    for (std::size_t v : c.vertices().members()) ++through[v];
  }

  // A bundle inside a strong component puts every vertex of that component on
  // infinitely many cycles.
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    adj[v].assign(g.successors(v).begin(), g.successors(v).end());
  }
  auto comp = strong_components(adj, std::vector<bool>(n, true));
  std::vector<bool> bundled_comp(n, false);
  for (const auto& b : g.bundles()) {
    if (comp[b.src] == comp[b.dst]) bundled_comp[comp[b.src]] = true;
  }

  std::vector<Cycle> out;
  for (auto& c : cycles) {
    bool alone = true;
    for (std::size_t v : c.vertices().members()) {
      if (through[v] != 1 || bundled_comp[comp[v]]) {
        alone = false;
        break;
      }
    }
    if (alone) out.push_back(std::move(c));
  }
  return out;
}

ConditionReport condition_K(const DirectedGraph& g, std::size_t cap) {
  auto bad = cycles_without_K(g, cap);
  if (bad.empty()) return {true, std::nullopt};
  return {false, std::move(bad.front())};
}

bool is_downward_directed(const DirectedGraph& g, const VertexSet& d) {
  if (d.universe() != g.vertex_count()) {
    throw InvalidArgument("vertex set does not belong to this graph");
  }
  if (d.empty()) throw InvalidArgument("downward directedness of empty set");
  auto members = d.members();
  std::vector<VertexSet> below;
  below.reserve(members.size());
  for (std::size_t v : members) below.push_back(descendants(g, v) & d);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!below[i].intersects(below[j])) return false;
    }
  }
  return true;
}

bool is_maximal_tail(const DirectedGraph& g, const VertexSet& m) {
  if (m.universe() != g.vertex_count()) {
    throw InvalidArgument("vertex set does not belong to this graph");
  }
  if (m.empty()) throw InvalidArgument("maximal tail test of empty set");
  // MT-1: closed under predecessors.
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (m.contains(u)) continue;
    for (std::size_t w : g.successors(u)) {
      if (m.contains(w)) return false;
    }
  }
  // MT-2: a regular member keeps an edge inside.
  for (std::size_t v : m.members()) {
    if (g.kind(v) != VertexKind::kRegular) continue;
    bool stays = std::any_of(
        g.out_edges(v).begin(), g.out_edges(v).end(),
        [&](std::size_t e) { return m.contains(g.edge(e).dst); });
    if (!stays) return false;
  }
  return is_downward_directed(g, m);
}

}  // namespace lpa
