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

#include "lpa/hs_lattice.h"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "lpa/errors.h"

namespace lpa {
namespace {

void check_universe(const DirectedGraph& g, const VertexSet& x) {
  if (x.universe() != g.vertex_count()) {
    throw InvalidArgument("vertex set does not belong to this graph");
  }
}

// Precomputed reachability and saturation data, reused across many closures.
class ClosureEngine {
 public:
  explicit ClosureEngine(const DirectedGraph& g)
      : n_(g.vertex_count()), below_(descendant_table(g)) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (g.kind(v) != VertexKind::kRegular) continue;
      VertexSet targets(n_);
      for (std::size_t e : g.out_edges(v)) targets.insert(g.edge(e).dst);
      regular_.push_back(v);
      targets_.push_back(std::move(targets));
    }
  }

  VertexSet hereditary(const VertexSet& x) const {
    VertexSet out(n_);
    for (std::size_t v : x.members()) out |= below_[v];
    return out;
  }

  // Saturating a hereditary set keeps it hereditary: a vertex is only added
  // once all its targets, and so all its descendants, are present.
  VertexSet closure(const VertexSet& x) const {
    VertexSet out = hereditary(x);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < regular_.size(); ++i) {
        std::size_t v = regular_[i];
        if (!out.contains(v) && targets_[i].is_subset_of(out)) {
          out.insert(v);
          grew = true;
        }
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<VertexSet> below_;
  std::vector<std::size_t> regular_;
  std::vector<VertexSet> targets_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

void check_enumerable(const DirectedGraph& g, const EnumerationLimits& limits) {
  if (g.vertex_count() > limits.max_vertices) {
    throw ResourceLimit("graph has " + std::to_string(g.vertex_count()) +
                            " vertices; exact enumeration is limited to " +
                            std::to_string(limits.max_vertices),
                        limits.max_vertices);
  }
}

std::string fresh_id(std::string base, auto&& taken) {
  do {
    base += '\'';
  } while (taken(base));
  return base;
}

}  // namespace

bool is_hereditary(const DirectedGraph& g, const VertexSet& x) {
  check_universe(g, x);
  for (std::size_t v : x.members()) {
    for (std::size_t w : g.successors(v)) {
      if (!x.contains(w)) return false;
    }
  }
  return true;
}

bool is_saturated(const DirectedGraph& g, const VertexSet& x) {
  check_universe(g, x);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (x.contains(v) || g.kind(v) != VertexKind::kRegular) continue;
    bool inside = std::all_of(
        g.out_edges(v).begin(), g.out_edges(v).end(),
        [&](std::size_t e) { return x.contains(g.edge(e).dst); });
    if (inside) return false;
  }
  return true;
}

HereditarySaturatedSet HereditarySaturatedSet::certify(const DirectedGraph& g,
                                                       VertexSet x) {
  check_universe(g, x);
  if (!is_hereditary(g, x)) {
    throw InvalidArgument("vertex set is not hereditary");
  }
  if (!is_saturated(g, x)) throw InvalidArgument("vertex set is not saturated");
  return HereditarySaturatedSet(std::move(x), g.fingerprint());
}

VertexSet hereditary_closure(const DirectedGraph& g, const VertexSet& x) {
  check_universe(g, x);
  VertexSet out = x;
  std::vector<std::size_t> stack = x.members();
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : g.successors(v)) {
      if (!out.contains(w)) {
        out.insert(w);
        stack.push_back(w);
      }
    }
  }
  return out;
}

HereditarySaturatedSet hs_closure(const DirectedGraph& g, const VertexSet& x) {
  check_universe(g, x);
  return HereditarySaturatedSet(ClosureEngine(g).closure(x), g.fingerprint());
}

bool HSLattice::contains(const VertexSet& x) const {
  return std::any_of(sets.begin(), sets.end(),
                     [&](const auto& h) { return h.vertices() == x; });
}

bool HSLattice::leq(std::size_t i, std::size_t j) const {
  return sets.at(i).vertices().is_subset_of(sets.at(j).vertices());
}

HSLattice enumerate_HE(const DirectedGraph& g,
                       const EnumerationLimits& limits) {
  check_enumerable(g, limits);
  const std::size_t n = g.vertex_count();
  ClosureEngine engine(g);

  // Every closure of a subset is reached by adding its members one at a
  // time, since closure(closure(A) + v) == closure(A + v).
  const VertexSet everything = VertexSet::full(n);
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::unordered_set<VertexSet, VertexSetHash> maximal;
  std::deque<VertexSet> queue;
  auto visit = [&](VertexSet s) {
    if (seen.contains(s)) return;
    if (seen.size() >= limits.cap) {
      throw ResourceLimit("more than " + std::to_string(limits.cap) +
                              " hereditary saturated sets",
                          limits.cap);
    }
    seen.insert(s);
    queue.push_back(std::move(s));
  };
  visit(engine.closure(VertexSet(n)));
  while (!queue.empty()) {
    VertexSet h = std::move(queue.front());
    queue.pop_front();
    // h is maximal proper iff adding any single outside vertex closes up to
    // the whole vertex set.
    bool only_top_above = h != everything;
    for (std::size_t v = 0; v < n; ++v) {
      if (h.contains(v)) continue;
      VertexSet grown = h;
      grown.insert(v);
      VertexSet closed = engine.closure(grown);
      if (closed != everything) only_top_above = false;
      visit(std::move(closed));
    }
    if (only_top_above) maximal.insert(std::move(h));
  }

  std::vector<VertexSet> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  HSLattice lattice;
  lattice.sets.reserve(sorted.size());
  for (auto& s : sorted) {
    if (maximal.contains(s)) {
      lattice.maximal_proper.push_back(lattice.sets.size());
    }
    lattice.sets.push_back(HereditarySaturatedSet::certify(g, std::move(s)));
  }
  return lattice;
}

std::vector<HereditarySaturatedSet> maximal_proper_elements(
    const HSLattice& lattice) {
  std::vector<HereditarySaturatedSet> out;
  for (std::size_t i : lattice.maximal_proper) out.push_back(lattice.sets.at(i));
  return out;
}

HereditarySaturatedSet join(const DirectedGraph& g,
                            const HereditarySaturatedSet& a,
                            const HereditarySaturatedSet& b) {
  return hs_closure(g, a.vertices() | b.vertices());
}

HereditarySaturatedSet meet(const DirectedGraph& g,
                            const HereditarySaturatedSet& a,
                            const HereditarySaturatedSet& b) {
  return HereditarySaturatedSet::certify(g, a.vertices() & b.vertices());
}

VertexSet breaking_vertices(const DirectedGraph& g,
                            const HereditarySaturatedSet& h) {
  if (h.graph_fingerprint() != g.fingerprint()) {
    throw InvalidArgument("hereditary saturated set belongs to another graph");
  }
  const VertexSet& in = h.vertices();
  VertexSet out(g.vertex_count());
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    if (in.contains(w) || g.kind(w) != VertexKind::kInfiniteEmitter) continue;
    bool bundles_inside = std::all_of(
        g.out_bundles(w).begin(), g.out_bundles(w).end(),
        [&](std::size_t b) { return in.contains(g.bundles()[b].dst); });
    bool edge_outside = std::any_of(
        g.out_edges(w).begin(), g.out_edges(w).end(),
        [&](std::size_t e) { return !in.contains(g.edge(e).dst); });
    if (bundles_inside && edge_outside) out.insert(w);
  }
  return out;
}

AdmissiblePair AdmissiblePair::make(const DirectedGraph& g,
                                    HereditarySaturatedSet h, VertexSet s) {
  check_universe(g, s);
  if (!s.is_subset_of(breaking_vertices(g, h))) {
    throw InvalidArgument("S is not a set of breaking vertices of H");
  }
  return AdmissiblePair(std::move(h), std::move(s));
}

AdmissiblePair AdmissiblePair::saturated(const DirectedGraph& g,
                                         HereditarySaturatedSet h) {
  VertexSet b = breaking_vertices(g, h);
  return AdmissiblePair(std::move(h), std::move(b));
}

bool leq_prime(const AdmissiblePair& p1, const AdmissiblePair& p2) {
  if (p1.graph_fingerprint() != p2.graph_fingerprint()) {
    throw InvalidArgument("admissible pairs from different graphs");
  }
  const VertexSet& h2 = p2.h().vertices();
  return p1.h().vertices().is_subset_of(h2) &&
         p1.s().is_subset_of(h2 | p2.s());
}

std::vector<AdmissiblePair> enumerate_admissible_pairs(
    const DirectedGraph& g, const EnumerationLimits& limits) {
  std::vector<AdmissiblePair> out;
  for (const auto& h : enumerate_HE(g, limits).sets) {
    auto breaking = breaking_vertices(g, h).members();
    if (breaking.size() >= 63) {
      throw ResourceLimit("too many breaking vertices", limits.cap);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << breaking.size());
         ++mask) {
      if (out.size() >= limits.cap) {
        throw ResourceLimit("more than " + std::to_string(limits.cap) +
                                " admissible pairs",
                            limits.cap);
      }
      VertexSet s(g.vertex_count());
      for (std::size_t i = 0; i < breaking.size(); ++i) {
        if (mask >> i & 1U) s.insert(breaking[i]);
      }
      out.push_back(AdmissiblePair::make(g, h, std::move(s)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DirectedGraph quotient_graph(const DirectedGraph& g, const AdmissiblePair& p) {
  if (p.graph_fingerprint() != g.fingerprint()) {
    throw InvalidArgument("admissible pair belongs to another graph");
  }
  // Re-derive admissibility against g itself.
  AdmissiblePair checked = AdmissiblePair::make(g, p.h(), p.s());
  const VertexSet& h = checked.h().vertices();
  const VertexSet unbroken = breaking_vertices(g, checked.h()) - checked.s();

  if (h.size() == g.vertex_count()) {
    throw InvalidArgument("quotient by the full vertex set has no vertices");
  }

  std::set<std::string> minted;
  auto vertex_taken = [&](const std::string& id) {
    return g.find_vertex(id).has_value() || minted.contains(id);
  };
  auto edge_taken = [&](const std::string& id) {
    return g.find_edge(id).has_value() || minted.contains(id);
  };

  std::vector<std::string> vertices;
  std::vector<std::string> primed(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v)) continue;
    vertices.push_back(g.vertex_id(v));
    if (unbroken.contains(v)) {
      primed[v] = fresh_id(g.vertex_id(v), vertex_taken);
      minted.insert(primed[v]);
      vertices.push_back(primed[v]);
    }
  }

  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    if (h.contains(e.dst)) continue;
    edges.push_back({e.id, g.vertex_id(e.src), g.vertex_id(e.dst)});
    if (unbroken.contains(e.dst)) {
      std::string id = fresh_id(e.id, edge_taken);
      minted.insert(id);
      edges.push_back({std::move(id), g.vertex_id(e.src), primed[e.dst]});
    }
  }

  std::vector<BundleSpec> bundles;
  for (const auto& b : g.bundles()) {
    if (h.contains(b.dst)) continue;
    bundles.push_back({g.vertex_id(b.src), g.vertex_id(b.dst)});
  }
  return DirectedGraph::build(std::move(vertices), std::move(edges),
                              std::move(bundles));
}

}  // namespace lpa
