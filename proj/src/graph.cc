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

#include "lpa/graph.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <utility>

#include "lpa/errors.h"

namespace lpa {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t universe) {
  return (universe + kWordBits - 1) / kWordBits;
}

void check_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) {
    throw InvalidArgument("vertex sets over different graphs");
  }
}

// FNV-1a over a byte stream; stable across runs and platforms.
class Fnv1a {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 1099511628211ULL;
    }
    hash_ ^= 0xff;
    hash_ *= 1099511628211ULL;
  }
  void add(std::size_t n) { add(std::to_string(n)); }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 14695981039346656037ULL;
};

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::of(std::size_t universe,
                        std::initializer_list<std::size_t> members) {
  VertexSet s(universe);
  for (std::size_t v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from_ids(const DirectedGraph& g,
                              std::span<const std::string> ids) {
  VertexSet s(g.vertex_count());
  for (const auto& id : ids) s.insert(g.vertex_index(id));
  return s;
}

VertexSet VertexSet::from_ids(const DirectedGraph& g,
                              std::initializer_list<std::string_view> ids) {
  VertexSet s(g.vertex_count());
  for (auto id : ids) s.insert(g.vertex_index(id));
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::contains(std::size_t v) const noexcept {
  return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
}

void VertexSet::insert(std::size_t v) {
  if (v >= universe_) throw InvalidArgument("vertex index out of range");
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(std::size_t v) {
  if (v >= universe_) throw InvalidArgument("vertex index out of range");
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  if (universe_ != other.universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  if (universe_ != other.universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

VertexSet VertexSet::complement() const {
  return full(universe_) - *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(i * kWordBits +
                    static_cast<std::size_t>(std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<std::string> VertexSet::ids(const DirectedGraph& g) const {
  std::vector<std::string> out;
  for (std::size_t v : members()) out.push_back(g.vertex_id(v));
  return out;
}

std::size_t VertexSet::hash() const noexcept {
  std::size_t h = universe_;
  for (auto w : words_) h = h * 0x9e3779b97f4a7c15ULL ^ (w + (h >> 29));
  return h;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Equal sizes: the set owning the lowest differing vertex has the smaller
  // member at the first position where the sorted lists disagree.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    std::uint64_t low = diff & (~diff + 1);
    return (a.words_[i] & low) ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// DirectedGraph

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::kSink:
      return "sink";
    case VertexKind::kRegular:
      return "regular";
    case VertexKind::kInfiniteEmitter:
      return "infinite_emitter";
  }
  return "unknown";
}

DirectedGraph DirectedGraph::build(std::vector<std::string> vertices,
                                   std::vector<EdgeSpec> edges,
                                   std::vector<BundleSpec> bundles) {
  if (vertices.empty()) throw GraphError("graph has no vertices");
  for (const auto& v : vertices) {
    if (v.empty()) throw GraphError("empty vertex id");
  }
  std::sort(vertices.begin(), vertices.end());
  if (auto it = std::adjacent_find(vertices.begin(), vertices.end());
      it != vertices.end()) {
    throw GraphError("duplicate vertex id '" + *it + "'");
  }

  DirectedGraph g;
  g.vertices_ = std::move(vertices);
  auto endpoint = [&g](const std::string& id, std::string_view what) {
    auto v = g.find_vertex(id);
    if (!v) {
      throw GraphError("unknown " + std::string(what) + " endpoint '" + id +
                       "'");
    }
    return *v;
  };

  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& spec = edges[i];
    if (spec.id.empty()) throw GraphError("empty edge id");
    if (i > 0 && edges[i - 1].id == spec.id) {
      throw GraphError("duplicate edge id '" + spec.id + "'");
    }
    g.edges_.push_back(
        Edge{spec.id, endpoint(spec.src, "edge"), endpoint(spec.dst, "edge")});
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& spec : bundles) {
    OmegaBundle b{endpoint(spec.src, "bundle"), endpoint(spec.dst, "bundle")};
    if (!seen.emplace(b.src, b.dst).second) {
      throw GraphError("duplicate omega bundle " + spec.src + " -> " +
                       spec.dst);
    }
    g.bundles_.push_back(b);
  }
  std::sort(g.bundles_.begin(), g.bundles_.end(),
            [](const OmegaBundle& a, const OmegaBundle& b) {
              return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
            });

  const std::size_t n = g.vertices_.size();
  g.out_edges_.assign(n, {});
  g.out_bundles_.assign(n, {});
  g.successors_.assign(n, {});
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    g.out_edges_[g.edges_[e].src].push_back(e);
    g.successors_[g.edges_[e].src].push_back(g.edges_[e].dst);
  }
  for (std::size_t b = 0; b < g.bundles_.size(); ++b) {
    g.out_bundles_[g.bundles_[b].src].push_back(b);
    g.successors_[g.bundles_[b].src].push_back(g.bundles_[b].dst);
  }
  for (auto& succ : g.successors_) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }

  Fnv1a h;
  h.add(n);
  for (const auto& v : g.vertices_) h.add(v);
  h.add(g.edges_.size());
  for (const auto& e : g.edges_) {
    h.add(e.id);
    h.add(e.src);
    h.add(e.dst);
  }
  h.add(g.bundles_.size());
  for (const auto& b : g.bundles_) {
    h.add(b.src);
    h.add(b.dst);
  }
  g.fingerprint_ = h.value();
  return g;
}

std::optional<std::size_t> DirectedGraph::find_vertex(
    std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t DirectedGraph::vertex_index(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw InvalidArgument("unknown vertex '" + std::string(id) + "'");
  return *v;
}

std::optional<std::size_t> DirectedGraph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, std::string_view key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t DirectedGraph::edge_index(std::string_view id) const {
  auto e = find_edge(id);
  if (!e) throw InvalidArgument("unknown edge '" + std::string(id) + "'");
  return *e;
}

VertexKind DirectedGraph::kind(std::size_t v) const {
  if (!out_bundles(v).empty()) return VertexKind::kInfiniteEmitter;
  if (!out_edges(v).empty()) return VertexKind::kRegular;
  return VertexKind::kSink;
}

bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size() ||
      a.bundles_.size() != b.bundles_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.id != y.id || x.src != y.src || x.dst != y.dst) return false;
  }
  for (std::size_t i = 0; i < a.bundles_.size(); ++i) {
    if (a.bundles_[i].src != b.bundles_[i].src ||
        a.bundles_[i].dst != b.bundles_[i].dst) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Queries

VertexKind vertex_kind(const DirectedGraph& g, std::string_view v) {
  return g.kind(g.vertex_index(v));
}

VertexSet descendants(const DirectedGraph& g, std::size_t v) {
  VertexSet seen(g.vertex_count());
  seen.insert(v);
  std::vector<std::size_t> stack{v};
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : g.successors(x)) {
      if (!seen.contains(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
    }
  }
  return seen;
}

std::vector<VertexSet> descendant_table(const DirectedGraph& g) {
  std::vector<VertexSet> table;
  table.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    table.push_back(descendants(g, v));
  }
  return table;
}

bool reaches(const DirectedGraph& g, std::size_t u, std::size_t v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw InvalidArgument("vertex index out of range");
  }
  return descendants(g, u).contains(v);
}

bool reaches(const DirectedGraph& g, std::string_view u, std::string_view v) {
  return reaches(g, g.vertex_index(u), g.vertex_index(v));
}

VertexSet m_of(const DirectedGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw InvalidArgument("vertex index out of range");
  std::vector<std::vector<std::size_t>> preds(g.vertex_count());
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    for (std::size_t y : g.successors(x)) preds[y].push_back(x);
  }
  VertexSet seen(g.vertex_count());
  seen.insert(v);
  std::vector<std::size_t> stack{v};
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : preds[x]) {
      if (!seen.contains(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
    }
  }
  return seen;
}

VertexSet m_of(const DirectedGraph& g, std::string_view v) {
  return m_of(g, g.vertex_index(v));
}

}  // namespace lpa
