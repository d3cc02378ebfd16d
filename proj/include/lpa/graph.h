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

// Finitely presented directed graphs.
//
// A graph has a finite vertex set, a finite list of named edges (parallel
// edges allowed) and a finite list of omega bundles. An omega bundle (s, d)
// stands for countably many anonymous parallel edges from s to d; it is how
// infinite emitters are presented. Bundle edges never appear in paths.
//
// Vertices and edges are stored in lexicographic order of their ids, and
// every index handed out by this API refers to that canonical order.

#ifndef LPA_GRAPH_H_
#define LPA_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpa {

class DirectedGraph;

// A subset of the vertices of one graph, stored as a bitset over canonical
// vertex indices. Iteration and comparison follow the canonical order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  static VertexSet full(std::size_t universe);
  static VertexSet of(std::size_t universe,
                      std::initializer_list<std::size_t> members);
  // Looks up every id; throws InvalidArgument on an unknown vertex.
  static VertexSet from_ids(const DirectedGraph& g,
                            std::span<const std::string> ids);
  static VertexSet from_ids(const DirectedGraph& g,
                            std::initializer_list<std::string_view> ids);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool contains(std::size_t v) const noexcept;

  void insert(std::size_t v);
  void erase(std::size_t v);

  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;
  VertexSet complement() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  std::vector<std::size_t> members() const;
  std::vector<std::string> ids(const DirectedGraph& g) const;

  std::size_t hash() const noexcept;

  // Sets over the same universe are ordered by size, then lexicographically
  // by their sorted member lists.
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class VertexKind { kSink, kRegular, kInfiniteEmitter };

std::string_view to_string(VertexKind kind);

struct Edge {
  std::string id;
  std::size_t src = 0;
  std::size_t dst = 0;
};

struct OmegaBundle {
  std::size_t src = 0;
  std::size_t dst = 0;
};

// Input records for DirectedGraph::build, naming endpoints by id.
struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;
};

struct BundleSpec {
  std::string src;
  std::string dst;
};

class DirectedGraph {
 public:
  // Validates and canonicalises. Throws GraphError on an empty vertex list,
  // empty or duplicate vertex ids, duplicate edge ids, unknown endpoints, or
  // two bundles over the same ordered pair.
  static DirectedGraph build(std::vector<std::string> vertices,
                             std::vector<EdgeSpec> edges,
                             std::vector<BundleSpec> bundles = {});

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  std::span<const std::string> vertex_ids() const noexcept { return vertices_; }
  std::optional<std::size_t> find_vertex(std::string_view id) const;
  // Throws InvalidArgument for an unknown id.
  std::size_t vertex_index(std::string_view id) const;

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;

  std::span<const OmegaBundle> bundles() const noexcept { return bundles_; }

  // Named out-edges of v, ascending by edge id.
  std::span<const std::size_t> out_edges(std::size_t v) const {
    return out_edges_.at(v);
  }
  // Bundles leaving v, ascending by target.
  std::span<const std::size_t> out_bundles(std::size_t v) const {
    return out_bundles_.at(v);
  }
  // Every vertex one step away from v through a named edge or a bundle,
  // ascending and without repeats.
  std::span<const std::size_t> successors(std::size_t v) const {
    return successors_.at(v);
  }

  VertexKind kind(std::size_t v) const;

  // Hash of the canonical content; two graphs with equal content share it.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b);

 private:
  DirectedGraph() = default;

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<OmegaBundle> bundles_;
  std::vector<std::vector<std::size_t>> out_edges_;
  std::vector<std::vector<std::size_t>> out_bundles_;
  std::vector<std::vector<std::size_t>> successors_;
  std::uint64_t fingerprint_ = 0;
};

VertexKind vertex_kind(const DirectedGraph& g, std::string_view v);

// True iff there is a directed path of length >= 0 from u to v. Bundles count
// as edges.
bool reaches(const DirectedGraph& g, std::string_view u, std::string_view v);
bool reaches(const DirectedGraph& g, std::size_t u, std::size_t v);

// M(v): every vertex that reaches v.
VertexSet m_of(const DirectedGraph& g, std::string_view v);
VertexSet m_of(const DirectedGraph& g, std::size_t v);

// Forward reachability from v, v included.
VertexSet descendants(const DirectedGraph& g, std::size_t v);

// descendants() for every vertex, indexed by vertex.
std::vector<VertexSet> descendant_table(const DirectedGraph& g);

// Graph JSON document:
//   {"vertices":[...],"edges":[{"id":..,"src":..,"dst":..}],
//    "omega_bundles":[{"src":..,"dst":..}]}
// "omega_bundles" may be omitted; any other key is rejected.
DirectedGraph parse_graph(std::string_view text);

// Canonical compact serialisation; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const DirectedGraph& g, int indent = -1);

}  // namespace lpa

#endif  // LPA_GRAPH_H_
