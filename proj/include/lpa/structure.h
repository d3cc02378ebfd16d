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

// Cycle-level structure of a graph: simple cycles, exits, Conditions (L) and
// (K), downward directed sets and maximal tails.

#ifndef LPA_STRUCTURE_H_
#define LPA_STRUCTURE_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpa/graph.h"

namespace lpa {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

// A closed path over named edges that visits no vertex twice, rotated so that
// its base s(e1) is the canonically least vertex on it.
class Cycle {
 public:
  // Validates that the edges form a cycle of g and canonicalises the
  // rotation. Throws InvalidArgument otherwise.
  static Cycle from_edges(const DirectedGraph& g,
                          std::vector<std::size_t> edges);
  static Cycle from_edge_ids(const DirectedGraph& g,
                             std::span<const std::string> ids);

  std::span<const std::size_t> edges() const noexcept { return edges_; }
  std::size_t length() const noexcept { return edges_.size(); }
  std::size_t base() const noexcept { return base_; }
  const VertexSet& vertices() const noexcept { return vertices_; }
  std::vector<std::string> edge_ids(const DirectedGraph& g) const;

  // Cycles of one graph are ordered by base, then by edge index sequence.
  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.edges_ == b.edges_;
  }
  friend std::strong_ordering operator<=>(const Cycle& a, const Cycle& b);

 private:
  Cycle() = default;

  std::vector<std::size_t> edges_;
  std::size_t base_ = 0;
  VertexSet vertices_;
};

struct ConditionReport {
  bool holds = true;
  std::optional<Cycle> witness;  // present iff !holds
};

// Every simple cycle over named edges, one per rotation class, ascending.
// Throws ResourceLimit when more than `cap` cycles exist.
std::vector<Cycle> simple_cycles(const DirectedGraph& g,
                                 std::size_t cap = kDefaultCycleCap);

// True iff some vertex on c emits a named edge outside c or any bundle.
bool has_exit(const DirectedGraph& g, const Cycle& c);

ConditionReport condition_L(const DirectedGraph& g,
                            std::size_t cap = kDefaultCycleCap);

// Cycles none of whose vertices lies on a second cycle. A vertex whose strong
// component contains a bundle lies on infinitely many cycles through that
// bundle's anonymous edges.
std::vector<Cycle> cycles_without_K(const DirectedGraph& g,
                                    std::size_t cap = kDefaultCycleCap);

ConditionReport condition_K(const DirectedGraph& g,
                            std::size_t cap = kDefaultCycleCap);

// MT-3: any two members have a common descendant inside the set.
bool is_downward_directed(const DirectedGraph& g, const VertexSet& d);

// MT-1, MT-2 and MT-3 together.
bool is_maximal_tail(const DirectedGraph& g, const VertexSet& m);

}  // namespace lpa

#endif  // LPA_STRUCTURE_H_
