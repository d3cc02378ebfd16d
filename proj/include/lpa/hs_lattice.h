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

// Hereditary saturated vertex sets, the lattice they form, breaking vertices,
// admissible pairs and quotient graphs.
//
// A set H is hereditary when it is closed under following edges (bundles
// included), and saturated when every regular vertex whose named edges all
// land in H is itself in H. Sinks and infinite emitters are never forced.

#ifndef LPA_HS_LATTICE_H_
#define LPA_HS_LATTICE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lpa/graph.h"

namespace lpa {

struct EnumerationLimits {
  // Exact lattice enumeration refuses graphs with more vertices than this.
  std::size_t max_vertices = 20;
  // Upper bound on enumerated objects (lattice elements, simple cycles).
  std::size_t cap = 1'000'000;
};

bool is_hereditary(const DirectedGraph& g, const VertexSet& x);
bool is_saturated(const DirectedGraph& g, const VertexSet& x);

// A vertex set certified hereditary and saturated in one graph.
class HereditarySaturatedSet {
 public:
  // Throws InvalidArgument unless x is hereditary and saturated in g.
  static HereditarySaturatedSet certify(const DirectedGraph& g, VertexSet x);

  const VertexSet& vertices() const noexcept { return vertices_; }
  std::uint64_t graph_fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const HereditarySaturatedSet& a,
                         const HereditarySaturatedSet& b) {
    return a.fingerprint_ == b.fingerprint_ && a.vertices_ == b.vertices_;
  }
  friend auto operator<=>(const HereditarySaturatedSet& a,
                          const HereditarySaturatedSet& b) {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  HereditarySaturatedSet(VertexSet v, std::uint64_t fingerprint)
      : vertices_(std::move(v)), fingerprint_(fingerprint) {}
  friend HereditarySaturatedSet hs_closure(const DirectedGraph&,
                                           const VertexSet&);

  VertexSet vertices_;
  std::uint64_t fingerprint_ = 0;
};

VertexSet hereditary_closure(const DirectedGraph& g, const VertexSet& x);

// Least hereditary saturated superset of x.
HereditarySaturatedSet hs_closure(const DirectedGraph& g, const VertexSet& x);

struct HSLattice {
  // Every hereditary saturated set, ascending (size, then members); the
  // first element is the empty set and the last is the full vertex set.
  std::vector<HereditarySaturatedSet> sets;
  // Indices into `sets` of the maximal proper elements, ascending.
  std::vector<std::size_t> maximal_proper;

  bool contains(const VertexSet& x) const;
  // The set at `i` is contained in the set at `j`.
  bool leq(std::size_t i, std::size_t j) const;
};

// Exact enumeration of the lattice. Throws ResourceLimit when the graph has
// more than limits.max_vertices vertices or the lattice exceeds limits.cap.
HSLattice enumerate_HE(const DirectedGraph& g,
                       const EnumerationLimits& limits = {});

// Elements H != E^0 with nothing strictly between H and E^0.
std::vector<HereditarySaturatedSet> maximal_proper_elements(
    const HSLattice& lattice);

// Least upper bound in the lattice.
HereditarySaturatedSet join(const DirectedGraph& g,
                            const HereditarySaturatedSet& a,
                            const HereditarySaturatedSet& b);
// Greatest lower bound: plain intersection.
HereditarySaturatedSet meet(const DirectedGraph& g,
                            const HereditarySaturatedSet& a,
                            const HereditarySaturatedSet& b);

// B_H: infinite emitters outside H whose bundles all land in H and which
// send at least one named edge outside H.
VertexSet breaking_vertices(const DirectedGraph& g,
                            const HereditarySaturatedSet& h);

// (H, S) with S a subset of B_H. Indexes the graded ideal I(H, S).
class AdmissiblePair {
 public:
  // Throws InvalidArgument unless s is a subset of breaking_vertices(g, h).
  static AdmissiblePair make(const DirectedGraph& g, HereditarySaturatedSet h,
                             VertexSet s);
  // (H, B_H).
  static AdmissiblePair saturated(const DirectedGraph& g,
                                  HereditarySaturatedSet h);

  const HereditarySaturatedSet& h() const noexcept { return h_; }
  const VertexSet& s() const noexcept { return s_; }
  std::uint64_t graph_fingerprint() const noexcept {
    return h_.graph_fingerprint();
  }

  friend bool operator==(const AdmissiblePair&,
                         const AdmissiblePair&) = default;
  friend std::strong_ordering operator<=>(const AdmissiblePair& a,
                                          const AdmissiblePair& b) {
    if (auto c = a.h_.vertices() <=> b.h_.vertices(); c != 0) return c;
    return a.s_ <=> b.s_;
  }

 private:
  AdmissiblePair(HereditarySaturatedSet h, VertexSet s)
      : h_(std::move(h)), s_(std::move(s)) {}

  HereditarySaturatedSet h_;
  VertexSet s_;
};

// (H1, S1) <=' (H2, S2) iff H1 is inside H2 and S1 is inside H2 union S2.
// Throws InvalidArgument when the pairs come from different graphs.
bool leq_prime(const AdmissiblePair& p1, const AdmissiblePair& p2);

// Every admissible pair of g, ascending. Subject to the same limits as
// enumerate_HE; the cap also bounds the number of pairs.
std::vector<AdmissiblePair> enumerate_admissible_pairs(
    const DirectedGraph& g, const EnumerationLimits& limits = {});

// E\(H, S): vertices outside H plus a sink v' for each v in B_H \ S; named
// edges landing outside H, plus e' : s(e) -> r(e)' for each named edge into
// B_H \ S; bundles landing outside H. Primed ids append "'" (repeated until
// the id is fresh).
DirectedGraph quotient_graph(const DirectedGraph& g, const AdmissiblePair& p);

}  // namespace lpa

#endif  // LPA_HS_LATTICE_H_
