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

// Exact arithmetic on finite sums of monomials k * alpha beta^* over the
// rationals.
//
// Products are reduced with the path relations and CK-1 only:
//   (alpha beta^*)(gamma delta^*) = alpha sigma delta^*      if gamma = beta sigma
//                                 = alpha (delta tau)^*      if beta = gamma tau
//                                 = 0                        otherwise.
// CK-2 is never applied, so two elements that differ only by a CK-2 rewrite
// compare unequal. Equality here is equality of reduced expressions, not a
// decision procedure for equality in the Leavitt path algebra.
//
// Bundle edges have no names and never appear in paths.

#ifndef LPA_ALGEBRA_H_
#define LPA_ALGEBRA_H_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/graph.h"
#include "lpa/hs_lattice.h"

namespace lpa {

using Rational = mpq_class;

// A path of named edges; a vertex is the path of length 0 at itself.
class Path {
 public:
  static Path vertex(const DirectedGraph& g, std::size_t v);
  // Throws InvalidArgument if the edges are unknown or do not compose.
  static Path from_edges(const DirectedGraph& g,
                         std::vector<std::size_t> edges);

  std::size_t source() const noexcept { return source_; }
  std::size_t range() const noexcept { return range_; }
  std::span<const std::size_t> edges() const noexcept { return edges_; }
  std::size_t length() const noexcept { return edges_.size(); }

  bool is_prefix_of(const Path& other) const noexcept;
  // The part of this path after its first k edges.
  Path drop(const DirectedGraph& g, std::size_t k) const;
  // this followed by tail; throws InvalidArgument unless range() ==
  // tail.source().
  Path then(const Path& tail) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) {
    if (auto c = a.source_ <=> b.source_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end());
  }

 private:
  Path(std::size_t source, std::size_t range, std::vector<std::size_t> edges)
      : source_(source), range_(range), edges_(std::move(edges)) {}

  std::size_t source_ = 0;
  std::size_t range_ = 0;
  std::vector<std::size_t> edges_;
};

struct Monomial {
  Rational coefficient;
  Path alpha;
  Path beta;
};

// |alpha| - |beta|.
int degree(const Monomial& m);

// A finite linear combination of alpha beta^* in canonical form: terms
// sorted by (alpha, beta), like terms merged, zero terms dropped.
class AlgebraElement {
 public:
  AlgebraElement() = default;  // zero

  // k * alpha beta^*; throws InvalidArgument unless r(alpha) == r(beta).
  static AlgebraElement monomial(const DirectedGraph& g, Rational k, Path alpha,
                                 Path beta);
  static AlgebraElement vertex(const DirectedGraph& g, std::string_view v);
  static AlgebraElement edge(const DirectedGraph& g, std::string_view e);
  static AlgebraElement ghost(const DirectedGraph& g, std::string_view e);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::vector<Monomial> terms() const;

  // Degree shared by all terms, if there is one. Zero has none.
  std::optional<int> homogeneous_degree() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& k);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const Rational& k, AlgebraElement a) {
    return a *= k;
  }

  // 0 for the zero element, which belongs to every graph.
  std::uint64_t graph_fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  friend AlgebraElement mul(const DirectedGraph&, const AlgebraElement&,
                            const AlgebraElement&);

  void add_term(const Rational& k, const Path& alpha, const Path& beta);
  void adopt_fingerprint(const AlgebraElement& other);

  std::map<std::pair<Path, Path>, Rational> terms_;
  std::uint64_t fingerprint_ = 0;
};

// Bilinear product under the path relations and CK-1. Throws
// InvalidArgument if either factor was built over a different graph.
AlgebraElement mul(const DirectedGraph& g, const AlgebraElement& x,
                   const AlgebraElement& y);

// v^H = v - sum of e e^* over named edges e from v landing outside H.
// Throws InvalidArgument unless v is a breaking vertex of H.
AlgebraElement v_H_element(const DirectedGraph& g,
                           const HereditarySaturatedSet& h, std::string_view v);

bool is_idempotent(const DirectedGraph& g, const AlgebraElement& x);

// Text syntax, whitespace separated:
//   element := "0" | ["-"] term { ("+" | "-") term }
//   term    := [rational] monomial            rational: 3, -2, 1/2
//   monomial:= path                            alpha, with beta = r(alpha)
//            | path "*"                        beta^*, with alpha = r(beta)
//            | path "|" path "*"               alpha beta^*
//   path    := vertex-id | edge-id {edge-id}
// The "*" may be attached to the last edge id ("c*") or stand alone, and "|"
// may be attached to its neighbours, as may a leading sign ("-c"). "a b*" is
// (ab)^*, not a b^*. An id naming both an edge and a vertex reads as the edge.
AlgebraElement parse_element(const DirectedGraph& g, std::string_view text);
std::string format_element(const DirectedGraph& g, const AlgebraElement& x);

}  // namespace lpa

#endif  // LPA_ALGEBRA_H_
