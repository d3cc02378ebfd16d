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

// Prime and maximal ideals of the Leavitt path algebra of a finite graph,
// described through graph data.
//
// Graded ideals are indexed by admissible pairs. Non-graded ideals come in
// families I(H, B_H) + <f(c)>, one ideal per irreducible f in K[x, x^-1];
// a family is recorded by (H, c) and f stays symbolic.
//
// Everything here enumerates the lattice of hereditary saturated sets
// exactly, so it inherits the limits of enumerate_HE.

#ifndef LPA_IDEALS_H_
#define LPA_IDEALS_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpa/graph.h"
#include "lpa/hs_lattice.h"
#include "lpa/structure.h"

namespace lpa {

// Stands in for the irreducible polynomial parameter of a non-graded family.
inline constexpr std::string_view kIrreducibleToken =
    "irreducible f in K[x,x^-1]";

struct GradedIdeal {
  AdmissiblePair pair;

  friend bool operator==(const GradedIdeal&, const GradedIdeal&) = default;
};

struct NonGradedFamily {
  HereditarySaturatedSet h;
  Cycle cycle;

  friend bool operator==(const NonGradedFamily&,
                         const NonGradedFamily&) = default;
};

using IdealDescriptor = std::variant<GradedIdeal, NonGradedFamily>;

// Descriptors are ordered by H, graded before non-graded, then by S or cycle.
bool descriptor_less(const IdealDescriptor& a, const IdealDescriptor& b);

// Throws InvalidArgument unless d belongs to g: H hereditary saturated in g,
// S inside B_H, the cycle a cycle of g lying outside H.
void check_descriptor(const DirectedGraph& g, const IdealDescriptor& d);

// Decides primality by the three-clause classification:
//   (i)   I(H, B_H) with E^0 \ H downward directed;
//   (ii)  I(H, B_H - {u}) with u in B_H and E^0 \ H == M(u);
//   (iii) I(H, B_H) + <f(c)> with c a cycle without K based at u and
//         E^0 \ H == M(u).
// Graded descriptors must have S == B_H or S == B_H - {u}; anything else is
// rejected with InvalidArgument.
bool classify_prime(const DirectedGraph& g, const IdealDescriptor& d,
                    std::size_t cycle_cap = kDefaultCycleCap);

// Every prime, one entry per non-graded family, sorted by descriptor_less.
std::vector<IdealDescriptor> enumerate_primes(
    const DirectedGraph& g, const EnumerationLimits& limits = {});

// Largest graded ideal inside d: the pair itself, or (H, B_H) for a family.
AdmissiblePair gr_of(const DirectedGraph& g, const IdealDescriptor& d);

// (H, B_H) for every maximal proper H whose quotient satisfies Condition (L).
std::vector<AdmissiblePair> maximal_graded_ideals(
    const DirectedGraph& g, const EnumerationLimits& limits = {});

// (H, c) for every maximal proper H and every exitless cycle c of
// E\(H, B_H).
std::vector<NonGradedFamily> maximal_nongraded_families(
    const DirectedGraph& g, const EnumerationLimits& limits = {});

struct MaximalityReport {
  std::vector<AdmissiblePair> graded_maximals;
  std::vector<NonGradedFamily> nongraded_maximal_families;
  // Some maximal proper hereditary saturated set exists.
  bool exists_maximal = false;
  // Every proper hereditary saturated set sits below a maximal proper one.
  bool every_ideal_below_maximal = false;
  // Every maximal proper H has a quotient satisfying Condition (L).
  bool every_maximal_graded = false;
  // Set only when there is exactly one graded maximal and no family.
  std::optional<IdealDescriptor> unique_maximal;
};

MaximalityReport existence_report(const DirectedGraph& g,
                                  const EnumerationLimits& limits = {});

}  // namespace lpa

#endif  // LPA_IDEALS_H_
