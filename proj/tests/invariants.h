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


// Structural invariants every maximality report must satisfy, checked
// against brute-force enumeration of admissible pairs.

#ifndef LPA_TESTS_INVARIANTS_H_
#define LPA_TESTS_INVARIANTS_H_

#include <string>
#include <variant>
#include <vector>

#include "lpa/graph.h"
#include "lpa/hs_lattice.h"
#include "lpa/ideals.h"
#include "lpa/structure.h"

namespace lpa::testing {

inline bool leq_prime_maximal(const AdmissiblePair& p,
                              const std::vector<AdmissiblePair>& proper) {
  for (const auto& q : proper) {
    if (q != p && leq_prime(p, q)) return false;
  }
  return true;
}

// Returns one message per violated invariant; empty means all hold.
inline std::vector<std::string> theorem_violations(const DirectedGraph& g) {
  std::vector<std::string> out;
  const auto report = existence_report(g);
  const std::size_t n = g.vertex_count();

  std::vector<AdmissiblePair> proper;
  for (auto& p : enumerate_admissible_pairs(g)) {
    if (p.h().vertices().size() != n) proper.push_back(std::move(p));
  }

  for (const auto& p : report.graded_maximals) {
    if (!classify_prime(g, GradedIdeal{p})) {
      out.push_back("graded maximal is not prime");
    }
    if (!leq_prime_maximal(p, proper)) {
      out.push_back("graded maximal is not maximal among proper pairs");
    }
    if (!is_downward_directed(g, p.h().vertices().complement())) {
      out.push_back("complement of graded maximal is not downward directed");
    }
  }
  for (const auto& f : report.nongraded_maximal_families) {
    if (!classify_prime(g, f)) out.push_back("maximal family is not prime");
    if (!leq_prime_maximal(gr_of(g, f), proper)) {
      out.push_back("gr of maximal family is not maximal among proper pairs");
    }
  }
  if (report.unique_maximal &&
      !std::holds_alternative<GradedIdeal>(*report.unique_maximal)) {
    out.push_back("unique maximal is not graded");
  }
  if (report.every_maximal_graded !=
      report.nongraded_maximal_families.empty()) {
    out.push_back("every_maximal_graded disagrees with the family list");
  }
  if (report.exists_maximal !=
      (!report.graded_maximals.empty() ||
       !report.nongraded_maximal_families.empty())) {
    out.push_back("exists_maximal disagrees with the maximal lists");
  }
  return out;
}

}  // namespace lpa::testing

#endif  // LPA_TESTS_INVARIANTS_H_
