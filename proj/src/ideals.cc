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

#include "lpa/ideals.h"

#include <algorithm>

#include "lpa/errors.h"

namespace lpa {
namespace {

const HereditarySaturatedSet& h_of(const IdealDescriptor& d) {
  return std::visit(
      [](const auto& x) -> const HereditarySaturatedSet& {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, GradedIdeal>) {
          return x.pair.h();
        } else {
          return x.h;
        }
      },
      d);
}

// A maximal proper H together with the exitless cycles of E\(H, B_H),
// translated back to cycles of g.
struct MaximalElement {
  AdmissiblePair pair;
  std::vector<Cycle> exitless;
};

std::vector<MaximalElement> analyse_maximal(const DirectedGraph& g,
                                            const HSLattice& lattice,
                                            std::size_t cycle_cap) {
  std::vector<MaximalElement> out;
  for (const auto& h : maximal_proper_elements(lattice)) {
    AdmissiblePair pair = AdmissiblePair::saturated(g, h);
    DirectedGraph quotient = quotient_graph(g, pair);
    std::vector<Cycle> exitless;
    for (const auto& c : simple_cycles(quotient, cycle_cap)) {
      if (has_exit(quotient, c)) continue;
      auto ids = c.edge_ids(quotient);
      exitless.push_back(Cycle::from_edge_ids(g, ids));
    }
    std::sort(exitless.begin(), exitless.end());
    out.push_back({std::move(pair), std::move(exitless)});
  }
  return out;
}

}  // namespace

bool descriptor_less(const IdealDescriptor& a, const IdealDescriptor& b) {
  const auto& ha = h_of(a).vertices();
  const auto& hb = h_of(b).vertices();
  if (ha != hb) return ha < hb;
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* ga = std::get_if<GradedIdeal>(&a)) {
    return ga->pair.s() < std::get<GradedIdeal>(b).pair.s();
  }
  return std::get<NonGradedFamily>(a).cycle <
         std::get<NonGradedFamily>(b).cycle;
}

void check_descriptor(const DirectedGraph& g, const IdealDescriptor& d) {
  const auto& h = h_of(d);
  if (h.graph_fingerprint() != g.fingerprint()) {
    throw InvalidArgument("ideal descriptor belongs to another graph");
  }
  if (const auto* graded = std::get_if<GradedIdeal>(&d)) {
    AdmissiblePair::make(g, h, graded->pair.s());
    return;
  }
  const auto& family = std::get<NonGradedFamily>(d);
  auto edges = family.cycle.edges();
  Cycle checked =
      Cycle::from_edges(g, std::vector<std::size_t>(edges.begin(), edges.end()));
  if (checked.vertices().intersects(h.vertices())) {
    throw InvalidArgument("family cycle meets H");
  }
}

bool classify_prime(const DirectedGraph& g, const IdealDescriptor& d,
                    std::size_t cycle_cap) {
  check_descriptor(g, d);
  const VertexSet& h = h_of(d).vertices();
  const VertexSet rest = h.complement();

  if (const auto* graded = std::get_if<GradedIdeal>(&d)) {
    const VertexSet breaking = breaking_vertices(g, graded->pair.h());
    const VertexSet& s = graded->pair.s();
    const VertexSet missing = breaking - s;
    if (missing.empty()) {
      // The whole algebra is not a prime ideal.
      if (rest.empty()) return false;
      return is_downward_directed(g, rest);
    }
    if (missing.size() == 1) {
      return rest == m_of(g, missing.members().front());
    }
    throw InvalidArgument(
        "graded descriptor must have S = B_H or S = B_H minus one vertex");
  }

  const auto& family = std::get<NonGradedFamily>(d);
  auto without_k = cycles_without_K(g, cycle_cap);
  bool is_without_k =
      std::find(without_k.begin(), without_k.end(), family.cycle) !=
      without_k.end();
  return is_without_k && rest == m_of(g, family.cycle.base());
}

std::vector<IdealDescriptor> enumerate_primes(const DirectedGraph& g,
                                              const EnumerationLimits& limits) {
  HSLattice lattice = enumerate_HE(g, limits);
  auto without_k = cycles_without_K(g, limits.cap);
  const std::size_t n = g.vertex_count();

  std::vector<IdealDescriptor> out;
  for (const auto& h : lattice.sets) {
    if (h.vertices().size() == n) continue;
    const VertexSet rest = h.vertices().complement();
    const VertexSet breaking = breaking_vertices(g, h);

    if (is_downward_directed(g, rest)) {
      out.emplace_back(GradedIdeal{AdmissiblePair::make(g, h, breaking)});
    }
    for (std::size_t u : breaking.members()) {
      if (rest != m_of(g, u)) continue;
      VertexSet s = breaking;
      s.erase(u);
      out.emplace_back(GradedIdeal{AdmissiblePair::make(g, h, std::move(s))});
    }
    for (const auto& c : without_k) {
      if (c.vertices().intersects(h.vertices())) continue;
      if (rest != m_of(g, c.base())) continue;
      out.emplace_back(NonGradedFamily{h, c});
    }
  }
  std::sort(out.begin(), out.end(), descriptor_less);
  return out;
}

AdmissiblePair gr_of(const DirectedGraph& g, const IdealDescriptor& d) {
  check_descriptor(g, d);
  if (const auto* graded = std::get_if<GradedIdeal>(&d)) return graded->pair;
  return AdmissiblePair::saturated(g, std::get<NonGradedFamily>(d).h);
}

std::vector<AdmissiblePair> maximal_graded_ideals(
    const DirectedGraph& g, const EnumerationLimits& limits) {
  std::vector<AdmissiblePair> out;
  for (auto& m : analyse_maximal(g, enumerate_HE(g, limits), limits.cap)) {
    if (m.exitless.empty()) out.push_back(std::move(m.pair));
  }
  return out;
}

std::vector<NonGradedFamily> maximal_nongraded_families(
    const DirectedGraph& g, const EnumerationLimits& limits) {
  std::vector<NonGradedFamily> out;
  for (auto& m : analyse_maximal(g, enumerate_HE(g, limits), limits.cap)) {
    for (auto& c : m.exitless) out.push_back({m.pair.h(), std::move(c)});
  }
  return out;
}

MaximalityReport existence_report(const DirectedGraph& g,
                                  const EnumerationLimits& limits) {
  HSLattice lattice = enumerate_HE(g, limits);
  auto maximal = analyse_maximal(g, lattice, limits.cap);

  MaximalityReport report;
  report.exists_maximal = !maximal.empty();
  report.every_maximal_graded = true;
  for (auto& m : maximal) {
    if (m.exitless.empty()) {
      report.graded_maximals.push_back(m.pair);
    } else {
      report.every_maximal_graded = false;
      for (auto& c : m.exitless) {
        report.nongraded_maximal_families.push_back({m.pair.h(), c});
      }
    }
  }

  const std::size_t n = g.vertex_count();
  report.every_ideal_below_maximal = std::all_of(
      lattice.sets.begin(), lattice.sets.end(), [&](const auto& x) {
        if (x.vertices().size() == n) return true;
        return std::any_of(maximal.begin(), maximal.end(), [&](const auto& m) {
          return x.vertices().is_subset_of(m.pair.h().vertices());
        });
      });

  if (report.graded_maximals.size() == 1 &&
      report.nongraded_maximal_families.empty()) {
    report.unique_maximal = GradedIdeal{report.graded_maximals.front()};
  }
  return report;
}

}  // namespace lpa
