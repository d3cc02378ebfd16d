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

#include "lpa/report.h"

#include <sstream>

namespace lpa {
namespace {

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (x.is_object()) return false;
    if (x.is_array() && !is_flat_array(x)) return false;
  }
  return true;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_array()) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : j) {
      if (!first) out += ", ";
      first = false;
      out += scalar_text(x);
    }
    return out + "}";
  }
  return j.dump();
}

void render(const Json& j, int depth, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !is_flat_array(value))) {
        out << pad << key << ":";
        if (value.empty()) {
          out << (value.is_array() ? " (none)" : "") << "\n";
          continue;
        }
        out << "\n";
        render(value, depth + 1, out);
      } else {
        out << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_object()) {
        std::ostringstream inner;
        render(x, depth + 1, inner);
        std::string text = inner.str();
        if (text.empty()) {
          out << pad << "- {}\n";
          continue;
        }
        // Mark the first line of each entry with a bullet.
        text.replace(pad.size(), 2, "- ");
        out << text;
      } else {
        out << pad << "- " << scalar_text(x) << "\n";
      }
    }
    return;
  }
  out << pad << scalar_text(j) << "\n";
}

}  // namespace

Json vertex_set_json(const DirectedGraph& g, const VertexSet& s) {
  return s.ids(g);
}

Json cycle_json(const DirectedGraph& g, const Cycle& c) {
  return c.edge_ids(g);
}

Json condition_json(const DirectedGraph& g, const ConditionReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["witness"] = r.witness ? cycle_json(g, *r.witness) : Json(nullptr);
  return j;
}

Json lattice_json(const DirectedGraph& g, const HSLattice& lattice) {
  Json j;
  j["sets"] = Json::array();
  for (const auto& h : lattice.sets) {
    j["sets"].push_back(vertex_set_json(g, h.vertices()));
  }
  j["maximal_proper"] = Json::array();
  for (const auto& h : maximal_proper_elements(lattice)) {
    j["maximal_proper"].push_back(vertex_set_json(g, h.vertices()));
  }
  return j;
}

Json pair_json(const DirectedGraph& g, const AdmissiblePair& p) {
  Json j;
  j["H"] = vertex_set_json(g, p.h().vertices());
  j["S"] = vertex_set_json(g, p.s());
  return j;
}

Json family_json(const DirectedGraph& g, const NonGradedFamily& f) {
  Json j;
  j["H"] = vertex_set_json(g, f.h.vertices());
  j["cycle"] = cycle_json(g, f.cycle);
  return j;
}

Json descriptor_json(const DirectedGraph& g, const IdealDescriptor& d) {
  Json j;
  if (const auto* graded = std::get_if<GradedIdeal>(&d)) {
    j["kind"] = "graded";
    j["H"] = vertex_set_json(g, graded->pair.h().vertices());
    j["S"] = vertex_set_json(g, graded->pair.s());
    return j;
  }
  const auto& family = std::get<NonGradedFamily>(d);
  j["kind"] = "nongraded";
  j["H"] = vertex_set_json(g, family.h.vertices());
  j["cycle"] = cycle_json(g, family.cycle);
  j["base"] = g.vertex_id(family.cycle.base());
  j["polynomial"] = std::string(kIrreducibleToken);
  return j;
}

Json maximality_json(const DirectedGraph& g, const MaximalityReport& r) {
  Json j;
  j["graded_maximals"] = Json::array();
  for (const auto& p : r.graded_maximals) {
    j["graded_maximals"].push_back(pair_json(g, p));
  }
  j["nongraded_maximal_families"] = Json::array();
  for (const auto& f : r.nongraded_maximal_families) {
    j["nongraded_maximal_families"].push_back(family_json(g, f));
  }
  j["exists_maximal"] = r.exists_maximal;
  j["every_ideal_below_maximal"] = r.every_ideal_below_maximal;
  j["every_maximal_graded"] = r.every_maximal_graded;
  j["unique_maximal"] =
      r.unique_maximal ? descriptor_json(g, *r.unique_maximal) : Json(nullptr);
  return j;
}

std::string render_text(const Json& doc) {
  std::ostringstream out;
  render(doc, 0, out);
  return out.str();
}

}  // namespace lpa
