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

// JSON views of analysis results. Keys keep a fixed insertion order and all
// lists follow the canonical orderings, so equal inputs serialise to equal
// bytes.

#ifndef LPA_REPORT_H_
#define LPA_REPORT_H_

#include <string>

#include "json.hpp"
#include "lpa/graph.h"
#include "lpa/hs_lattice.h"
#include "lpa/ideals.h"
#include "lpa/structure.h"

namespace lpa {

using Json = nlohmann::ordered_json;

Json vertex_set_json(const DirectedGraph& g, const VertexSet& s);
Json cycle_json(const DirectedGraph& g, const Cycle& c);

// {"holds":bool,"witness":[edge ids]|null}
Json condition_json(const DirectedGraph& g, const ConditionReport& r);

// {"sets":[[ids]...],"maximal_proper":[[ids]...]}
Json lattice_json(const DirectedGraph& g, const HSLattice& lattice);

// {"H":[...],"S":[...]}
Json pair_json(const DirectedGraph& g, const AdmissiblePair& p);

// {"H":[...],"cycle":[edge ids]}
Json family_json(const DirectedGraph& g, const NonGradedFamily& f);

// Graded:     {"kind":"graded","H":[...],"S":[...]}
// Non-graded: {"kind":"nongraded","H":[...],"cycle":[...],"base":id,
//              "polynomial":token}
Json descriptor_json(const DirectedGraph& g, const IdealDescriptor& d);

// {"graded_maximals":[pair...],"nongraded_maximal_families":[family...],
//  "exists_maximal":bool,"every_ideal_below_maximal":bool,
//  "every_maximal_graded":bool,"unique_maximal":descriptor|null}
Json maximality_json(const DirectedGraph& g, const MaximalityReport& r);

// Plain-text rendering of any report document, one line per scalar field.
std::string render_text(const Json& doc);

}  // namespace lpa

#endif  // LPA_REPORT_H_
