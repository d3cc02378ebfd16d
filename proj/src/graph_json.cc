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

#include <set>
#include <string>

#include "json.hpp"
#include "lpa/errors.h"
#include "lpa/graph.h"

namespace lpa {
namespace {

using nlohmann::json;

void require_keys(const json& obj, std::string_view where,
                  const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) {
    throw GraphError(std::string(where) + " must be a JSON object");
  }
  for (const auto& [key, value] : obj.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      throw GraphError("unknown key '" + key + "' in " + std::string(where));
    }
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) {
      throw GraphError("missing key '" + key + "' in " + std::string(where));
    }
  }
}

std::string string_field(const json& obj, const char* key,
                         std::string_view where) {
  const auto& v = obj.at(key);
  if (!v.is_string()) {
    throw GraphError(std::string(where) + "." + key + " must be a string");
  }
  return v.get<std::string>();
}

const json& array_field(const json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_array()) throw GraphError(std::string(key) + " must be an array");
  return v;
}

}  // namespace

DirectedGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw GraphError(std::string("malformed JSON: ") + e.what());
  }
  require_keys(doc, "graph", {"vertices", "edges"}, {"omega_bundles"});

  std::vector<std::string> vertices;
  for (const auto& v : array_field(doc, "vertices")) {
    if (!v.is_string()) throw GraphError("vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }

  std::vector<EdgeSpec> edges;
  for (const auto& e : array_field(doc, "edges")) {
    require_keys(e, "edge", {"id", "src", "dst"});
    edges.push_back(EdgeSpec{string_field(e, "id", "edge"),
                             string_field(e, "src", "edge"),
                             string_field(e, "dst", "edge")});
  }

  std::vector<BundleSpec> bundles;
  if (doc.contains("omega_bundles")) {
    for (const auto& b : array_field(doc, "omega_bundles")) {
      require_keys(b, "omega bundle", {"src", "dst"});
      bundles.push_back(BundleSpec{string_field(b, "src", "omega bundle"),
                                   string_field(b, "dst", "omega bundle")});
    }
  }
  return DirectedGraph::build(std::move(vertices), std::move(edges),
                              std::move(bundles));
}

std::string serialize_graph(const DirectedGraph& g, int indent) {
  nlohmann::ordered_json doc;
  doc["vertices"] = std::vector<std::string>(g.vertex_ids().begin(),
                                             g.vertex_ids().end());
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"id", e.id},
                            {"src", g.vertex_id(e.src)},
                            {"dst", g.vertex_id(e.dst)}});
  }
  doc["omega_bundles"] = nlohmann::ordered_json::array();
  for (const auto& b : g.bundles()) {
    doc["omega_bundles"].push_back(
        {{"src", g.vertex_id(b.src)}, {"dst", g.vertex_id(b.dst)}});
  }
  return doc.dump(indent);
}

}  // namespace lpa
