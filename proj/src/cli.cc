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

#include "lpa/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpa/algebra.h"
#include "lpa/errors.h"
#include "lpa/graph.h"
#include "lpa/hs_lattice.h"
#include "lpa/ideals.h"
#include "lpa/report.h"
#include "lpa/structure.h"

namespace lpa::cli {
namespace {

struct Config {
  std::string graph_path;
  bool json = false;
  std::size_t cap = 1'000'000;
  std::size_t max_vertices = 20;
  std::optional<std::string> h;
  std::optional<std::string> s;
  std::optional<std::string> cycle;
  std::string condition;
  std::string lhs;
  std::string rhs;
};

DirectedGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot read graph file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> ids;
  std::string current;
  auto flush = [&] {
    const auto first = current.find_first_not_of(" \t");
    if (first != std::string::npos) {
      const auto last = current.find_last_not_of(" \t");
      ids.push_back(current.substr(first, last - first + 1));
    }
    current.clear();
  };
  for (char ch : list) {
    if (ch == ',') {
      flush();
    } else {
      current.push_back(ch);
    }
  }
  flush();
  return ids;
}

VertexSet vertex_list(const DirectedGraph& g, const std::string& list) {
  const auto ids = split_ids(list);
  return VertexSet::from_ids(g, ids);
}

const std::string& required(const std::optional<std::string>& value,
                            const char* flag) {
  if (!value) throw InvalidArgument(std::string(flag) + " is required");
  return *value;
}

EnumerationLimits limits_of(const Config& cfg) {
  return EnumerationLimits{cfg.max_vertices, cfg.cap};
}

AdmissiblePair pair_of(const DirectedGraph& g, const Config& cfg) {
  auto h = HereditarySaturatedSet::certify(
      g, vertex_list(g, required(cfg.h, "--H")));
  if (!cfg.s) return AdmissiblePair::saturated(g, std::move(h));
  return AdmissiblePair::make(g, std::move(h), vertex_list(g, *cfg.s));
}

Json graph_summary(const DirectedGraph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["omega_bundles"] = g.bundles().size();
  VertexSet sinks(g.vertex_count());
  VertexSet emitters(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.kind(v) == VertexKind::kSink) sinks.insert(v);
    if (g.kind(v) == VertexKind::kInfiniteEmitter) emitters.insert(v);
  }
  j["sinks"] = vertex_set_json(g, sinks);
  j["infinite_emitters"] = vertex_set_json(g, emitters);
  return j;
}

Json primes_json(const DirectedGraph& g, const EnumerationLimits& limits) {
  Json list = Json::array();
  for (const auto& d : enumerate_primes(g, limits)) {
    list.push_back(descriptor_json(g, d));
  }
  return list;
}

Json cmd_analyze(const DirectedGraph& g, const Config& cfg) {
  const auto limits = limits_of(cfg);
  Json j;
  j["graph"] = graph_summary(g);
  j["condition_L"] = condition_json(g, condition_L(g, cfg.cap));
  j["condition_K"] = condition_json(g, condition_K(g, cfg.cap));
  j["hs_lattice"] = lattice_json(g, enumerate_HE(g, limits));
  j["primes"] = primes_json(g, limits);
  j["maximality"] = maximality_json(g, existence_report(g, limits));
  return j;
}

Json cmd_primes(const DirectedGraph& g, const Config& cfg) {
  Json j;
  j["primes"] = primes_json(g, limits_of(cfg));
  return j;
}

Json cmd_check(const DirectedGraph& g, const Config& cfg) {
  Json j;
  j["condition"] = cfg.condition;
  if (cfg.condition == "L" || cfg.condition == "K") {
    const auto report = cfg.condition == "L" ? condition_L(g, cfg.cap)
                                             : condition_K(g, cfg.cap);
    j.update(condition_json(g, report));
    return j;
  }
  if (cfg.condition == "downward" || cfg.condition == "tail") {
    const auto set = vertex_list(g, required(cfg.h, "--H"));
    j["set"] = vertex_set_json(g, set);
    j["holds"] = cfg.condition == "downward" ? is_downward_directed(g, set)
                                             : is_maximal_tail(g, set);
    return j;
  }
  // prime
  std::optional<IdealDescriptor> d;
  if (cfg.cycle) {
    if (cfg.s) throw InvalidArgument("--S and --cycle are exclusive");
    auto h = HereditarySaturatedSet::certify(
        g, vertex_list(g, required(cfg.h, "--H")));
    const auto ids = split_ids(*cfg.cycle);
    d = NonGradedFamily{std::move(h), Cycle::from_edge_ids(g, ids)};
  } else {
    d = GradedIdeal{pair_of(g, cfg)};
  }
  j["ideal"] = descriptor_json(g, *d);
  j["holds"] = classify_prime(g, *d, cfg.cap);
  return j;
}

Json cmd_mul(const DirectedGraph& g, const Config& cfg) {
  const auto lhs = parse_element(g, cfg.lhs);
  const auto rhs = parse_element(g, cfg.rhs);
  const auto product = mul(g, lhs, rhs);
  Json j;
  j["lhs"] = format_element(g, lhs);
  j["rhs"] = format_element(g, rhs);
  j["product"] = format_element(g, product);
  const auto deg = product.homogeneous_degree();
  j["degree"] = deg ? Json(*deg) : Json(nullptr);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Ideal structure of Leavitt path algebras of finite graphs",
               args.empty() ? "lpa" : args.front()};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "Emit canonical JSON");
  app.add_option("--cap", cfg.cap,
                 "Bound on enumerated cycles and lattice elements")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-vertices", cfg.max_vertices,
                 "Refuse lattice enumeration above this many vertices");

  auto add_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", cfg.graph_path, "Graph JSON file")->required();
    return sub;
  };
  auto* analyze = add_command("analyze", "Full ideal-structure report");
  auto* hsets = add_command("hsets", "Hereditary saturated sets");
  auto* primes = add_command("primes", "Prime ideals");
  auto* maximals = add_command("maximals", "Maximal ideals");
  auto* quotient = add_command("quotient", "Quotient graph by (H, S)");
  quotient->add_option("--H", cfg.h, "Comma-separated vertex ids")->required();
  quotient->add_option("--S", cfg.s, "Breaking vertices; default all of B_H");
  auto* check = add_command("check", "Test one graph condition");
  check->add_option("--condition", cfg.condition, "L, K, downward, tail, prime")
      ->required()
      ->check(CLI::IsMember({"L", "K", "downward", "tail", "prime"}));
  check->add_option("--H", cfg.h, "Comma-separated vertex ids");
  check->add_option("--S", cfg.s, "Breaking vertices; default all of B_H");
  check->add_option("--cycle", cfg.cycle, "Comma-separated cycle edge ids");
  auto* mul_cmd = add_command("mul", "Multiply two algebra elements");
  mul_cmd->add_option("--lhs", cfg.lhs, "Left factor")->required();
  mul_cmd->add_option("--rhs", cfg.rhs, "Right factor")->required();

  try {
    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1
                                                  : args.end(),
                                  args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const DirectedGraph g = load_graph(cfg.graph_path);
    if (quotient->parsed()) {
      out << serialize_graph(quotient_graph(g, pair_of(g, cfg)), 2) << "\n";
      return kOk;
    }
    Json doc;
    if (analyze->parsed()) {
      doc = cmd_analyze(g, cfg);
    } else if (hsets->parsed()) {
      doc = lattice_json(g, enumerate_HE(g, limits_of(cfg)));
    } else if (primes->parsed()) {
      doc = cmd_primes(g, cfg);
    } else if (maximals->parsed()) {
      doc = maximality_json(g, existence_report(g, limits_of(cfg)));
    } else if (check->parsed()) {
      doc = cmd_check(g, cfg);
    } else {
      doc = cmd_mul(g, cfg);
    }
    if (cfg.json) {
      out << doc.dump(2) << "\n";
    } else {
      out << render_text(doc);
    }
    return kOk;
  } catch (const GraphError& e) {
    err << "error: invalid graph: " << e.what() << "\n";
    return kInvalidGraph;
  } catch (const ResourceLimit& e) {
    err << "error: resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace lpa::cli
