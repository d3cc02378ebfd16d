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

#include "lpa/algebra.h"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

#include "lpa/errors.h"

namespace lpa {
namespace {

void check_graph(const DirectedGraph& g, const AlgebraElement& x) {
  if (x.graph_fingerprint() != 0 && x.graph_fingerprint() != g.fingerprint()) {
    throw InvalidArgument("algebra element belongs to another graph");
  }
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> raw;
  std::istringstream in{std::string(text)};
  for (std::string word; in >> word;) {
    std::string cur;
    for (char c : word) {
      if (c == '|') {
        if (!cur.empty()) raw.push_back(std::move(cur));
        cur.clear();
        raw.emplace_back("|");
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) raw.push_back(std::move(cur));
  }
  std::vector<std::string> out;
  for (auto& t : raw) {
    if (t.size() > 1 && t.back() == '*') {
      out.push_back(t.substr(0, t.size() - 1));
      out.emplace_back("*");
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool is_id(const DirectedGraph& g, const std::string& token) {
  return g.find_edge(token) || g.find_vertex(token);
}

Path parse_path(const DirectedGraph& g, std::span<const std::string> tokens) {
  if (tokens.empty()) throw InvalidArgument("empty path");
  if (tokens.size() == 1 && !g.find_edge(tokens[0])) {
    auto v = g.find_vertex(tokens[0]);
    if (!v) throw InvalidArgument("unknown edge or vertex '" + tokens[0] + "'");
    return Path::vertex(g, *v);
  }
  std::vector<std::size_t> edges;
  for (const auto& t : tokens) {
    if (t == "*" || t == "|") throw InvalidArgument("misplaced '" + t + "'");
    edges.push_back(g.edge_index(t));
  }
  return Path::from_edges(g, std::move(edges));
}

AlgebraElement parse_term(const DirectedGraph& g,
                          std::span<const std::string> tokens, bool negate) {
  static const std::regex kRational(R"([+-]?[0-9]+(/[0-9]+)?)");
  Rational k = 1;
  if (!tokens.empty() && std::regex_match(tokens[0], kRational) &&
      !is_id(g, tokens[0])) {
    try {
      k = Rational(tokens[0]);
      if (k.get_den() == 0) throw std::invalid_argument("zero denominator");
    } catch (const std::invalid_argument&) {
      throw InvalidArgument("bad coefficient '" + tokens[0] + "'");
    }
    k.canonicalize();
    tokens = tokens.subspan(1);
  }
  if (negate) k = -k;
  if (tokens.empty()) throw InvalidArgument("term without a monomial");

  auto bar = std::find(tokens.begin(), tokens.end(), "|");
  auto star = std::find(tokens.begin(), tokens.end(), "*");
  if (star != tokens.end() && star + 1 != tokens.end()) {
    throw InvalidArgument("'*' must close the ghost part of a term");
  }
  if (bar != tokens.end()) {
    if (star == tokens.end()) throw InvalidArgument("'|' without ghost part");
    if (std::find(bar + 1, tokens.end(), "|") != tokens.end()) {
      throw InvalidArgument("more than one '|' in a term");
    }
    auto left = std::span(tokens.begin(), bar);
    auto right = std::span(bar + 1, star);
    Path beta = parse_path(g, right);
    Path alpha =
        left.empty() ? Path::vertex(g, beta.range()) : parse_path(g, left);
    return AlgebraElement::monomial(g, k, std::move(alpha), std::move(beta));
  }
  if (star != tokens.end()) {
    Path beta = parse_path(g, std::span(tokens.begin(), star));
    Path alpha = Path::vertex(g, beta.range());
    return AlgebraElement::monomial(g, k, std::move(alpha), std::move(beta));
  }
  Path alpha = parse_path(g, tokens);
  Path beta = Path::vertex(g, alpha.range());
  return AlgebraElement::monomial(g, k, std::move(alpha), std::move(beta));
}

std::string format_path(const DirectedGraph& g, const Path& p) {
  if (p.length() == 0) return g.vertex_id(p.source());
  std::string out;
  for (std::size_t e : p.edges()) {
    if (!out.empty()) out += ' ';
    out += g.edge(e).id;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Path

Path Path::vertex(const DirectedGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw InvalidArgument("vertex not in graph");
  return Path(v, v, {});
}

Path Path::from_edges(const DirectedGraph& g, std::vector<std::size_t> edges) {
  if (edges.empty()) throw InvalidArgument("edge path needs an edge");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] >= g.edge_count()) throw InvalidArgument("edge not in graph");
    if (i > 0 && g.edge(edges[i - 1]).dst != g.edge(edges[i]).src) {
      throw InvalidArgument("edges '" + g.edge(edges[i - 1]).id + "' and '" +
                            g.edge(edges[i]).id + "' do not compose");
    }
  }
  std::size_t source = g.edge(edges.front()).src;
  std::size_t range = g.edge(edges.back()).dst;
  return Path(source, range, std::move(edges));
}

bool Path::is_prefix_of(const Path& other) const noexcept {
  return source_ == other.source_ && edges_.size() <= other.edges_.size() &&
         std::equal(edges_.begin(), edges_.end(), other.edges_.begin());
}

Path Path::drop(const DirectedGraph& g, std::size_t k) const {
  if (k > edges_.size()) throw InvalidArgument("path is too short");
  if (k == edges_.size()) return Path(range_, range_, {});
  std::size_t src = k == 0 ? source_ : g.edge(edges_[k]).src;
  return Path(src, range_,
              {edges_.begin() + static_cast<std::ptrdiff_t>(k), edges_.end()});
}

Path Path::then(const Path& tail) const {
  if (range_ != tail.source_) throw InvalidArgument("paths do not compose");
  std::vector<std::size_t> edges = edges_;
  edges.insert(edges.end(), tail.edges_.begin(), tail.edges_.end());
  return Path(source_, tail.range_, std::move(edges));
}

// ---------------------------------------------------------------------------
// AlgebraElement

int degree(const Monomial& m) {
  return static_cast<int>(m.alpha.length()) - static_cast<int>(m.beta.length());
}

AlgebraElement AlgebraElement::monomial(const DirectedGraph& g, Rational k,
                                        Path alpha, Path beta) {
  if (alpha.range() != beta.range()) {
    throw InvalidArgument("alpha and beta must end at the same vertex");
  }
  if (alpha.range() >= g.vertex_count()) {
    throw InvalidArgument("path not in graph");
  }
  AlgebraElement x;
  x.fingerprint_ = g.fingerprint();
  x.add_term(k, alpha, beta);
  return x;
}

AlgebraElement AlgebraElement::vertex(const DirectedGraph& g,
                                      std::string_view v) {
  Path p = Path::vertex(g, g.vertex_index(v));
  return monomial(g, 1, p, p);
}

AlgebraElement AlgebraElement::edge(const DirectedGraph& g,
                                    std::string_view e) {
  Path p = Path::from_edges(g, {g.edge_index(e)});
  return monomial(g, 1, p, Path::vertex(g, p.range()));
}

AlgebraElement AlgebraElement::ghost(const DirectedGraph& g,
                                     std::string_view e) {
  Path p = Path::from_edges(g, {g.edge_index(e)});
  return monomial(g, 1, Path::vertex(g, p.range()), p);
}

std::vector<Monomial> AlgebraElement::terms() const {
  std::vector<Monomial> out;
  for (const auto& [key, k] : terms_) out.push_back({k, key.first, key.second});
  return out;
}

std::optional<int> AlgebraElement::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& m : terms()) {
    if (d && *d != degree(m)) return std::nullopt;
    d = degree(m);
  }
  return d;
}

void AlgebraElement::add_term(const Rational& k, const Path& alpha,
                              const Path& beta) {
  if (k == 0) return;
  auto [it, inserted] = terms_.try_emplace({alpha, beta}, k);
  if (inserted) return;
  it->second += k;
  if (it->second == 0) terms_.erase(it);
}

void AlgebraElement::adopt_fingerprint(const AlgebraElement& other) {
  if (other.fingerprint_ == 0) return;
  if (fingerprint_ != 0 && fingerprint_ != other.fingerprint_) {
    throw InvalidArgument("algebra elements from different graphs");
  }
  fingerprint_ = other.fingerprint_;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  adopt_fingerprint(other);
  for (const auto& [key, k] : other.terms_) add_term(k, key.first, key.second);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  adopt_fingerprint(other);
  for (const auto& [key, k] : other.terms_) {
    add_term(-k, key.first, key.second);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= k;
  return *this;
}

AlgebraElement mul(const DirectedGraph& g, const AlgebraElement& x,
                   const AlgebraElement& y) {
  check_graph(g, x);
  check_graph(g, y);
  AlgebraElement out;
  out.fingerprint_ = g.fingerprint();
  for (const auto& [left, a] : x.terms_) {
    const auto& [alpha, beta] = left;
    for (const auto& [right, b] : y.terms_) {
      const auto& [gamma, delta] = right;
      // beta^* gamma collapses to sigma when gamma = beta sigma, to tau^* when
      // beta = gamma tau, and to 0 otherwise.
      if (beta.is_prefix_of(gamma)) {
        Path sigma = gamma.drop(g, beta.length());
        out.add_term(a * b, alpha.then(sigma), delta);
      } else if (gamma.is_prefix_of(beta)) {
        Path tau = beta.drop(g, gamma.length());
        out.add_term(a * b, alpha, delta.then(tau));
      }
    }
  }
  return out;
}

AlgebraElement v_H_element(const DirectedGraph& g,
                           const HereditarySaturatedSet& h,
                           std::string_view v) {
  std::size_t vi = g.vertex_index(v);
  if (!breaking_vertices(g, h).contains(vi)) {
    throw InvalidArgument("'" + std::string(v) +
                          "' is not a breaking vertex of H");
  }
  AlgebraElement out = AlgebraElement::vertex(g, v);
  for (std::size_t e : g.out_edges(vi)) {
    if (h.vertices().contains(g.edge(e).dst)) continue;
    Path p = Path::from_edges(g, {e});
    out -= AlgebraElement::monomial(g, 1, p, p);
  }
  return out;
}

bool is_idempotent(const DirectedGraph& g, const AlgebraElement& x) {
  return mul(g, x, x) == x;
}

// ---------------------------------------------------------------------------
// Text form

AlgebraElement parse_element(const DirectedGraph& g, std::string_view text) {
  auto tokens = tokenize(text);
  if (tokens.empty()) throw InvalidArgument("empty algebra element");
  if (tokens.size() == 1 && tokens[0] == "0" && !is_id(g, "0")) {
    return AlgebraElement();
  }
  const std::string& head = tokens[0];
  if (head.size() > 1 && (head[0] == '-' || head[0] == '+') &&
      !is_id(g, head) && !std::isdigit(static_cast<unsigned char>(head[1]))) {
    tokens.insert(tokens.begin() + 1, head.substr(1));
    tokens[0].resize(1);
  }
  AlgebraElement out;
  std::size_t i = 0;
  bool negate = false;
  if (tokens[0] == "-" || tokens[0] == "+") {
    negate = tokens[0] == "-";
    i = 1;
  }
  while (true) {
    std::size_t j = i;
    while (j < tokens.size() && tokens[j] != "+" && tokens[j] != "-") ++j;
    out += parse_term(g, std::span(tokens).subspan(i, j - i), negate);
    if (j == tokens.size()) break;
    negate = tokens[j] == "-";
    i = j + 1;
  }
  return out;
}

std::string format_element(const DirectedGraph& g, const AlgebraElement& x) {
  check_graph(g, x);
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& m : x.terms()) {
    Rational k = m.coefficient;
    if (first) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    first = false;
    if (k < 0) k = -k;
    if (k != 1) out += k.get_str() + " ";

    if (m.beta.length() == 0) {
      out += format_path(g, m.alpha);
    } else if (m.alpha.length() == 0) {
      out += format_path(g, m.beta) + "*";
    } else {
      out += format_path(g, m.alpha) + " | " + format_path(g, m.beta) + "*";
    }
  }
  return out;
}

}  // namespace lpa
