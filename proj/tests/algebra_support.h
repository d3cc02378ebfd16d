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


// Random monomials for algebra property tests.

#ifndef LPA_TESTS_ALGEBRA_SUPPORT_H_
#define LPA_TESTS_ALGEBRA_SUPPORT_H_

#include <algorithm>
#include <random>
#include <vector>

#include "lpa/algebra.h"
#include "lpa/graph.h"

namespace lpa::testing {

// A path of at most max_len edges ending at v, grown backwards.
inline Path random_path_to(const DirectedGraph& g, std::size_t v,
                           std::size_t max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  const std::size_t len = len_dist(rng);
  std::vector<std::size_t> edges;
  std::size_t at = v;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::size_t> in;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).dst == at) in.push_back(e);
    }
    if (in.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, in.size() - 1);
    const std::size_t e = in[pick(rng)];
    edges.push_back(e);
    at = g.edge(e).src;
  }
  if (edges.empty()) return Path::vertex(g, v);
  std::reverse(edges.begin(), edges.end());
  return Path::from_edges(g, std::move(edges));
}

// k alpha beta^* with r(alpha) = r(beta) and k a small nonzero rational.
inline AlgebraElement random_monomial(const DirectedGraph& g,
                                      std::mt19937_64& rng,
                                      std::size_t max_len = 3) {
  std::uniform_int_distribution<std::size_t> vertex(0, g.vertex_count() - 1);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  const std::size_t v = vertex(rng);
  int n = 0;
  while (n == 0) n = num(rng);
  Rational k(n, den(rng));
  k.canonicalize();
  return AlgebraElement::monomial(g, k, random_path_to(g, v, max_len, rng),
                                  random_path_to(g, v, max_len, rng));
}

inline AlgebraElement random_element(const DirectedGraph& g,
                                     std::mt19937_64& rng,
                                     std::size_t max_terms = 3) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  AlgebraElement x;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) x += random_monomial(g, rng);
  return x;
}

// Sum of the vertices touched by x, a two-sided unit for x.
inline AlgebraElement local_unit(const DirectedGraph& g,
                                 const AlgebraElement& x) {
  VertexSet touched(g.vertex_count());
  for (const auto& m : x.terms()) {
    touched.insert(m.alpha.source());
    touched.insert(m.beta.source());
  }
  AlgebraElement u;
  for (auto v : touched.members()) {
    u += AlgebraElement::vertex(g, g.vertex_id(v));
  }
  return u;
}

}  // namespace lpa::testing

#endif  // LPA_TESTS_ALGEBRA_SUPPORT_H_
