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


#include <gtest/gtest.h>

#include <random>
#include <string>

#include "lpa/errors.h"
#include "lpa/graph.h"
#include "support.h"

namespace lpa {
namespace {

using testing::make_graph;

TEST(VertexSetTest, BasicOperations) {
  VertexSet a = VertexSet::of(70, {1, 3, 65});
  VertexSet b = VertexSet::of(70, {3, 4});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(65));
  EXPECT_FALSE(a.contains(64));
  EXPECT_EQ((a | b).size(), 4u);
  EXPECT_EQ((a & b), VertexSet::of(70, {3}));
  EXPECT_EQ((a - b), VertexSet::of(70, {1, 65}));
  EXPECT_TRUE(VertexSet::of(70, {3}).is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.complement().size(), 67u);
  EXPECT_TRUE(VertexSet(70).empty());
  EXPECT_EQ(VertexSet::full(70).size(), 70u);
  EXPECT_THROW(a.insert(70), InvalidArgument);
}

TEST(VertexSetTest, OrderIsSizeThenMembers) {
  EXPECT_LT(VertexSet::of(4, {3}), VertexSet::of(4, {0, 1}));
  EXPECT_LT(VertexSet::of(4, {0, 3}), VertexSet::of(4, {1, 2}));
  EXPECT_LT(VertexSet(4), VertexSet::of(4, {0}));
}

TEST(DirectedGraphTest, BuildSortsAndClassifies) {
  const auto g = make_graph({"w", "u", "v"},
                            {{"e2", "v", "w"}, {"e1", "u", "v"}},
                            {{"w", "u"}});
  EXPECT_EQ(g.vertex_id(0), "u");
  EXPECT_EQ(g.edge(0).id, "e1");
  EXPECT_EQ(vertex_kind(g, "u"), VertexKind::kRegular);
  EXPECT_EQ(vertex_kind(g, "w"), VertexKind::kInfiniteEmitter);
  const auto sink = make_graph({"s"}, {});
  EXPECT_EQ(vertex_kind(sink, "s"), VertexKind::kSink);
  EXPECT_THROW(vertex_kind(sink, "nope"), InvalidArgument);
}

TEST(DirectedGraphTest, RejectsMalformedInput) {
  EXPECT_THROW(make_graph({}, {}), GraphError);
  EXPECT_THROW(make_graph({"a", "a"}, {}), GraphError);
  EXPECT_THROW(make_graph({""}, {}), GraphError);
  EXPECT_THROW(make_graph({"a"}, {{"e", "a", "b"}}), GraphError);
  EXPECT_THROW(make_graph({"a"}, {{"e", "a", "a"}, {"e", "a", "a"}}),
               GraphError);
  EXPECT_THROW(make_graph({"a"}, {}, {{"a", "a"}, {"a", "a"}}), GraphError);
  EXPECT_THROW(make_graph({"a"}, {}, {{"a", "z"}}), GraphError);
}

TEST(DirectedGraphTest, ParallelEdgesAndLoopsAreKept) {
  const auto g = make_graph({"a", "b"},
                            {{"p", "a", "b"}, {"q", "a", "b"}, {"l", "a", "a"}});
  EXPECT_EQ(g.out_edges(g.vertex_index("a")).size(), 3u);
  EXPECT_EQ(g.successors(g.vertex_index("a")).size(), 2u);
}

TEST(ReachabilityTest, ThreeVertexGraph) {
  const auto g = testing::three_vertex_a();
  EXPECT_TRUE(reaches(g, "u", "w"));
  EXPECT_FALSE(reaches(g, "w", "u"));
  EXPECT_TRUE(reaches(g, "v", "v"));
  EXPECT_EQ(m_of(g, "w"), VertexSet::from_ids(g, {"u", "v", "w"}));
  EXPECT_EQ(m_of(g, "u"), VertexSet::from_ids(g, {"u"}));
}

TEST(ReachabilityTest, AgreesWithTransitiveClosureOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const auto g = testing::random_graph(rng);
    const auto reach = testing::brute_reach(g);
    const auto table = descendant_table(g);
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        ASSERT_EQ(reaches(g, u, v), reach[u][v]);
        ASSERT_EQ(table[u].contains(v), reach[u][v]);
        ASSERT_EQ(m_of(g, v).contains(u), reach[u][v]);
      }
    }
  }
}

TEST(GraphJsonTest, RoundTripIsCanonical) {
  const std::string text =
      R"({"vertices":["b","a"],"edges":[{"id":"e","src":"a","dst":"b"}],)"
      R"("omega_bundles":[{"src":"b","dst":"a"}]})";
  const auto g = parse_graph(text);
  const auto once = serialize_graph(g);
  EXPECT_EQ(once,
            R"({"vertices":["a","b"],"edges":[{"id":"e","src":"a","dst":"b"}],)"
            R"("omega_bundles":[{"src":"b","dst":"a"}]})");
  const auto again = parse_graph(once);
  EXPECT_EQ(again, g);
  EXPECT_EQ(serialize_graph(again), once);
  EXPECT_EQ(again.fingerprint(), g.fingerprint());
}

TEST(GraphJsonTest, RandomGraphsRoundTrip) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    const auto g = testing::random_graph(rng);
    EXPECT_EQ(parse_graph(serialize_graph(g, 2)), g);
  }
}

TEST(GraphJsonTest, StrictSchema) {
  EXPECT_THROW(parse_graph("{"), GraphError);
  EXPECT_THROW(parse_graph(R"({"vertices":["a"]})"), GraphError);
  EXPECT_THROW(parse_graph(R"({"vertices":["a"],"edges":[],"x":1})"),
               GraphError);
  EXPECT_THROW(
      parse_graph(R"({"vertices":["a"],"edges":[{"id":"e","src":"a"}]})"),
      GraphError);
  EXPECT_THROW(parse_graph(R"({"vertices":[1],"edges":[]})"), GraphError);
  EXPECT_THROW(parse_graph(R"({"vertices":[],"edges":[]})"), GraphError);
  EXPECT_NO_THROW(parse_graph(R"({"vertices":["a"],"edges":[]})"));
}

}  // namespace
}  // namespace lpa
