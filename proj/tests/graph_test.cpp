// Copyright 2026 The bbforest Authors
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

#include "bbforest/graph.hpp"

#include <random>
#include <string>
#include <vector>

#include "bbforest/bbg_format.hpp"
#include "bbforest/errors.hpp"
#include "bbforest/generators.hpp"
#include "gtest/gtest.h"
#include "oracle.hpp"

namespace bbforest {
namespace {

BalancedBipartiteGraph K22() {
  return BalancedBipartiteGraph::from_rows(2, {0b11, 0b11});
}

// Rows "110", "011", "101": a single 6-cycle.
BalancedBipartiteGraph C6() {
  const std::vector<std::string> rows = {"110", "011", "101"};
  return BalancedBipartiteGraph::from_strings(3, rows);
}

TEST(GraphTest, FromRowsBuildsTranspose) {
  const auto g = C6();
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.edge_count(), 6);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(g.has_edge(i, j), ((g.second_row(j) >> i) & 1U) == 1U);
    }
  }
}

TEST(GraphTest, FromRowsRejectsMalformedRows) {
  EXPECT_THROW(BalancedBipartiteGraph::from_rows(2, {0b11}), MalformedInput);
  EXPECT_THROW(BalancedBipartiteGraph::from_rows(2, {0b11, 0b111}),
               MalformedInput);
  const std::vector<std::string> narrow = {"11", "1"};
  EXPECT_THROW(BalancedBipartiteGraph::from_strings(2, narrow), MalformedInput);
  EXPECT_THROW(BalancedBipartiteGraph::from_rows(65, std::vector<Row>(65, 0)),
               InstanceTooLarge);
}

TEST(GraphTest, MinDegree) {
  EXPECT_EQ(K22().min_degree(), 2);
  EXPECT_EQ(BalancedBipartiteGraph::from_rows(3, {0, 0, 0}).min_degree(), 0);
  EXPECT_EQ(prop1_construction(4).min_degree(), 2);
}

TEST(GraphTest, InducedEdgeCount) {
  EXPECT_EQ(induced_edge_count(K22(), K22().all_vertices()), 4);
  EXPECT_EQ(induced_edge_count(K22(), VertexSubset{0b11, 0}), 0);
  const auto p = prop1_construction(2);
  EXPECT_EQ(induced_edge_count(p, p.all_vertices()), 2);
}

TEST(GraphTest, IsInducedForest) {
  EXPECT_FALSE(is_induced_forest(K22(), K22().all_vertices()));
  EXPECT_FALSE(is_induced_forest(C6(), C6().all_vertices()));
  // Dropping any single vertex of the 6-cycle leaves a path.
  const auto all = C6().all_vertices();
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(is_induced_forest(C6(), {all.first & ~(Row{1} << i), all.second}));
    EXPECT_TRUE(is_induced_forest(C6(), {all.first, all.second & ~(Row{1} << i)}));
  }
  EXPECT_TRUE(is_induced_forest(K22(), VertexSubset{}));
}

TEST(GraphTest, OnePartPlusOneVertexIsAlwaysAForest) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    const auto g = oracle::random_graph(n, 0.8, rng);
    for (int j = 0; j < n; ++j) {
      EXPECT_TRUE(is_induced_forest(g, {low_bits(n), Row{1} << j}));
      EXPECT_TRUE(is_induced_forest(g, {Row{1} << j, low_bits(n)}));
    }
  }
}

TEST(GraphTest, LexOrderUsesGlobalIds) {
  // {V1:0, V2:0} = ids {0, 2} vs {V1:1, V2:0} = ids {1, 2} on n = 2.
  EXPECT_TRUE(lex_less({0b01, 0b01}, {0b10, 0b01}, 2));
  EXPECT_FALSE(lex_less({0b10, 0b01}, {0b01, 0b01}, 2));
  EXPECT_EQ((VertexSubset{0b10, 0b11}.global_ids(2)), (std::vector<int>{1, 2, 3}));
}

TEST(GraphTest, BuilderFreezeMatchesFromRows) {
  GraphBuilder b(3);
  b.add_edge(0, 0);
  b.add_edge(0, 1);
  b.add_edge(2, 1);
  b.add_edge(2, 2);
  b.remove_edge(2, 2);
  EXPECT_EQ(b.second_degree(1), 2);
  EXPECT_EQ(b.freeze(), BalancedBipartiteGraph::from_rows(3, {0b011, 0, 0b010}));
}

// Forest test agrees with an adjacency-matrix DFS; forests never have more
// than |S| - 1 edges; the stored transpose matches a rebuild.
TEST(GraphPropertyTest, ForestTestMatchesDfsOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 8;
    const double p = 0.1 + 0.1 * (trial % 9);
    const auto g = oracle::random_graph(n, p, rng);
    const auto matrix = oracle::to_matrix(g);
    EXPECT_EQ(transpose(g.first_rows(), n),
              std::vector<Row>(g.second_rows().begin(), g.second_rows().end()));
    for (int s = 0; s < 20; ++s) {
      const std::uint64_t mask = rng() & low_bits(2 * n);
      const VertexSubset subset = oracle::from_mask(mask, n);
      const bool forest = is_induced_forest(g, subset);
      ASSERT_EQ(forest, oracle::is_forest(matrix, mask))
          << emit_bbg(g) << " mask " << mask;
      if (forest && subset.size() >= 1) {
        EXPECT_LE(induced_edge_count(g, subset), subset.size() - 1);
      }
    }
  }
}

TEST(BbgFormatTest, EmitK22) {
  EXPECT_EQ(emit_bbg(K22()), "BBG 1\n2\n11\n11\n");
  EXPECT_EQ(parse_bbg("BBG 1\n2\n11\n11\n"), K22());
}

TEST(BbgFormatTest, ColumnIsSecondPartIndex) {
  const auto g = parse_bbg("BBG 1\n3\n100\n001\n000\n");
  EXPECT_TRUE(g.has_edge(0, 0));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.edge_count(), 2);
}

int error_line(const std::string& text) {
  try {
    parse_bbg(text);
  } catch (const MalformedInput& e) {
    return e.line();
  }
  return -1;
}

TEST(BbgFormatTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("BBG 1\n2\n11\n1\n"), 4);
  EXPECT_EQ(error_line("BBG 2\n2\n11\n11\n"), 1);
  EXPECT_EQ(error_line(""), 1);
  EXPECT_EQ(error_line("BBG 1\nx\n"), 2);
  EXPECT_EQ(error_line("BBG 1\n0\n"), 2);
  EXPECT_EQ(error_line("BBG 1\n02\n11\n11\n"), 2);
  EXPECT_EQ(error_line("BBG 1\n2\n1a\n11\n"), 3);
  EXPECT_EQ(error_line("BBG 1\n2\n11\n"), 4);
  EXPECT_EQ(error_line("BBG 1\n2\n11\n11\n\n"), 5);
  EXPECT_EQ(error_line("BBG 1\n2\n11 \n11\n"), 3);
  EXPECT_EQ(error_line("BBG 1\r\n2\n11\n11\n"), 1);
  EXPECT_EQ(error_line("BBG 1\n2\n11\n11"), 4);
}

TEST(BbgFormatTest, OversizedPartIsRejected) {
  std::string text = "BBG 1\n65\n";
  for (int i = 0; i < 65; ++i) text += std::string(65, '0') + "\n";
  EXPECT_THROW(parse_bbg(text), InstanceTooLarge);
}

TEST(BbgFormatPropertyTest, RoundTripIsBitExact) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const auto g = oracle::random_graph(n, 0.05 * (1 + trial % 19), rng);
    const std::string text = emit_bbg(g);
    const auto back = parse_bbg(text);
    ASSERT_EQ(back, g);
    ASSERT_EQ(emit_bbg(back), text);
  }
}

}  // namespace
}  // namespace bbforest
