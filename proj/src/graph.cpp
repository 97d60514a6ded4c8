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

#include <algorithm>
#include <limits>

#include "bbforest/errors.hpp"
#include "bbforest/union_find.hpp"

namespace bbforest {

std::vector<int> VertexSubset::global_ids(int n) const {
  std::vector<int> ids;
  ids.reserve(size());
  for (Row bits = first; bits != 0; bits &= bits - 1) {
    ids.push_back(std::countr_zero(bits));
  }
  for (Row bits = second; bits != 0; bits &= bits - 1) {
    ids.push_back(n + std::countr_zero(bits));
  }
  return ids;
}

bool lex_less(const VertexSubset& a, const VertexSubset& b, int n) {
  return a.global_ids(n) < b.global_ids(n);
}

std::vector<Row> transpose(std::span<const Row> rows, int n) {
  std::vector<Row> out(n, 0);
  for (int i = 0; i < n; ++i) {
    for (Row bits = rows[i]; bits != 0; bits &= bits - 1) {
      out[std::countr_zero(bits)] |= Row{1} << i;
    }
  }
  return out;
}

BalancedBipartiteGraph BalancedBipartiteGraph::from_rows(int n,
                                                         std::vector<Row> rows) {
  if (n < 1) throw MalformedInput("part size must be positive");
  if (n > kMaxPartSize) {
    throw InstanceTooLarge("part size " + std::to_string(n) + " unsupported",
                           kMaxPartSize);
  }
  if (static_cast<int>(rows.size()) != n) {
    throw MalformedInput("expected " + std::to_string(n) + " rows, got " +
                         std::to_string(rows.size()));
  }
  const Row mask = low_bits(n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i] & ~mask) != 0) {
      throw MalformedInput("row " + std::to_string(i) + " wider than " +
                           std::to_string(n));
    }
  }
  std::vector<Row> cols = transpose(rows, n);
  return BalancedBipartiteGraph(n, std::move(rows), std::move(cols));
}

BalancedBipartiteGraph BalancedBipartiteGraph::from_strings(
    int n, std::span<const std::string> rows) {
  if (static_cast<int>(rows.size()) != n) {
    throw MalformedInput("expected " + std::to_string(n) + " rows, got " +
                         std::to_string(rows.size()));
  }
  std::vector<Row> bits;
  bits.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string& text = rows[i];
    if (static_cast<int>(text.size()) != n) {
      throw MalformedInput("row " + std::to_string(i) + " has width " +
                           std::to_string(text.size()) + ", expected " +
                           std::to_string(n));
    }
    Row row = 0;
    for (int j = 0; j < n; ++j) {
      if (text[j] == '1') {
        row |= Row{1} << j;
      } else if (text[j] != '0') {
        throw MalformedInput("row " + std::to_string(i) +
                             " has a character outside {0,1}");
      }
    }
    bits.push_back(row);
  }
  return from_rows(n, std::move(bits));
}

int BalancedBipartiteGraph::edge_count() const {
  int total = 0;
  for (Row r : adj1_) total += std::popcount(r);
  return total;
}

int BalancedBipartiteGraph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (Row r : adj1_) best = std::min(best, std::popcount(r));
  for (Row r : adj2_) best = std::min(best, std::popcount(r));
  return best;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  if (n < 1) throw ParameterError("part size must be positive");
  if (n > kMaxPartSize) {
    throw InstanceTooLarge("part size " + std::to_string(n) + " unsupported",
                           kMaxPartSize);
  }
  rows_.assign(n, 0);
}

void GraphBuilder::add_edge(int i, int j) { rows_[i] |= Row{1} << j; }

void GraphBuilder::remove_edge(int i, int j) { rows_[i] &= ~(Row{1} << j); }

int GraphBuilder::second_degree(int j) const {
  int d = 0;
  for (Row r : rows_) d += static_cast<int>((r >> j) & 1U);
  return d;
}

BalancedBipartiteGraph GraphBuilder::freeze() const {
  return BalancedBipartiteGraph::from_rows(n_, rows_);
}

bool within_bounds(const BalancedBipartiteGraph& g, const VertexSubset& s) {
  const Row mask = low_bits(g.n());
  return (s.first & ~mask) == 0 && (s.second & ~mask) == 0;
}

int induced_edge_count(const BalancedBipartiteGraph& g, const VertexSubset& s) {
  int edges = 0;
  for (Row bits = s.first; bits != 0; bits &= bits - 1) {
    edges += std::popcount(g.first_row(std::countr_zero(bits)) & s.second);
  }
  return edges;
}

bool is_induced_forest(const BalancedBipartiteGraph& g, const VertexSubset& s) {
  const int size = s.size();
  if (size == 0) return true;
  if (induced_edge_count(g, s) >= size) return false;
  const int n = g.n();
  RollbackUnionFind uf(2 * n);
  for (Row bits = s.first; bits != 0; bits &= bits - 1) {
    const int i = std::countr_zero(bits);
    for (Row nb = g.first_row(i) & s.second; nb != 0; nb &= nb - 1) {
      if (!uf.unite(i, n + std::countr_zero(nb))) return false;
    }
  }
  return true;
}

}  // namespace bbforest
