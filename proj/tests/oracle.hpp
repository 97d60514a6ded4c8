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

// Test-only reference code. Works on a plain 2n x 2n adjacency matrix and a
// vertex mask, sharing nothing with the library's bitset/union-find paths.

#ifndef BBFOREST_TESTS_ORACLE_HPP_
#define BBFOREST_TESTS_ORACLE_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "bbforest/graph.hpp"

namespace bbforest::oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix to_matrix(const BalancedBipartiteGraph& g) {
  const int n = g.n();
  Matrix m(2 * n, std::vector<bool>(2 * n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.has_edge(i, j)) {
        m[i][n + j] = true;
        m[n + j][i] = true;
      }
    }
  }
  return m;
}

// Vertex v of the matrix is in the set iff bit v of mask is set.
inline std::uint64_t to_mask(const VertexSubset& s, int n) {
  return (s.first & low_bits(n)) | ((s.second & low_bits(n)) << n);
}

inline VertexSubset from_mask(std::uint64_t mask, int n) {
  return {mask & low_bits(n), (mask >> n) & low_bits(n)};
}

// Recursive DFS looking for a back edge to anything but the parent.
inline bool dfs_finds_cycle(const Matrix& m, std::uint64_t mask, int v,
                            int parent, std::vector<bool>& seen) {
  seen[v] = true;
  for (int u = 0; u < static_cast<int>(m.size()); ++u) {
    if (!m[v][u] || !((mask >> u) & 1U)) continue;
    if (u == parent) continue;
    if (seen[u]) return true;
    if (dfs_finds_cycle(m, mask, u, v, seen)) return true;
  }
  return false;
}

inline bool is_forest(const Matrix& m, std::uint64_t mask) {
  std::vector<bool> seen(m.size(), false);
  for (int v = 0; v < static_cast<int>(m.size()); ++v) {
    if (((mask >> v) & 1U) && !seen[v] && dfs_finds_cycle(m, mask, v, -1, seen)) {
      return false;
    }
  }
  return true;
}

// Forest number and count of maximum forests by scanning every mask.
struct ExhaustiveResult {
  int forest_number = 0;
  std::uint64_t max_forest_count = 0;
};

inline ExhaustiveResult exhaustive(const BalancedBipartiteGraph& g) {
  const Matrix m = to_matrix(g);
  const int total = 2 * g.n();
  ExhaustiveResult out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size < out.forest_number) continue;
    if (!is_forest(m, mask)) continue;
    if (size > out.forest_number) {
      out.forest_number = size;
      out.max_forest_count = 0;
    }
    ++out.max_forest_count;
  }
  return out;
}

// Erdős–Rényi style balanced bipartite graph for tests.
inline BalancedBipartiteGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Row> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (coin(rng)) rows[i] |= Row{1} << j;
    }
  }
  return BalancedBipartiteGraph::from_rows(n, std::move(rows));
}

}  // namespace bbforest::oracle

#endif  // BBFOREST_TESTS_ORACLE_HPP_
