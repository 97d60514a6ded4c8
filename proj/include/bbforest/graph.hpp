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

#ifndef BBFOREST_GRAPH_HPP_
#define BBFOREST_GRAPH_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bbforest {

// One row of the adjacency matrix: bit j set means "adjacent to vertex j of
// the opposite part".
using Row = std::uint64_t;

// Largest supported part size; every row is a single machine word.
inline constexpr int kMaxPartSize = 64;

inline Row low_bits(int count) {
  return count >= 64 ? ~Row{0} : ((Row{1} << count) - 1);
}

enum class Side : std::uint8_t { kFirst = 0, kSecond = 1 };

// A vertex is addressed by (side, index), both parts 0-indexed. The global id
// used for orderings is `index` on the first side and `n + index` on the
// second.
struct Vertex {
  Side side;
  int index;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// A selection S of vertices, split by part.
struct VertexSubset {
  Row first = 0;
  Row second = 0;

  int size() const { return std::popcount(first) + std::popcount(second); }
  int first_count() const { return std::popcount(first); }
  int second_count() const { return std::popcount(second); }
  // min{|S ∩ V1|, |S ∩ V2|}
  int balance() const {
    return first_count() < second_count() ? first_count() : second_count();
  }
  bool contains(Vertex v) const {
    Row bits = v.side == Side::kFirst ? first : second;
    return (bits >> v.index) & 1U;
  }

  // Sorted global ids: first-part indices, then n + second-part indices.
  std::vector<int> global_ids(int n) const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
};

// Lexicographic comparison of the sorted global-id sequences of two subsets
// of the same size on a graph with part size n.
bool lex_less(const VertexSubset& a, const VertexSubset& b, int n);

// Balanced bipartite graph with parts V1 and V2 of n vertices each. Immutable
// once built; use GraphBuilder to construct one edge at a time.
class BalancedBipartiteGraph {
 public:
  // Takes ownership of V1 rows (bit j of rows[i] = edge i–j). Throws
  // MalformedInput if rows.size() != n or a row has bits at or above n, and
  // InstanceTooLarge if n > kMaxPartSize.
  static BalancedBipartiteGraph from_rows(int n, std::vector<Row> rows);

  // Rows given as '0'/'1' strings of width n, column j = vertex j of V2.
  static BalancedBipartiteGraph from_strings(
      int n, std::span<const std::string> rows);

  int n() const { return n_; }
  int vertex_count() const { return 2 * n_; }

  // Neighbours of first-part vertex i, as a bitset over V2.
  Row first_row(int i) const { return adj1_[i]; }
  // Neighbours of second-part vertex j, as a bitset over V1.
  Row second_row(int j) const { return adj2_[j]; }
  Row row(Vertex v) const {
    return v.side == Side::kFirst ? adj1_[v.index] : adj2_[v.index];
  }

  std::span<const Row> first_rows() const { return adj1_; }
  std::span<const Row> second_rows() const { return adj2_; }

  bool has_edge(int i, int j) const { return (adj1_[i] >> j) & 1U; }
  int degree(Vertex v) const { return std::popcount(row(v)); }
  int edge_count() const;
  int min_degree() const;

  // Full vertex set V1 ∪ V2.
  VertexSubset all_vertices() const { return {low_bits(n_), low_bits(n_)}; }

  friend bool operator==(const BalancedBipartiteGraph& a,
                         const BalancedBipartiteGraph& b) {
    return a.n_ == b.n_ && a.adj1_ == b.adj1_;
  }

 private:
  BalancedBipartiteGraph(int n, std::vector<Row> adj1, std::vector<Row> adj2)
      : n_(n), adj1_(std::move(adj1)), adj2_(std::move(adj2)) {}

  int n_;
  std::vector<Row> adj1_;
  std::vector<Row> adj2_;
};

// Single-owner mutable builder; `freeze` produces the immutable graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int n() const { return n_; }
  void add_edge(int i, int j);
  void remove_edge(int i, int j);
  bool has_edge(int i, int j) const { return (rows_[i] >> j) & 1U; }
  int first_degree(int i) const { return std::popcount(rows_[i]); }
  int second_degree(int j) const;

  BalancedBipartiteGraph freeze() const;

 private:
  int n_;
  std::vector<Row> rows_;
};

// Transpose of a set of n first-part rows.
std::vector<Row> transpose(std::span<const Row> rows, int n);

// Number of edges of G[S].
int induced_edge_count(const BalancedBipartiteGraph& g, const VertexSubset& s);

// True iff G[S] is acyclic.
bool is_induced_forest(const BalancedBipartiteGraph& g, const VertexSubset& s);

// True iff every bit of S lies inside the graph's index range.
bool within_bounds(const BalancedBipartiteGraph& g, const VertexSubset& s);

}  // namespace bbforest

#endif  // BBFOREST_GRAPH_HPP_
