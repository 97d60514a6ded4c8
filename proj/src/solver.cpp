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

#include "bbforest/solver.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "bbforest/errors.hpp"
#include "bbforest/union_find.hpp"

namespace bbforest {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t reverse_bits(std::uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) |
      ((x & 0x0000FFFF0000FFFFULL) << 16);
  return (x >> 32) | (x << 32);
}

// Next larger integer with the same popcount.
std::uint64_t next_combination(std::uint64_t c) {
  const std::uint64_t low = c & (~c + 1);
  const std::uint64_t ripple = c + low;
  return ripple | (((c ^ ripple) >> 2) / low);
}

void finish(SolveResult& result, int n, Clock::time_point start) {
  result.decycling_number = 2 * n - result.forest_number;
  result.elapsed = Clock::now() - start;
}

// Branch and bound over include/exclude decisions. UF node ids: first-part
// vertex i is i, second-part vertex j is n + j.
class BranchAndBound {
 public:
  explicit BranchAndBound(const BalancedBipartiteGraph& g)
      : g_(g), n_(g.n()), uf_(2 * g.n()) {}

  SolveResult run() {
    // Incumbent: V1 plus the first vertex of V2 is always a forest.
    best_ = {g_.all_vertices().first, Row{1}};
    best_size_ = n_ + 1;
    search(VertexSubset{}, g_.all_vertices(), 0);
    SolveResult result;
    result.forest_number = best_size_;
    result.witness = best_;
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  Row neighbours_in(Side side, int index, const VertexSubset& set) const {
    return side == Side::kFirst ? g_.first_row(index) & set.second
                                : g_.second_row(index) & set.first;
  }

  int node_id(Side side, int index) const {
    return side == Side::kFirst ? index : n_ + index;
  }

  // True if adding the vertex to `in` would close a cycle, i.e. two of its
  // neighbours in `in` already share a component.
  bool closes_cycle(Side side, int index, const VertexSubset& in) const {
    const Row nb = neighbours_in(side, index, in);
    if (std::popcount(nb) < 2) return false;
    const Side other = side == Side::kFirst ? Side::kSecond : Side::kFirst;
    std::array<int, kMaxPartSize> roots;
    int count = 0;
    for (Row bits = nb; bits != 0; bits &= bits - 1) {
      const int root = uf_.find(node_id(other, std::countr_zero(bits)));
      for (int k = 0; k < count; ++k) {
        if (roots[k] == root) return true;
      }
      roots[count++] = root;
    }
    return false;
  }

  // Moves the vertex from cand to in. Returns the number of unions made.
  int include(Side side, int index, VertexSubset& in, VertexSubset& cand) {
    const Side other = side == Side::kFirst ? Side::kSecond : Side::kFirst;
    int unions = 0;
    for (Row bits = neighbours_in(side, index, in); bits != 0;
         bits &= bits - 1) {
      if (uf_.unite(node_id(side, index),
                    node_id(other, std::countr_zero(bits)))) {
        ++unions;
      }
    }
    const Row bit = Row{1} << index;
    if (side == Side::kFirst) {
      in.first |= bit;
      cand.first &= ~bit;
    } else {
      in.second |= bit;
      cand.second &= ~bit;
    }
    return unions;
  }

  // Forced moves: drop candidates that would close a cycle with `in`, and
  // take candidates with at most one neighbour left in in ∪ cand (such a
  // vertex is never on a cycle). Returns unions performed.
  int reduce(VertexSubset& in, VertexSubset& cand) {
    int unions = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (Row bits = cand.first; bits != 0; bits &= bits - 1) {
        const int i = std::countr_zero(bits);
        if (closes_cycle(Side::kFirst, i, in)) {
          cand.first &= ~(Row{1} << i);
          changed = true;
        }
      }
      for (Row bits = cand.second; bits != 0; bits &= bits - 1) {
        const int j = std::countr_zero(bits);
        if (closes_cycle(Side::kSecond, j, in)) {
          cand.second &= ~(Row{1} << j);
          changed = true;
        }
      }
      for (Row bits = cand.first; bits != 0; bits &= bits - 1) {
        const int i = std::countr_zero(bits);
        const Row avail = in.second | cand.second;
        if (std::popcount(g_.first_row(i) & avail) <= 1) {
          unions += include(Side::kFirst, i, in, cand);
          changed = true;
        }
      }
      for (Row bits = cand.second; bits != 0; bits &= bits - 1) {
        const int j = std::countr_zero(bits);
        const Row avail = in.first | cand.first;
        if (std::popcount(g_.second_row(j) & avail) <= 1) {
          unions += include(Side::kSecond, j, in, cand);
          changed = true;
        }
      }
    }
    return unions;
  }

  // Forest edge bound: for S = in ∪ T acyclic, |E(S)| <= |S| - 1 forces
  //   sum over r in T of (d_in(r) - 1) <= components(in) - 1.
  int upper_bound(const VertexSubset& in, const VertexSubset& cand,
                  int in_edges) const {
    const int in_size = in.size();
    const int components = in_size - in_edges;
    int free_count = 0;
    int credit = components - 1;
    std::array<int, 2 * kMaxPartSize> costs;
    int cost_count = 0;
    auto account = [&](int d) {
      if (d == 0) {
        ++free_count;
        ++credit;
      } else if (d == 1) {
        ++free_count;
      } else {
        costs[cost_count++] = d - 1;
      }
    };
    for (Row bits = cand.first; bits != 0; bits &= bits - 1) {
      account(std::popcount(g_.first_row(std::countr_zero(bits)) & in.second));
    }
    for (Row bits = cand.second; bits != 0; bits &= bits - 1) {
      account(std::popcount(g_.second_row(std::countr_zero(bits)) & in.first));
    }
    std::sort(costs.begin(), costs.begin() + cost_count);
    int taken = 0;
    for (int k = 0; k < cost_count && costs[k] <= credit; ++k) {
      credit -= costs[k];
      ++taken;
    }
    return in_size + free_count + taken;
  }

  // Branching vertex: a candidate on a 4-cycle of G[in ∪ cand] if one exists,
  // otherwise any candidate; among those the one of largest degree in
  // G[in ∪ cand], ties to the lowest global id.
  Vertex pick_branch_vertex(const VertexSubset& avail,
                            const VertexSubset& cand) const {
    VertexSubset pool{};
    for (Row a = avail.first; a != 0 && pool.size() == 0; a &= a - 1) {
      const int i = std::countr_zero(a);
      const Row ni = g_.first_row(i) & avail.second;
      for (Row b = a & (a - 1); b != 0; b &= b - 1) {
        const int k = std::countr_zero(b);
        const Row common = ni & g_.first_row(k);
        if (std::popcount(common) >= 2) {
          const Row first_common = common & (~common + 1);
          const Row rest = common & ~first_common;
          const Row second_common = rest & (~rest + 1);
          const VertexSubset cycle{(Row{1} << i) | (Row{1} << k),
                                   first_common | second_common};
          pool = {cycle.first & cand.first, cycle.second & cand.second};
          break;
        }
      }
    }
    if (pool.size() == 0) pool = cand;

    Vertex best{Side::kFirst, -1};
    int best_degree = -1;
    for (Row bits = pool.first; bits != 0; bits &= bits - 1) {
      const int i = std::countr_zero(bits);
      const int d = std::popcount(g_.first_row(i) & avail.second);
      if (d > best_degree) {
        best_degree = d;
        best = {Side::kFirst, i};
      }
    }
    for (Row bits = pool.second; bits != 0; bits &= bits - 1) {
      const int j = std::countr_zero(bits);
      const int d = std::popcount(g_.second_row(j) & avail.first);
      if (d > best_degree) {
        best_degree = d;
        best = {Side::kSecond, j};
      }
    }
    return best;
  }

  void search(VertexSubset in, VertexSubset cand, int in_edges) {
    ++nodes_;
    const std::size_t mark = uf_.checkpoint();
    in_edges += reduce(in, cand);

    const VertexSubset avail{in.first | cand.first, in.second | cand.second};
    if (avail.size() <= best_size_ ||
        upper_bound(in, cand, in_edges) <= best_size_) {
      uf_.rollback(mark);
      return;
    }
    if (is_induced_forest(g_, avail)) {
      best_size_ = avail.size();
      best_ = avail;
      uf_.rollback(mark);
      return;
    }

    const Vertex v = pick_branch_vertex(avail, cand);
    const Row bit = Row{1} << v.index;

    {
      VertexSubset in2 = in;
      VertexSubset cand2 = cand;
      const std::size_t inner = uf_.checkpoint();
      const int unions = include(v.side, v.index, in2, cand2);
      search(in2, cand2, in_edges + unions);
      uf_.rollback(inner);
    }
    {
      VertexSubset cand2 = cand;
      if (v.side == Side::kFirst) {
        cand2.first &= ~bit;
      } else {
        cand2.second &= ~bit;
      }
      search(in, cand2, in_edges);
    }
    uf_.rollback(mark);
  }

  const BalancedBipartiteGraph& g_;
  int n_;
  RollbackUnionFind uf_;
  VertexSubset best_;
  int best_size_ = 0;
  std::uint64_t nodes_ = 0;
};

// Lexicographic DFS over global ids; include-before-exclude gives increasing
// lexicographic output order.
class ForestEnumerator {
 public:
  ForestEnumerator(const BalancedBipartiteGraph& g, int target,
                   std::uint64_t cap,
                   const std::function<void(const VertexSubset&)>& emit)
      : g_(g), n_(g.n()), target_(target), cap_(cap), emit_(emit),
        uf_(2 * g.n()) {}

  std::uint64_t run() {
    dfs(0, VertexSubset{}, 0);
    return emitted_;
  }

 private:
  bool done() const { return cap_ > 0 && emitted_ >= cap_; }

  void dfs(int next, VertexSubset chosen, int count) {
    if (done()) return;
    if (count == target_) {
      ++emitted_;
      emit_(chosen);
      return;
    }
    const int total = 2 * n_;
    if (total - next < target_ - count) return;

    const bool first_side = next < n_;
    const int index = first_side ? next : next - n_;
    const Row nb = first_side ? g_.first_row(index) & chosen.second
                              : g_.second_row(index) & chosen.first;
    const int self = next;
    const std::size_t mark = uf_.checkpoint();
    bool acyclic = true;
    for (Row bits = nb; bits != 0; bits &= bits - 1) {
      const int other = first_side ? n_ + std::countr_zero(bits)
                                   : std::countr_zero(bits);
      if (!uf_.unite(self, other)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) {
      VertexSubset with = chosen;
      if (first_side) {
        with.first |= Row{1} << index;
      } else {
        with.second |= Row{1} << index;
      }
      dfs(next + 1, with, count + 1);
    }
    uf_.rollback(mark);
    dfs(next + 1, chosen, count);
  }

  const BalancedBipartiteGraph& g_;
  int n_;
  int target_;
  std::uint64_t cap_;
  const std::function<void(const VertexSubset&)>& emit_;
  RollbackUnionFind uf_;
  std::uint64_t emitted_ = 0;
};

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (value > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(value);
}

SolveResult max_forest_bruteforce(const BalancedBipartiteGraph& g,
                                  const SolverConfig& config) {
  const auto start = Clock::now();
  const int n = g.n();
  const int total = 2 * n;
  // Masks are 64-bit words; Gosper's hack needs one spare bit.
  if (total > config.brute_force_max_vertices || total > 62) {
    throw InstanceTooLarge("brute force on " + std::to_string(total) +
                               " vertices",
                           static_cast<std::uint64_t>(
                               config.brute_force_max_vertices));
  }
  // Global id v maps to bit (total - 1 - v), so within one popcount class
  // decreasing numeric order is increasing lexicographic order. Walk the
  // complements upward with Gosper's hack to get exactly that.
  const std::uint64_t full = low_bits(total);
  SolveResult result;
  for (int size = total; size >= 0; --size) {
    const int removed = total - size;
    std::uint64_t c = removed == 0 ? 0 : low_bits(removed);
    while (c <= full) {
      const std::uint64_t mask = ~c & full;
      const std::uint64_t ids = reverse_bits(mask) >> (64 - total);
      const VertexSubset s{ids & low_bits(n), (ids >> n) & low_bits(n)};
      ++result.nodes_explored;
      if (is_induced_forest(g, s)) {
        result.forest_number = size;
        result.witness = s;
        finish(result, n, start);
        return result;
      }
      if (c == 0) break;
      c = next_combination(c);
    }
  }
  finish(result, n, start);
  return result;
}

SolveResult max_forest(const BalancedBipartiteGraph& g) {
  const auto start = Clock::now();
  BranchAndBound bnb(g);
  SolveResult result = bnb.run();
  finish(result, g.n(), start);
  return result;
}

int decycling_number(const BalancedBipartiteGraph& g) {
  return max_forest(g).decycling_number;
}

std::uint64_t enumerate_max_forests(
    const BalancedBipartiteGraph& g, int forest_number, std::uint64_t cap,
    const std::function<void(const VertexSubset&)>& emit,
    const SolverConfig& config) {
  const std::uint64_t combinations = binomial(2 * g.n(), forest_number);
  if (combinations > config.enumeration_budget) {
    throw BudgetExceeded(combinations, config.enumeration_budget);
  }
  ForestEnumerator enumerator(g, forest_number, cap, emit);
  return enumerator.run();
}

std::vector<VertexSubset> enumerate_max_forests(const BalancedBipartiteGraph& g,
                                                int forest_number,
                                                std::uint64_t cap,
                                                const SolverConfig& config) {
  std::vector<VertexSubset> out;
  enumerate_max_forests(
      g, forest_number, cap,
      [&out](const VertexSubset& s) { out.push_back(s); }, config);
  return out;
}

}  // namespace bbforest
