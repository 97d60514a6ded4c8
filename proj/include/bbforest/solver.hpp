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

#ifndef BBFOREST_SOLVER_HPP_
#define BBFOREST_SOLVER_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "bbforest/graph.hpp"

namespace bbforest {

struct SolverConfig {
  // Brute force refuses graphs with more vertices than this (2^V subsets).
  int brute_force_max_vertices = 24;
  // enumerate_max_forests refuses when C(2n, f) exceeds this.
  std::uint64_t enumeration_budget = 100'000'000;
};

// forest_number + decycling_number == 2n, witness induces a forest of size
// forest_number.
struct SolveResult {
  int forest_number = 0;
  VertexSubset witness;
  int decycling_number = 0;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Scans subset sizes downward from 2n; the witness is the lexicographically
// smallest forest of maximum size (global ids: V1 first, then V2). Throws
// InstanceTooLarge above config.brute_force_max_vertices.
SolveResult max_forest_bruteforce(const BalancedBipartiteGraph& g,
                                  const SolverConfig& config = {});

// Exact branch and bound. Deterministic: the same graph always yields the
// same witness and node count.
SolveResult max_forest(const BalancedBipartiteGraph& g);

int decycling_number(const BalancedBipartiteGraph& g);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

// Calls `emit` for every S with |S| == forest_number inducing a forest, in
// increasing lexicographic order of global ids. Stops after `cap` subsets
// when cap > 0. Returns the number emitted. Throws BudgetExceeded when
// C(2n, forest_number) > config.enumeration_budget.
std::uint64_t enumerate_max_forests(
    const BalancedBipartiteGraph& g, int forest_number, std::uint64_t cap,
    const std::function<void(const VertexSubset&)>& emit,
    const SolverConfig& config = {});

std::vector<VertexSubset> enumerate_max_forests(const BalancedBipartiteGraph& g,
                                                int forest_number,
                                                std::uint64_t cap,
                                                const SolverConfig& config = {});

}  // namespace bbforest

#endif  // BBFOREST_SOLVER_HPP_
