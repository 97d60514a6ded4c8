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

// Builders for the extremal constructions plus seeded random families.
//
// Every free choice in a construction ("some neighbours", "a subset U") is
// resolved to the lowest indices. Part layouts are documented per builder.

#ifndef BBFOREST_GENERATORS_HPP_
#define BBFOREST_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bbforest/graph.hpp"

namespace bbforest {

enum class Family : std::uint8_t {
  kComplete,
  kProp1,
  kThm3Lambda2,
  kThm3LambdaHalf,
  kThh1L1,
  kThh1L2,
  kRandomMinDegree,
  kRandomTh7,
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::kComplete;
  int n = 1;
  std::optional<int> k;
  std::optional<int> delta_min;
  std::uint64_t seed = 0;
};

// A construction together with the induced-forest witness it was built
// around.
struct WitnessedGraph {
  BalancedBipartiteGraph graph;
  VertexSubset witness;
};

// K_{n,n}.
BalancedBipartiteGraph complete_balanced(int n);

// K_{n,n} with first-part vertices 0 and 1 stripped down to degree ⌈n/2⌉:
// vertex 0 loses second-part vertices 0..⌊n/2⌋-1, vertex 1 loses
// ⌈n/2⌉..n-1. Requires n >= 2.
BalancedBipartiteGraph prop1_construction(int n);

// n even, n >= 4. First part: A = {0, 1}, F = {2..n-1}; second part:
// B = {0..n-2}, H = {n-1}. Witness S = A ∪ B with min part count 2.
WitnessedGraph thm3_lambda2(int n);

// n even, n >= 4. First part: A = {0..n/2-1}, F = {n/2..n-1}; second part:
// B = {0..n/2}, H = {n/2+1..n-1}. A ∪ B is the path b0 a0 b1 a1 ... b_{n/2}.
// Witness S = A ∪ B with min part count n/2.
WitnessedGraph thm3_lambda_half(int n);

// n odd, k >= 2, n >= k-1. Part size n+1: K_{n,n} on indices 0..n-1 plus
// x = first-part n and y = second-part n. x is adjacent to y and to
// second-part 0..k-2; y is adjacent to every first-part vertex.
BalancedBipartiteGraph thh1_l1(int n, int k);

// n even, k >= 2, k <= n/2. Part size n+1: H = K_{n,n} minus the edges from
// v = first-part 0 to second-part n/2+1..n-1; x = first-part n adjacent to y
// and to second-part n/2+1..n/2+k-1; y = second-part n adjacent to x and to
// first-part 0..k-1.
BalancedBipartiteGraph thh1_l2(int n, int k);

// The forest V2 ∪ {x, v} (V2 including y) of thh1_l2.
VertexSubset thh1_l2_witness(int n);

// Each cross pair is an edge with probability max(1/2, (delta_min+1)/n),
// then every vertex below delta_min gains edges to random non-neighbours.
// Same (n, delta_min, seed) always gives the same graph.
BalancedBipartiteGraph random_min_degree(int n, int delta_min,
                                         std::uint64_t seed);

// n odd, n >= 3. δ >= (n+1)/2 with at most one vertex of degree exactly
// (n+1)/2 in each part.
BalancedBipartiteGraph random_th7(int n, std::uint64_t seed);

// Dispatches on spec.family. The witness-carrying families return only the
// graph here.
BalancedBipartiteGraph generate(const GeneratorSpec& spec);

// Smallest integer δ with δ >= n/2 + 1, i.e. ⌈(n+2)/2⌉.
int degree_threshold(int n);

}  // namespace bbforest

#endif  // BBFOREST_GENERATORS_HPP_
