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

// Verification drivers. Each returns a VerificationReport whose verdict is
// "pass" exactly when no counterexample was found. `jobs` > 1 runs the
// instances on that many OpenMP threads; results do not depend on it.

#ifndef BBFOREST_THEOREMS_HPP_
#define BBFOREST_THEOREMS_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "bbforest/graph.hpp"
#include "bbforest/report.hpp"
#include "bbforest/solver.hpp"

namespace bbforest {

// λ values over all maximum induced forests of one graph.
struct StructureProfile {
  int forest_number = 0;
  std::set<int> lambdas;
  std::map<int, VertexSubset> witness_per_lambda;
  // False when C(2n, f) exceeded the enumeration budget; lambdas then only
  // holds the solver's witness.
  bool exhaustive = false;
  std::uint64_t forests_enumerated = 0;
};

StructureProfile profile_structure(const BalancedBipartiteGraph& g,
                                   const SolverConfig& config = {});

// Every labeled n x n matrix with δ >= ⌈(n+2)/2⌉ has f = n + 1, by brute
// force. n in {2, 3, 4}; n = 5 only with allow_n5.
VerificationReport verify_t1_exhaustive(int n, int jobs = 1,
                                        bool allow_n5 = false);

// Samples random_min_degree(n, ⌈(n+2)/2⌉, seed + i) and checks f = n + 1.
VerificationReport verify_t1_random(int n, int samples, std::uint64_t seed,
                                    int jobs = 1);

// For sampled δ-qualifying graphs: every maximum forest has λ in {1, 2, n/2}
// (n/2 only for even n); for odd n λ is always 1, never 2, and the maximum
// forests are exactly the 2n sets with λ = 1. `theorem` labels the report
// (T2, T4 or C1); all checks always run. n <= 12.
VerificationReport verify_structure(int n, int samples, std::uint64_t seed,
                                    int jobs = 1,
                                    TheoremId theorem = TheoremId::kT2,
                                    const SolverConfig& config = {});

struct ConstructionParams {
  int n = 0;
  int k = 0;
};

// Default sweep parameters per construction theorem (P1, T6λ*, T7l*).
std::vector<ConstructionParams> default_construction_params(TheoremId theorem);

// Builds each construction, re-checks its postconditions and compares the
// solver's f with the claimed value: n + 2 (P1), n + 1 with a λ witness
// (T6λ*), |V|/2 + 1 (T7l1), |V|/2 + 2 (T7l2).
VerificationReport verify_constructions(TheoremId theorem,
                                        std::span<const ConstructionParams> params,
                                        int jobs = 1);

// Samples random_th7(n, seed + i) for each odd n <= 15 and checks f = n + 1.
VerificationReport verify_t8(std::span<const int> ns, int samples,
                             std::uint64_t seed, int jobs = 1);

// Re-evaluates a counterexample from its own record. True when the violation
// still reproduces.
bool replay(const Counterexample& counterexample);

}  // namespace bbforest

#endif  // BBFOREST_THEOREMS_HPP_
