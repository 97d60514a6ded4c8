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


#include "bbforest/theorems.hpp"

#include <vector>

#include "bbforest/bbg_format.hpp"
#include "bbforest/errors.hpp"
#include "bbforest/generators.hpp"
#include "gtest/gtest.h"
#include "oracle.hpp"

namespace bbforest {
namespace {

// Qualifying matrices counted directly from row and column sums.
std::uint64_t qualifying_matrices(int n) {
  const int t = (n + 3) / 2;
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int row = 0, col = 0;
      for (int j = 0; j < n; ++j) {
        row += (m >> (i * n + j)) & 1;
        col += (m >> (j * n + i)) & 1;
      }
      ok = row >= t && col >= t;
    }
    count += ok;
  }
  return count;
}

TEST(Theorems, ExhaustiveMinDegreeSweep) {
  for (int n : {2, 3, 4}) {
    const VerificationReport r = verify_t1_exhaustive(n, 1);
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_EQ(r.instances_checked, qualifying_matrices(n)) << n;
  }
  EXPECT_EQ(verify_t1_exhaustive(2).instances_checked, 1u);
  EXPECT_EQ(verify_t1_exhaustive(3).instances_checked, 1u);
  EXPECT_THROW(verify_t1_exhaustive(5), ParameterError);
}

TEST(Theorems, ExhaustiveIsJobIndependent) {
  const Json serial = to_json(verify_t1_exhaustive(4, 1), false);
  EXPECT_EQ(to_json(verify_t1_exhaustive(4, 3), false), serial);
}

TEST(Theorems, RandomMinDegreeSweep) {
  EXPECT_TRUE(verify_t1_random(6, 100, 1).passed());
  EXPECT_TRUE(verify_t1_random(9, 100, 1).passed());
  const VerificationReport r = verify_t1_random(4, 10, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.instances_checked, 10u);
}

TEST(Theorems, RandomSamplesAgreeWithOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_min_degree(5, degree_threshold(5), seed);
    EXPECT_EQ(oracle::exhaustive(g).forest_number, 6);
  }
}

TEST(Theorems, StructureSweeps) {
  EXPECT_TRUE(verify_structure(5, 50, 3).passed());
  EXPECT_TRUE(verify_structure(6, 50, 3).passed());
  const VerificationReport odd = verify_structure(7, 25, 4, 2, TheoremId::kC1);
  EXPECT_TRUE(odd.passed());
  EXPECT_EQ(odd.theorem, TheoremId::kC1);
  EXPECT_THROW(verify_structure(13, 1, 0), ParameterError);
}

TEST(Theorems, ProfileOfSmallGraphs) {
  const StructureProfile k22 = profile_structure(complete_balanced(2));
  EXPECT_EQ(k22.forest_number, 3);
  EXPECT_EQ(k22.lambdas, std::set<int>{1});
  EXPECT_EQ(k22.forests_enumerated, 4u);
  EXPECT_TRUE(k22.exhaustive);

  const StructureProfile half = profile_structure(thm3_lambda_half(6).graph);
  EXPECT_TRUE(half.lambdas.contains(3));
  EXPECT_TRUE(is_induced_forest(thm3_lambda_half(6).graph,
                                half.witness_per_lambda.at(3)));
}

TEST(Theorems, ProfileFallsBackWhenBudgetIsTiny) {
  SolverConfig config;
  config.enumeration_budget = 3;
  const StructureProfile p = profile_structure(complete_balanced(3), config);
  EXPECT_FALSE(p.exhaustive);
  EXPECT_EQ(p.lambdas.size(), 1u);
}

TEST(Theorems, Constructions) {
  for (TheoremId id : {TheoremId::kP1, TheoremId::kT6Lambda1,
                       TheoremId::kT6Lambda2, TheoremId::kT6LambdaHalf,
                       TheoremId::kT7L1, TheoremId::kT7L2}) {
    const auto params = default_construction_params(id);
    const VerificationReport r = verify_constructions(id, params);
    EXPECT_TRUE(r.passed()) << theorem_name(id) << " "
                            << to_json(r, false).dump();
    EXPECT_EQ(r.instances_checked, params.size());
  }
  EXPECT_THROW(default_construction_params(TheoremId::kT1), ParameterError);
}

TEST(Theorems, ConstructionParameterErrorsAreRecorded) {
  const std::vector<ConstructionParams> bad = {{5, 2}};
  const VerificationReport r = verify_constructions(TheoremId::kT7L2, bad);
  ASSERT_EQ(r.counterexamples.size(), 1u);
  EXPECT_EQ(r.counterexamples[0].claim.kind, Claim::Kind::kError);
}

TEST(Theorems, OddFloorDegreeSweep) {
  const std::vector<int> ns = {5, 7};
  const VerificationReport r = verify_t8(ns, 50, 9);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.instances_checked, 100u);
  const std::vector<int> three = {3};
  EXPECT_TRUE(verify_t8(three, 20, 1).passed());
  const std::vector<int> nine = {9};
  EXPECT_TRUE(verify_t8(nine, 25, 10, 2).passed());
  const std::vector<int> even = {6};
  EXPECT_THROW(verify_t8(even, 1, 0), ParameterError);
}

TEST(Theorems, ReplayRejectsFabricatedClaims) {
  Counterexample c;
  c.bbg = emit_bbg(complete_balanced(3));
  c.claim.kind = Claim::Kind::kForestNumber;
  c.claim.expected = 4;
  EXPECT_FALSE(replay(c));
  c.claim.expected = 5;
  EXPECT_TRUE(replay(c));
  c.claim.kind = Claim::Kind::kForestCount;
  c.claim.expected = 6;
  EXPECT_FALSE(replay(c));
  c.claim.kind = Claim::Kind::kMinDegreeAtLeast;
  c.claim.expected = 3;
  EXPECT_FALSE(replay(c));
}

}  // namespace
}  // namespace bbforest
