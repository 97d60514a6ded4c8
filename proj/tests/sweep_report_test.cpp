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


#include <stdexcept>

#include "bbforest/bbg_format.hpp"
#include "bbforest/bounds.hpp"
#include "bbforest/generators.hpp"
#include "bbforest/report.hpp"
#include "bbforest/sweep.hpp"
#include "bbforest/theorems.hpp"
#include "gtest/gtest.h"

namespace bbforest {
namespace {

InstanceOutcome every_seventh_fails(std::uint64_t index) {
  InstanceOutcome out;
  out.checked = index % 3 != 0;
  if (index % 7 == 0) {
    Counterexample c;
    c.detail = "first " + std::to_string(index);
    out.counterexamples.push_back(c);
    c.detail = "second " + std::to_string(index);
    out.counterexamples.push_back(c);
  }
  if (index == 50) throw std::runtime_error("boom");
  return out;
}

TEST(Sweep, ParallelMatchesSerial) {
  const SweepTotals serial = sweep_serial(1000, every_seventh_fails);
  for (int jobs : {1, 2, 4, 7}) {
    EXPECT_TRUE(sweep_parallel(1000, every_seventh_fails, jobs) == serial);
  }
  EXPECT_EQ(serial.instances_checked, 1000u - 334u);
  ASSERT_EQ(serial.counterexamples.size(), 2u * 143u + 1u);
  EXPECT_EQ(serial.counterexamples[0].detail, "first 0");
  EXPECT_EQ(serial.counterexamples[1].detail, "second 0");
}

TEST(Sweep, ExceptionsBecomeErrorRecords) {
  const SweepTotals totals = sweep(51, every_seventh_fails, 1);
  const Counterexample& last = totals.counterexamples.back();
  EXPECT_EQ(last.instance, 50u);
  EXPECT_EQ(last.claim.kind, Claim::Kind::kError);
  EXPECT_EQ(last.detail, "error: boom");
}

TEST(Report, TheoremNames) {
  EXPECT_EQ(theorem_name(TheoremId::kT6LambdaHalf), "T6λhalf");
  EXPECT_EQ(parse_theorem("T6λ2"), TheoremId::kT6Lambda2);
  EXPECT_EQ(parse_theorem("T6L1"), TheoremId::kT6Lambda1);
  EXPECT_EQ(parse_theorem("BOUNDS"), TheoremId::kBounds);
  EXPECT_FALSE(parse_theorem("T9").has_value());
}

TEST(Report, JsonRoundTrip) {
  VerificationReport report;
  report.theorem = TheoremId::kT2;
  report.params["n"] = 6;
  report.instances_checked = 12;
  Counterexample c;
  c.instance = 3;
  c.bbg = emit_bbg(complete_balanced(2));
  c.witness = VertexSubset{0b11, 0b01};
  c.detail = "d";
  c.claim.kind = Claim::Kind::kStructure;
  c.claim.expected = 3;
  c.claim.allowed = {2};
  report.counterexamples.push_back(c);

  const Json json = to_json(report, false);
  EXPECT_FALSE(json.contains("elapsed_ms"));
  EXPECT_EQ(json["verdict"], "fail");
  EXPECT_EQ(json["counterexamples"][0]["witness"]["first"], Json({0, 1}));
  const VerificationReport back = report_from_json(Json::parse(json.dump()));
  EXPECT_EQ(to_json(back, false).dump(), json.dump());
  // K_{2,2} minus nothing: {a0,a1,b0} is a maximum forest with λ = 1, not 2.
  EXPECT_TRUE(replay(back.counterexamples[0]));
  EXPECT_TRUE(to_json(report).contains("elapsed_ms"));
}

TEST(Report, MergeKeepsOrder) {
  VerificationReport a = check_bounds(10);
  const VerificationReport b = check_bounds(8);
  const auto total = a.instances_checked + b.instances_checked;
  merge_into(a, b);
  EXPECT_EQ(a.instances_checked, total);
  EXPECT_EQ(a.counterexamples.size(), 2u);
}

}  // namespace
}  // namespace bbforest
