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

#ifndef BBFOREST_REPORT_HPP_
#define BBFOREST_REPORT_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbforest/graph.hpp"
#include "json.hpp"

namespace bbforest {

using Json = nlohmann::ordered_json;

enum class TheoremId : std::uint8_t {
  kT1,
  kP1,
  kT2,
  kT4,
  kC1,
  kT6Lambda1,
  kT6Lambda2,
  kT6LambdaHalf,
  kT7L1,
  kT7L2,
  kT8,
  kBounds,
};

// Canonical ids are "T1", "P1", "T2", "T4", "C1", "T6λ1", "T6λ2", "T6λhalf",
// "T7l1", "T7l2", "T8", "BOUNDS". The λ ids also parse from the ASCII
// spellings "T6L1", "T6L2", "T6Lhalf".
std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

// What a counterexample claims to violate; enough to re-check it from the
// record alone.
struct Claim {
  enum class Kind : std::uint8_t {
    kForestNumber,     // f(G) == expected
    kMinDegreeAtLeast, // δ(G) >= expected
    kMinDegreeEquals,  // δ(G) == expected
    kWitness,          // witness is a forest, |S| == expected, balance == lambda
    kStructure,        // witness is a maximum forest with balance in allowed
    kForestCount,      // number of maximum forests == expected
    kBound,            // bound `function`(n, k) >= expected
    kError,            // the instance raised an error
  };

  Kind kind = Kind::kForestNumber;
  int expected = 0;
  int lambda = 0;
  std::vector<int> allowed;
  std::string function;
  int n = 0;
  int k = 0;
};

struct Counterexample {
  std::uint64_t instance = 0;
  std::string bbg;
  std::optional<VertexSubset> witness;
  std::string detail;
  Claim claim;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::kT1;
  Json params = Json::object();
  std::uint64_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return counterexamples.empty(); }
};

// Counts add, counterexample lists concatenate (stable by instance index),
// elapsed times add. Params of `other` are kept under params["merged"].
void merge_into(VerificationReport& into, const VerificationReport& other);

// {theorem_id, params, instances_checked, counterexamples:[{bbg, witness?,
// detail, instance, claim}], elapsed_ms, verdict}. elapsed_ms is omitted when
// include_timing is false.
Json to_json(const VerificationReport& report, bool include_timing = true);
VerificationReport report_from_json(const Json& json);

// Witness as {"first":[...], "second":[...]} with 0-based part indices.
Json witness_to_json(const VertexSubset& s);
VertexSubset witness_from_json(const Json& json);

}  // namespace bbforest

#endif  // BBFOREST_REPORT_HPP_
