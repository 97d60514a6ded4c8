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

#include "bbforest/report.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "bbforest/errors.hpp"

namespace bbforest {
namespace {

constexpr std::array<std::string_view, 12> kTheoremNames = {
    "T1",        "P1",        "T2",   "T4",   "C1", "T6λ1",
    "T6λ2",      "T6λhalf",   "T7l1", "T7l2", "T8", "BOUNDS",
};

constexpr std::array<std::pair<std::string_view, TheoremId>, 3> kAliases = {{
    {"T6L1", TheoremId::kT6Lambda1},
    {"T6L2", TheoremId::kT6Lambda2},
    {"T6Lhalf", TheoremId::kT6LambdaHalf},
}};

constexpr std::array<std::string_view, 8> kClaimKinds = {
    "forest_number", "min_degree_at_least", "min_degree_equals", "witness",
    "structure",     "forest_count",        "bound",             "error",
};

Json claim_to_json(const Claim& claim) {
  Json out = Json::object();
  out["kind"] = kClaimKinds[static_cast<std::size_t>(claim.kind)];
  out["expected"] = claim.expected;
  switch (claim.kind) {
    case Claim::Kind::kWitness:
      out["lambda"] = claim.lambda;
      break;
    case Claim::Kind::kStructure:
      out["allowed"] = claim.allowed;
      break;
    case Claim::Kind::kBound:
      out["function"] = claim.function;
      out["n"] = claim.n;
      out["k"] = claim.k;
      break;
    default:
      break;
  }
  return out;
}

Claim claim_from_json(const Json& json) {
  Claim claim;
  const std::string kind = json.at("kind").get<std::string>();
  const auto it = std::find(kClaimKinds.begin(), kClaimKinds.end(), kind);
  if (it == kClaimKinds.end()) throw MalformedInput("unknown claim kind " + kind);
  claim.kind = static_cast<Claim::Kind>(it - kClaimKinds.begin());
  claim.expected = json.value("expected", 0);
  claim.lambda = json.value("lambda", 0);
  claim.allowed = json.value("allowed", std::vector<int>{});
  claim.function = json.value("function", std::string{});
  claim.n = json.value("n", 0);
  claim.k = json.value("k", 0);
  return claim;
}

std::vector<int> bit_indices(Row bits) {
  std::vector<int> out;
  for (; bits != 0; bits &= bits - 1) out.push_back(std::countr_zero(bits));
  return out;
}

Row bits_from(const Json& list) {
  Row out = 0;
  for (const auto& v : list) {
    const int index = v.get<int>();
    if (index < 0 || index >= kMaxPartSize) {
      throw MalformedInput("witness index out of range");
    }
    out |= Row{1} << index;
  }
  return out;
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  return kTheoremNames[static_cast<std::size_t>(id)];
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (std::size_t i = 0; i < kTheoremNames.size(); ++i) {
    if (kTheoremNames[i] == name) return static_cast<TheoremId>(i);
  }
  for (const auto& [alias, id] : kAliases) {
    if (alias == name) return id;
  }
  return std::nullopt;
}

void merge_into(VerificationReport& into, const VerificationReport& other) {
  into.instances_checked += other.instances_checked;
  into.counterexamples.insert(into.counterexamples.end(),
                              other.counterexamples.begin(),
                              other.counterexamples.end());
  into.elapsed += other.elapsed;
  into.params["merged"].push_back(other.params);
}

Json witness_to_json(const VertexSubset& s) {
  Json out = Json::object();
  out["first"] = bit_indices(s.first);
  out["second"] = bit_indices(s.second);
  return out;
}

VertexSubset witness_from_json(const Json& json) {
  return {bits_from(json.at("first")), bits_from(json.at("second"))};
}

Json to_json(const VerificationReport& report, bool include_timing) {
  Json out = Json::object();
  out["theorem_id"] = theorem_name(report.theorem);
  out["params"] = report.params;
  out["instances_checked"] = report.instances_checked;
  Json list = Json::array();
  for (const Counterexample& c : report.counterexamples) {
    Json item = Json::object();
    item["bbg"] = c.bbg;
    if (c.witness) item["witness"] = witness_to_json(*c.witness);
    item["detail"] = c.detail;
    item["instance"] = c.instance;
    item["claim"] = claim_to_json(c.claim);
    list.push_back(std::move(item));
  }
  out["counterexamples"] = std::move(list);
  if (include_timing) out["elapsed_ms"] = report.elapsed.count();
  out["verdict"] = report.passed() ? "pass" : "fail";
  return out;
}

VerificationReport report_from_json(const Json& json) {
  VerificationReport report;
  const std::string id = json.at("theorem_id").get<std::string>();
  const auto theorem = parse_theorem(id);
  if (!theorem) throw MalformedInput("unknown theorem id " + id);
  report.theorem = *theorem;
  report.params = json.value("params", Json::object());
  report.instances_checked = json.at("instances_checked").get<std::uint64_t>();
  for (const auto& item : json.at("counterexamples")) {
    Counterexample c;
    c.bbg = item.value("bbg", std::string{});
    if (item.contains("witness")) c.witness = witness_from_json(item["witness"]);
    c.detail = item.value("detail", std::string{});
    c.instance = item.value("instance", std::uint64_t{0});
    if (item.contains("claim")) c.claim = claim_from_json(item["claim"]);
    report.counterexamples.push_back(std::move(c));
  }
  report.elapsed = std::chrono::milliseconds(json.value("elapsed_ms", 0));
  return report;
}

}  // namespace bbforest
