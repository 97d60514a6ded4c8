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

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <string>
#include <utility>

#include "bbforest/bbg_format.hpp"
#include "bbforest/bounds.hpp"
#include "bbforest/errors.hpp"
#include "bbforest/generators.hpp"
#include "bbforest/sweep.hpp"

namespace bbforest {
namespace {

using Clock = std::chrono::steady_clock;

Counterexample make_counterexample(const BalancedBipartiteGraph& g,
                                   std::string detail, Claim claim) {
  Counterexample c;
  c.bbg = emit_bbg(g);
  c.detail = std::move(detail);
  c.claim = std::move(claim);
  return c;
}

Claim forest_number_claim(int expected) {
  Claim claim;
  claim.kind = Claim::Kind::kForestNumber;
  claim.expected = expected;
  return claim;
}

Claim min_degree_claim(Claim::Kind kind, int expected) {
  Claim claim;
  claim.kind = kind;
  claim.expected = expected;
  return claim;
}

// Solver witnesses are re-checked with the standalone forest test, not
// trusted from the search state.
void check_witness(const BalancedBipartiteGraph& g, const SolveResult& r,
                   InstanceOutcome& out) {
  if (!within_bounds(g, r.witness) || !is_induced_forest(g, r.witness) ||
      r.witness.size() != r.forest_number) {
    Claim claim;
    claim.kind = Claim::Kind::kWitness;
    claim.expected = r.forest_number;
    claim.lambda = r.witness.balance();
    auto c = make_counterexample(g, "solver witness is not a forest of size " +
                                        std::to_string(r.forest_number),
                                 claim);
    c.witness = r.witness;
    out.counterexamples.push_back(std::move(c));
  }
}

void check_forest_number(const BalancedBipartiteGraph& g, const SolveResult& r,
                         int expected, InstanceOutcome& out) {
  check_witness(g, r, out);
  if (r.forest_number != expected) {
    auto c = make_counterexample(
        g,
        "f = " + std::to_string(r.forest_number) + ", expected " +
            std::to_string(expected),
        forest_number_claim(expected));
    c.witness = r.witness;
    out.counterexamples.push_back(std::move(c));
  }
}

void check_min_degree_at_least(const BalancedBipartiteGraph& g, int floor,
                               InstanceOutcome& out) {
  if (g.min_degree() < floor) {
    out.counterexamples.push_back(make_counterexample(
        g,
        "min degree " + std::to_string(g.min_degree()) + " < " +
            std::to_string(floor),
        min_degree_claim(Claim::Kind::kMinDegreeAtLeast, floor)));
  }
}

void check_min_degree_equals(const BalancedBipartiteGraph& g, int value,
                             InstanceOutcome& out) {
  if (g.min_degree() != value) {
    out.counterexamples.push_back(make_counterexample(
        g,
        "min degree " + std::to_string(g.min_degree()) + " != " +
            std::to_string(value),
        min_degree_claim(Claim::Kind::kMinDegreeEquals, value)));
  }
}

void check_construction_witness(const BalancedBipartiteGraph& g,
                                const VertexSubset& s, int size, int lambda,
                                InstanceOutcome& out) {
  if (!is_induced_forest(g, s) || s.size() != size || s.balance() != lambda) {
    Claim claim;
    claim.kind = Claim::Kind::kWitness;
    claim.expected = size;
    claim.lambda = lambda;
    auto c = make_counterexample(
        g,
        "construction witness: forest=" +
            std::string(is_induced_forest(g, s) ? "yes" : "no") +
            " size=" + std::to_string(s.size()) +
            " lambda=" + std::to_string(s.balance()),
        claim);
    c.witness = s;
    out.counterexamples.push_back(std::move(c));
  }
}

// Brute force is an independent second opinion wherever it is cheap enough.
SolveResult solve_checked(const BalancedBipartiteGraph& g,
                          InstanceOutcome& out) {
  SolveResult r = max_forest(g);
  if (g.vertex_count() <= 20) {
    const SolveResult brute = max_forest_bruteforce(g);
    if (brute.forest_number != r.forest_number) {
      auto c = make_counterexample(
          g,
          "branch and bound f = " + std::to_string(r.forest_number) +
              " but brute force f = " + std::to_string(brute.forest_number),
          forest_number_claim(r.forest_number));
      c.witness = brute.witness;
      out.counterexamples.push_back(std::move(c));
    }
  }
  return r;
}

std::vector<int> allowed_lambdas(int n) {
  if (n % 2 == 1) return {1};
  std::vector<int> out = {1, 2, n / 2};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerificationReport finish(TheoremId theorem, Json params, SweepTotals totals,
                          Clock::time_point start) {
  VerificationReport report;
  report.theorem = theorem;
  report.params = std::move(params);
  report.instances_checked = totals.instances_checked;
  report.counterexamples = std::move(totals.counterexamples);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      Clock::now() - start);
  return report;
}

}  // namespace

StructureProfile profile_structure(const BalancedBipartiteGraph& g,
                                   const SolverConfig& config) {
  StructureProfile profile;
  const SolveResult solved = max_forest(g);
  profile.forest_number = solved.forest_number;
  try {
    profile.forests_enumerated = enumerate_max_forests(
        g, solved.forest_number, 0,
        [&profile](const VertexSubset& s) {
          const int lambda = s.balance();
          if (profile.lambdas.insert(lambda).second) {
            profile.witness_per_lambda.emplace(lambda, s);
          }
        },
        config);
    profile.exhaustive = true;
  } catch (const BudgetExceeded&) {
    profile.lambdas = {solved.witness.balance()};
    profile.witness_per_lambda = {{solved.witness.balance(), solved.witness}};
    profile.exhaustive = false;
  }
  return profile;
}

VerificationReport verify_t1_exhaustive(int n, int jobs, bool allow_n5) {
  if (n < 2 || n > 5 || (n == 5 && !allow_n5)) {
    throw ParameterError("exhaustive sweep supports n in {2,3,4} (5 with opt-in)");
  }
  const auto start = Clock::now();
  const int threshold = degree_threshold(n);
  const int cells = n * n;
  const std::uint64_t count = std::uint64_t{1} << cells;
  const Row row_mask = low_bits(n);

  auto check = [=](std::uint64_t index) {
    InstanceOutcome out;
    std::vector<Row> rows(n);
    std::array<int, 8> column_degree{};
    for (int i = 0; i < n; ++i) {
      rows[i] = (index >> (i * n)) & row_mask;
      if (std::popcount(rows[i]) < threshold) return out;
      for (Row bits = rows[i]; bits != 0; bits &= bits - 1) {
        ++column_degree[std::countr_zero(bits)];
      }
    }
    for (int j = 0; j < n; ++j) {
      if (column_degree[j] < threshold) return out;
    }
    out.checked = true;
    const auto g = BalancedBipartiteGraph::from_rows(n, std::move(rows));
    check_forest_number(g, max_forest_bruteforce(g), n + 1, out);
    return out;
  };

  Json params = Json::object();
  params["n"] = n;
  params["mode"] = "exhaustive";
  params["matrices_scanned"] = count;
  params["degree_threshold"] = threshold;
  return finish(TheoremId::kT1, std::move(params), sweep(count, check, jobs),
                start);
}

VerificationReport verify_t1_random(int n, int samples, std::uint64_t seed,
                                    int jobs) {
  if (n < 2 || n > kMaxPartSize) throw ParameterError("T1 sweep: need 2 <= n <= 64");
  if (samples < 0) throw ParameterError("samples must be non-negative");
  const auto start = Clock::now();
  const int threshold = degree_threshold(n);

  auto check = [=](std::uint64_t index) {
    InstanceOutcome out;
    out.checked = true;
    const auto g = random_min_degree(n, threshold, seed + index);
    check_min_degree_at_least(g, threshold, out);
    check_forest_number(g, max_forest(g), n + 1, out);
    return out;
  };

  Json params = Json::object();
  params["n"] = n;
  params["mode"] = "random";
  params["samples"] = samples;
  params["seed"] = seed;
  params["degree_threshold"] = threshold;
  params["generator"] = "random_min_degree";
  return finish(TheoremId::kT1, std::move(params),
                sweep(static_cast<std::uint64_t>(samples), check, jobs), start);
}

VerificationReport verify_structure(int n, int samples, std::uint64_t seed,
                                    int jobs, TheoremId theorem,
                                    const SolverConfig& config) {
  if (n < 2 || n > 12) throw ParameterError("structure sweep: need 2 <= n <= 12");
  if (samples < 0) throw ParameterError("samples must be non-negative");
  const auto start = Clock::now();
  const int threshold = degree_threshold(n);
  const std::vector<int> allowed = allowed_lambdas(n);

  auto check = [=](std::uint64_t index) {
    InstanceOutcome out;
    out.checked = true;
    const auto g = random_min_degree(n, threshold, seed + index);
    check_min_degree_at_least(g, threshold, out);
    const StructureProfile profile = profile_structure(g, config);
    if (!profile.exhaustive) {
      Claim claim;
      claim.kind = Claim::Kind::kError;
      out.counterexamples.push_back(make_counterexample(
          g, "enumeration budget exceeded, profile incomplete", claim));
    }
    if (profile.forest_number != n + 1) {
      out.counterexamples.push_back(make_counterexample(
          g,
          "f = " + std::to_string(profile.forest_number) + ", expected " +
              std::to_string(n + 1),
          forest_number_claim(n + 1)));
    }
    for (const auto& [lambda, witness] : profile.witness_per_lambda) {
      if (std::find(allowed.begin(), allowed.end(), lambda) != allowed.end()) {
        continue;
      }
      Claim claim;
      claim.kind = Claim::Kind::kStructure;
      claim.expected = profile.forest_number;
      claim.allowed = allowed;
      std::string detail = "maximum forest with lambda = " + std::to_string(lambda);
      if (n % 2 == 1 && lambda == 2) detail += " although n is odd";
      auto c = make_counterexample(g, detail, claim);
      c.witness = witness;
      out.counterexamples.push_back(std::move(c));
    }
    // For odd n the maximum forests are exactly one part plus one vertex.
    if (n % 2 == 1 && profile.exhaustive &&
        profile.forests_enumerated != static_cast<std::uint64_t>(2 * n)) {
      Claim claim;
      claim.kind = Claim::Kind::kForestCount;
      claim.expected = 2 * n;
      out.counterexamples.push_back(make_counterexample(
          g,
          std::to_string(profile.forests_enumerated) +
              " maximum forests, expected exactly " + std::to_string(2 * n),
          claim));
    }
    return out;
  };

  Json params = Json::object();
  params["n"] = n;
  params["samples"] = samples;
  params["seed"] = seed;
  params["degree_threshold"] = threshold;
  params["allowed_lambdas"] = allowed;
  params["enumeration_budget"] = config.enumeration_budget;
  return finish(theorem, std::move(params),
                sweep(static_cast<std::uint64_t>(samples), check, jobs), start);
}

std::vector<ConstructionParams> default_construction_params(TheoremId theorem) {
  std::vector<ConstructionParams> out;
  switch (theorem) {
    case TheoremId::kP1:
    case TheoremId::kT6Lambda1:
      for (int n = 2; n <= 10; ++n) out.push_back({n, 0});
      break;
    case TheoremId::kT6Lambda2:
    case TheoremId::kT6LambdaHalf:
      for (int n = 4; n <= 10; n += 2) out.push_back({n, 0});
      break;
    case TheoremId::kT7L1:
      out = {{3, 2}, {5, 2}, {5, 3}, {5, 4}, {7, 3}};
      break;
    case TheoremId::kT7L2:
      out = {{6, 2}, {6, 3}, {8, 3}};
      break;
    default:
      throw ParameterError("no construction for theorem " +
                           std::string(theorem_name(theorem)));
  }
  return out;
}

VerificationReport verify_constructions(
    TheoremId theorem, std::span<const ConstructionParams> params, int jobs) {
  // Validates the theorem id up front.
  default_construction_params(theorem);
  const auto start = Clock::now();
  const std::vector<ConstructionParams> list(params.begin(), params.end());

  auto check = [theorem, &list](std::uint64_t index) {
    InstanceOutcome out;
    out.checked = true;
    const auto [n, k] = list[index];
    switch (theorem) {
      case TheoremId::kP1: {
        const auto g = prop1_construction(n);
        check_min_degree_equals(g, (n + 1) / 2, out);
        check_construction_witness(g, {0b11, low_bits(n)}, n + 2,
                                   std::min(2, n), out);
        check_forest_number(g, solve_checked(g, out), n + 2, out);
        break;
      }
      case TheoremId::kT6Lambda1: {
        if (n < 2) throw ParameterError("λ = 1 construction needs n >= 2");
        const auto g = complete_balanced(n);
        check_min_degree_at_least(g, degree_threshold(n), out);
        check_construction_witness(g, {low_bits(n), Row{1}}, n + 1, 1, out);
        check_forest_number(g, solve_checked(g, out), n + 1, out);
        break;
      }
      case TheoremId::kT6Lambda2:
      case TheoremId::kT6LambdaHalf: {
        const bool two = theorem == TheoremId::kT6Lambda2;
        const WitnessedGraph w = two ? thm3_lambda2(n) : thm3_lambda_half(n);
        check_min_degree_at_least(w.graph, n / 2 + 1, out);
        check_construction_witness(w.graph, w.witness, n + 1, two ? 2 : n / 2,
                                   out);
        check_forest_number(w.graph, solve_checked(w.graph, out), n + 1, out);
        break;
      }
      case TheoremId::kT7L1: {
        const auto g = thh1_l1(n, k);
        check_min_degree_equals(g, k, out);
        check_forest_number(g, solve_checked(g, out), g.vertex_count() / 2 + 1,
                            out);
        break;
      }
      case TheoremId::kT7L2: {
        const auto g = thh1_l2(n, k);
        check_min_degree_equals(g, k, out);
        const VertexSubset s = thh1_l2_witness(n);
        check_construction_witness(g, s, n + 3, s.balance(), out);
        check_forest_number(g, solve_checked(g, out), g.vertex_count() / 2 + 2,
                            out);
        break;
      }
      default:
        break;
    }
    return out;
  };

  Json params_json = Json::object();
  Json cases = Json::array();
  for (const auto& p : list) {
    Json item = Json::object();
    item["n"] = p.n;
    if (p.k != 0) item["k"] = p.k;
    cases.push_back(std::move(item));
  }
  params_json["cases"] = std::move(cases);
  return finish(theorem, std::move(params_json),
                sweep(list.size(), check, jobs), start);
}

VerificationReport verify_t8(std::span<const int> ns, int samples,
                             std::uint64_t seed, int jobs) {
  for (int n : ns) {
    if (n < 3 || n > 15 || n % 2 == 0) {
      throw ParameterError("T8 sweep: each n must be odd, 3 <= n <= 15");
    }
  }
  if (samples < 0) throw ParameterError("samples must be non-negative");
  const auto start = Clock::now();
  const std::vector<int> list(ns.begin(), ns.end());
  const auto per_n = static_cast<std::uint64_t>(samples);

  auto check = [&list, per_n, seed](std::uint64_t index) {
    InstanceOutcome out;
    out.checked = true;
    const int n = list[index / per_n];
    const auto g = random_th7(n, seed + index % per_n);
    const int floor_degree = (n + 1) / 2;
    check_min_degree_at_least(g, floor_degree, out);
    check_forest_number(g, max_forest(g), n + 1, out);
    return out;
  };

  Json params = Json::object();
  params["n"] = list;
  params["samples"] = samples;
  params["seed"] = seed;
  params["generator"] = "random_th7";
  return finish(TheoremId::kT8, std::move(params),
                sweep(per_n * list.size(), check, jobs), start);
}

bool replay(const Counterexample& c) {
  const Claim& claim = c.claim;
  if (claim.kind == Claim::Kind::kBound) {
    const Rational n(claim.n);
    const Rational k(claim.k);
    Rational value;
    if (claim.function == "g") {
      value = bound_g(n, k);
    } else if (claim.function == "h") {
      value = bound_h(n, k);
    } else if (claim.function == "t8") {
      value = bound_t8(n, k);
    } else {
      throw MalformedInput("unknown bound function " + claim.function);
    }
    return value < Rational(claim.expected);
  }
  // Errors carry no checkable claim; they stay failures until rerun.
  if (claim.kind == Claim::Kind::kError) return true;

  const BalancedBipartiteGraph g = parse_bbg(c.bbg);
  switch (claim.kind) {
    case Claim::Kind::kForestNumber:
      return max_forest(g).forest_number != claim.expected;
    case Claim::Kind::kMinDegreeAtLeast:
      return g.min_degree() < claim.expected;
    case Claim::Kind::kMinDegreeEquals:
      return g.min_degree() != claim.expected;
    case Claim::Kind::kWitness: {
      if (!c.witness) return true;
      const VertexSubset& s = *c.witness;
      return !within_bounds(g, s) || !is_induced_forest(g, s) ||
             s.size() != claim.expected || s.balance() != claim.lambda;
    }
    case Claim::Kind::kStructure: {
      if (!c.witness) return false;
      const VertexSubset& s = *c.witness;
      const bool maximum = within_bounds(g, s) && is_induced_forest(g, s) &&
                           s.size() == max_forest(g).forest_number;
      const bool allowed =
          std::find(claim.allowed.begin(), claim.allowed.end(), s.balance()) !=
          claim.allowed.end();
      return maximum && !allowed;
    }
    case Claim::Kind::kForestCount: {
      const int f = max_forest(g).forest_number;
      const auto count = enumerate_max_forests(
          g, f, 0, [](const VertexSubset&) {});
      return count != static_cast<std::uint64_t>(claim.expected);
    }
    default:
      return true;
  }
}

}  // namespace bbforest
