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


#include "bbforest/cli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bbforest/bbg_format.hpp"
#include "bbforest/bounds.hpp"
#include "bbforest/errors.hpp"
#include "bbforest/generators.hpp"
#include "bbforest/report.hpp"
#include "bbforest/solver.hpp"
#include "bbforest/theorems.hpp"

namespace bbforest::cli {
namespace {

struct Options {
  std::string input_path;
  std::string format;
  bool brute = false;
  int brute_cap = SolverConfig{}.brute_force_max_vertices;
  bool no_timing = false;
  std::uint64_t budget = SolverConfig{}.enumeration_budget;

  std::string family;
  std::string theorem;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> delta_min;
  std::uint64_t seed = 1;
  int samples = 25;
  bool exhaustive = false;
  bool allow_n5 = false;
  int jobs = 1;
  int n_max = 1000;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string join_indices(Row bits) {
  std::string s;
  for (; bits != 0; bits &= bits - 1) {
    if (!s.empty()) s += ' ';
    s += std::to_string(std::countr_zero(bits));
  }
  return s;
}

std::string witness_text(const VertexSubset& s) {
  return "first: " + join_indices(s.first) + " | second: " + join_indices(s.second);
}

void print_json(const Json& json, std::ostream& out) { out << json.dump(2) << '\n'; }

int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = parse_bbg(read_input(o.input_path, in));
  SolverConfig config;
  config.brute_force_max_vertices = o.brute_cap;
  const SolveResult r = o.brute ? max_forest_bruteforce(g, config) : max_forest(g);
  if (o.format == "json") {
    Json json = Json::object();
    json["n"] = g.n();
    json["forest_number"] = r.forest_number;
    json["decycling_number"] = r.decycling_number;
    json["witness"] = witness_to_json(r.witness);
    json["solver"] = o.brute ? "brute_force" : "branch_and_bound";
    json["nodes_explored"] = r.nodes_explored;
    if (!o.no_timing) {
      json["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(r.elapsed).count();
    }
    print_json(json, out);
  } else {
    out << "forest_number " << r.forest_number << '\n'
        << "decycling_number " << r.decycling_number << '\n'
        << "witness " << witness_text(r.witness) << '\n';
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto family = parse_family(o.family);
  if (!family) throw UsageError("unknown family " + o.family);
  GeneratorSpec spec;
  spec.family = *family;
  spec.n = *o.n;
  spec.k = o.k;
  spec.delta_min = o.delta_min;
  spec.seed = o.seed;
  out << emit_bbg(generate(spec));
  return kExitOk;
}

int cmd_profile(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = parse_bbg(read_input(o.input_path, in));
  SolverConfig config;
  config.enumeration_budget = o.budget;
  const StructureProfile p = profile_structure(g, config);
  if (o.format == "json") {
    Json json = Json::object();
    json["n"] = g.n();
    json["forest_number"] = p.forest_number;
    json["lambdas"] = p.lambdas;
    Json witnesses = Json::object();
    for (const auto& [lambda, s] : p.witness_per_lambda) {
      witnesses[std::to_string(lambda)] = witness_to_json(s);
    }
    json["witness_per_lambda"] = std::move(witnesses);
    json["exhaustive"] = p.exhaustive;
    json["forests_enumerated"] = p.forests_enumerated;
    print_json(json, out);
  } else {
    out << "forest_number " << p.forest_number << '\n';
    for (const auto& [lambda, s] : p.witness_per_lambda) {
      out << "lambda " << lambda << ' ' << witness_text(s) << '\n';
    }
    out << (p.exhaustive ? "exhaustive " : "incomplete ") << p.forests_enumerated
        << " maximum forests\n";
  }
  return kExitOk;
}

int emit_report(const VerificationReport& report, const Options& o,
                std::ostream& out) {
  if (o.format == "text") {
    out << theorem_name(report.theorem) << ": "
        << (report.passed() ? "pass" : "fail") << ", "
        << report.instances_checked << " checked, "
        << report.counterexamples.size() << " counterexamples\n";
    for (const Counterexample& c : report.counterexamples) {
      out << "  instance " << c.instance << ": " << c.detail << '\n';
    }
  } else {
    print_json(to_json(report, !o.no_timing), out);
  }
  return report.passed() ? kExitOk : kExitFailed;
}

VerificationReport run_verify(const Options& o) {
  const auto theorem = parse_theorem(o.theorem);
  if (!theorem) throw UsageError("unknown theorem id " + o.theorem);
  switch (*theorem) {
    case TheoremId::kT1: {
      const int n = o.n.value_or(4);
      return o.exhaustive ? verify_t1_exhaustive(n, o.jobs, o.allow_n5)
                          : verify_t1_random(n, o.samples, o.seed, o.jobs);
    }
    case TheoremId::kT2:
    case TheoremId::kT4:
    case TheoremId::kC1: {
      SolverConfig config;
      config.enumeration_budget = o.budget;
      return verify_structure(o.n.value_or(6), o.samples, o.seed, o.jobs,
                              *theorem, config);
    }
    case TheoremId::kT8: {
      std::vector<int> ns = {5, 7, 9};
      if (o.n) ns = {*o.n};
      return verify_t8(ns, o.samples, o.seed, o.jobs);
    }
    case TheoremId::kBounds:
      return check_bounds(o.n.value_or(o.n_max));
    default: {
      std::vector<ConstructionParams> params =
          default_construction_params(*theorem);
      if (o.n) {
        params = {{*o.n, o.k.value_or(0)}};
      } else if (o.k) {
        throw UsageError("--k needs --n");
      }
      return verify_constructions(*theorem, params, o.jobs);
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Exact maximum induced forests in balanced bipartite graphs",
               "bbforest");
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json"});

  auto* solve = app.add_subcommand("solve", "maximum induced forest of a BBG graph");
  solve->add_option("--in", o.input_path, "BBG file (stdin when absent or -)");
  solve->add_flag("--brute", o.brute, "use the brute-force oracle");
  solve->add_option("--brute-cap", o.brute_cap, "brute-force vertex cap")
      ->check(CLI::Range(1, 62));
  solve->add_option("--format", o.format)->check(formats)->default_str("text");
  solve->add_flag("--no-timing", o.no_timing, "omit elapsed_ms");

  auto* gen = app.add_subcommand("gen", "emit a generated graph as BBG");
  gen->add_option("--family", o.family, "family name")->required();
  gen->add_option("--n", o.n, "part size")->required();
  gen->add_option("--k", o.k, "family parameter k");
  gen->add_option("--delta-min", o.delta_min, "minimum degree (random_min_degree)");
  gen->add_option("--seed", o.seed, "random seed");

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("--theorem", o.theorem, "theorem id")->required();
  verify->add_option("--n", o.n, "part size (n_max for BOUNDS)");
  verify->add_option("--k", o.k, "construction parameter k");
  verify->add_option("--samples", o.samples, "random samples per n")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "base seed");
  verify->add_flag("--exhaustive", o.exhaustive, "enumerate every matrix (T1)");
  verify->add_flag("--allow-n5", o.allow_n5, "permit the 2^25 exhaustive sweep");
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", o.no_timing, "omit elapsed_ms");
  verify->add_option("--budget", o.budget, "enumeration budget");
  verify->add_option("--format", o.format)->check(formats)->default_str("json");

  auto* profile = app.add_subcommand("profile", "λ values over all maximum forests");
  profile->add_option("--in", o.input_path, "BBG file (stdin when absent or -)");
  profile->add_option("--budget", o.budget, "enumeration budget");
  profile->add_option("--format", o.format)->check(formats)->default_str("json");

  auto* bounds = app.add_subcommand("bounds", "check the degree-counting bounds");
  bounds->add_option("--n-max", o.n_max, "largest n")->check(CLI::Range(2, 1000000));
  bounds->add_flag("--no-timing", o.no_timing, "omit elapsed_ms");
  bounds->add_option("--format", o.format)->check(formats)->default_str("json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*solve) {
      if (o.format.empty()) o.format = "text";
      return cmd_solve(o, in, out);
    }
    if (*gen) return cmd_gen(o, out);
    if (*profile) {
      if (o.format.empty()) o.format = "json";
      return cmd_profile(o, in, out);
    }
    if (o.format.empty()) o.format = "json";
    if (*bounds) return emit_report(check_bounds(o.n_max), o, out);
    return emit_report(run_verify(o), o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace bbforest::cli
