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

#include "bbforest/bounds.hpp"

#include <chrono>

#include "bbforest/errors.hpp"

namespace bbforest {

Rational bound_g(const Rational& n, const Rational& k) {
  return k * (n / 2 + 3 - k);
}

Rational bound_h(const Rational& n, const Rational& k) {
  return k * (n / 2 + 2 - k);
}

Rational bound_t8(const Rational& n, const Rational& k) {
  const Rational floor_degree = (n + 1) / 2;
  return floor_degree + 2 - k + (k - 1) * (floor_degree + 3 - k);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

VerificationReport check_bounds(int n_max) {
  if (n_max < 2) throw ParameterError("check_bounds: n_max must be >= 2");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem = TheoremId::kBounds;

  std::uint64_t g_checks = 0;
  std::uint64_t h_checks = 0;
  std::uint64_t t8_checks = 0;
  std::uint64_t h_k2_below = 0;

  auto record = [&](const char* function, int n, int k, const Rational& value,
                    int claim) {
    Counterexample c;
    c.instance = report.counterexamples.size();
    c.detail = std::string(function) + "(n=" + std::to_string(n) +
               ", k=" + std::to_string(k) + ") = " + to_string(value) + " < " +
               std::to_string(claim);
    c.claim.kind = Claim::Kind::kBound;
    c.claim.function = function;
    c.claim.n = n;
    c.claim.k = k;
    c.claim.expected = claim;
    report.counterexamples.push_back(std::move(c));
  };

  for (int n = 2; n <= n_max; ++n) {
    const Rational rn(n);
    for (int k = 2; k <= (n + 2) / 2; ++k) {
      ++g_checks;
      const Rational value = bound_g(rn, Rational(k));
      if (value < Rational(n + 2)) record("g", n, k, value, n + 2);
    }
    for (int k = 3; k <= (n - 1) / 2; ++k) {
      ++h_checks;
      const Rational value = bound_h(rn, Rational(k));
      if (value < Rational(n + 1)) record("h", n, k, value, n + 1);
    }
    if (bound_h(rn, Rational(2)) < Rational(n + 1)) ++h_k2_below;
    if (n % 2 == 1) {
      for (int k = 2; k <= (n + 1) / 2; ++k) {
        ++t8_checks;
        const Rational value = bound_t8(rn, Rational(k));
        if (value < Rational(n + 2)) record("t8", n, k, value, n + 2);
      }
    }
  }

  report.instances_checked = g_checks + h_checks + t8_checks;
  report.params["n_max"] = n_max;
  report.params["g_checks"] = g_checks;
  report.params["h_checks"] = h_checks;
  report.params["t8_checks"] = t8_checks;
  report.params["h_k2_below_claim"] = h_k2_below;
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace bbforest
