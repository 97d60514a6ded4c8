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

// Degree-counting lower bounds on the number of edges inside a vertex subset
// S with |S ∩ V2| = k. All arithmetic is exact.

#ifndef BBFOREST_BOUNDS_HPP_
#define BBFOREST_BOUNDS_HPP_

#include <string>

#include <boost/rational.hpp>

#include "bbforest/report.hpp"

namespace bbforest {

using Rational = boost::rational<long long>;

// k (n/2 + 3 - k): edge count forced in an (n+2)-subset when δ >= n/2 + 1.
Rational bound_g(const Rational& n, const Rational& k);

// k (n/2 + 2 - k): edge count forced in an (n+1)-subset when δ >= n/2 + 1.
Rational bound_h(const Rational& n, const Rational& k);

// (n+1)/2 + 2 - k + (k - 1)((n+1)/2 + 3 - k): edge count forced in an
// (n+2)-subset when δ >= (n+1)/2 with at most one floor-degree vertex per part.
Rational bound_t8(const Rational& n, const Rational& k);

std::string to_string(const Rational& r);

// For every n in 2..n_max and integer k:
//   g(n, k) >= n + 2   for k in [2, ⌊(n+2)/2⌋]
//   h(n, k) >= n + 1   for k in [3, ⌊(n-1)/2⌋]
//   t8(n, k) >= n + 2  for odd n, k in [2, (n+1)/2]
// Violations become counterexamples. h at k = 2 is evaluated as well and
// tallied in params only; it never affects the verdict.
VerificationReport check_bounds(int n_max);

}  // namespace bbforest

#endif  // BBFOREST_BOUNDS_HPP_
