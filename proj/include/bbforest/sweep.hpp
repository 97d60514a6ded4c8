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

// Instance sweeps. `sweep_serial` is the reference loop; `sweep_parallel`
// fans the same checks over OpenMP threads and must return identical totals.

#ifndef BBFOREST_SWEEP_HPP_
#define BBFOREST_SWEEP_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "bbforest/report.hpp"

namespace bbforest {

struct InstanceOutcome {
  // False when the instance was skipped (e.g. fails the hypothesis filter).
  bool checked = false;
  std::vector<Counterexample> counterexamples;
};

// Must be safe to call concurrently for distinct indices. Exceptions are
// caught by the sweep and recorded as counterexamples of kind kError.
using InstanceCheck = std::function<InstanceOutcome(std::uint64_t index)>;

struct SweepTotals {
  std::uint64_t instances_checked = 0;
  // Ordered by instance index, then by emission order within an instance.
  std::vector<Counterexample> counterexamples;

  friend bool operator==(const SweepTotals& a, const SweepTotals& b);
};

SweepTotals sweep_serial(std::uint64_t count, const InstanceCheck& check);

SweepTotals sweep_parallel(std::uint64_t count, const InstanceCheck& check,
                           int jobs);

// jobs <= 1 runs the serial loop.
SweepTotals sweep(std::uint64_t count, const InstanceCheck& check, int jobs);

}  // namespace bbforest

#endif  // BBFOREST_SWEEP_HPP_
