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

#include "bbforest/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <utility>

namespace bbforest {
namespace {

InstanceOutcome guarded(const InstanceCheck& check, std::uint64_t index) {
  try {
    return check(index);
  } catch (const std::exception& e) {
    InstanceOutcome out;
    out.checked = true;
    Counterexample c;
    c.instance = index;
    c.detail = std::string("error: ") + e.what();
    c.claim.kind = Claim::Kind::kError;
    out.counterexamples.push_back(std::move(c));
    return out;
  }
}

bool same_counterexample(const Counterexample& a, const Counterexample& b) {
  return a.instance == b.instance && a.bbg == b.bbg && a.witness == b.witness &&
         a.detail == b.detail;
}

}  // namespace

bool operator==(const SweepTotals& a, const SweepTotals& b) {
  return a.instances_checked == b.instances_checked &&
         std::equal(a.counterexamples.begin(), a.counterexamples.end(),
                    b.counterexamples.begin(), b.counterexamples.end(),
                    same_counterexample);
}

SweepTotals sweep_serial(std::uint64_t count, const InstanceCheck& check) {
  SweepTotals totals;
  for (std::uint64_t i = 0; i < count; ++i) {
    InstanceOutcome out = guarded(check, i);
    if (out.checked) ++totals.instances_checked;
    for (Counterexample& c : out.counterexamples) {
      c.instance = i;
      totals.counterexamples.push_back(std::move(c));
    }
  }
  return totals;
}

SweepTotals sweep_parallel(std::uint64_t count, const InstanceCheck& check,
                           int jobs) {
  const int threads = std::max(jobs, 1);
  std::vector<SweepTotals> partial(threads);
  const auto signed_count = static_cast<std::int64_t>(count);

#pragma omp parallel num_threads(threads)
  {
    SweepTotals& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < signed_count; ++i) {
      const auto index = static_cast<std::uint64_t>(i);
      InstanceOutcome out = guarded(check, index);
      if (out.checked) ++mine.instances_checked;
      for (Counterexample& c : out.counterexamples) {
        c.instance = index;
        mine.counterexamples.push_back(std::move(c));
      }
    }
  }

  SweepTotals totals;
  for (SweepTotals& p : partial) {
    totals.instances_checked += p.instances_checked;
    for (Counterexample& c : p.counterexamples) {
      totals.counterexamples.push_back(std::move(c));
    }
  }
  // Within one instance the emission order is already fixed; stable_sort
  // keeps it.
  std::stable_sort(totals.counterexamples.begin(), totals.counterexamples.end(),
                   [](const Counterexample& a, const Counterexample& b) {
                     return a.instance < b.instance;
                   });
  return totals;
}

SweepTotals sweep(std::uint64_t count, const InstanceCheck& check, int jobs) {
  return jobs <= 1 ? sweep_serial(count, check)
                   : sweep_parallel(count, check, jobs);
}

}  // namespace bbforest
