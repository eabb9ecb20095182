// Copyright 2026 The scp-bigstep Authors
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

#include <vector>

#include "scp/solvers.h"

namespace scp {

StepSize::StepSize(std::size_t p) : p_(p) {
  if (p == 0) throw std::invalid_argument("step size p must be >= 1");
}

SolveResult ClassicalGreedy(const Instance& instance) {
  const std::size_t m = instance.set_count();
  ElementSet uncovered = ElementSet::Full(instance.universe_size());
  std::vector<bool> taken(m, false);
  SolveResult result{{{}, ElementSet(instance.universe_size())}, {}};

  std::size_t remaining = uncovered.count();
  while (remaining > 0) {
    std::size_t best = m;
    std::size_t best_gain = 0;
    std::size_t evaluated = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (taken[i]) continue;
      ++evaluated;
      const std::size_t gain = IntersectionCount(instance.set(i), uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best_gain == 0) throw UncoverableError(*uncovered.first(), remaining);

    taken[best] = true;
    uncovered -= instance.set(best);
    remaining -= best_gain;
    result.cover.chosen.push_back(best);
    result.cover.covered |= instance.set(best);
    result.trace.steps.push_back({{best}, best_gain, evaluated});
  }
  return result;
}

}  // namespace scp
