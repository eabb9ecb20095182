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

#ifndef SCP_SOLVERS_H_
#define SCP_SOLVERS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "scp/instance.h"

namespace scp {

// Number of sets the big-step solver selects jointly per iteration.
class StepSize {
 public:
  // Throws std::invalid_argument if p == 0.
  explicit StepSize(std::size_t p);
  std::size_t value() const { return p_; }

 private:
  std::size_t p_;
};

struct SolveResult {
  CoverSolution cover;
  SolveTrace trace;
};

// Classical greedy: repeatedly take the unchosen set with the most uncovered
// elements, lowest index on ties. Throws UncoverableError on infeasible
// input.
SolveResult ClassicalGreedy(const Instance& instance);

// Big-step greedy. Each iteration scores every k-subset of the unchosen sets,
// k = min(p, #unchosen), by the number of uncovered elements in its union,
// and keeps the lexicographically smallest maximizer. If that subset covers
// everything still uncovered, it is first trimmed to its smallest
// sub-subset (lexicographic within a size) that does the same.
//
// One iteration scores exactly C(u, k) candidates, where u is the number of
// unchosen sets; each TraceStep records the count. With p = 1 the output is
// identical to ClassicalGreedy.
SolveResult BigStepGreedy(const Instance& instance, StepSize p);

struct ExactOptions {
  // Maximum number of search nodes before giving up.
  std::optional<std::uint64_t> node_budget;
  // Drop sets contained in another set before searching. Preserves the
  // optimal size, not necessarily the returned cover.
  bool eliminate_dominated = false;
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  explicit OracleBudgetExceeded(std::uint64_t budget);
};

// A minimum-cardinality cover, by iterative deepening on the cover size with
// a ceil(|uncovered| / max marginal gain) lower bound. Branches on the
// uncovered element contained in the fewest sets. Intended for m up to
// about 25. Throws UncoverableError on infeasible input and
// OracleBudgetExceeded if the node budget runs out.
CoverSolution ExactMinCover(const Instance& instance,
                            const ExactOptions& options = {});

}  // namespace scp

#endif  // SCP_SOLVERS_H_
