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

#ifndef SCP_INSTANCE_H_
#define SCP_INSTANCE_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "scp/element_set.h"

namespace scp {

// A unicost set-cover instance: a universe {0, ..., n-1} and an ordered
// collection of m >= 1 subsets. Set i is always the i-th subset given at
// construction. Duplicate and empty subsets are allowed.
class Instance {
 public:
  // Throws std::invalid_argument if n == 0, sets is empty, or any set has a
  // width other than n.
  Instance(std::size_t n, std::vector<ElementSet> sets);

  std::size_t universe_size() const { return n_; }
  std::size_t set_count() const { return sets_.size(); }
  const ElementSet& set(std::size_t i) const { return sets_.at(i); }
  std::span<const ElementSet> sets() const { return sets_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t n_;
  std::vector<ElementSet> sets_;
};

// Selected set indices in selection order, plus the union they cover.
struct CoverSolution {
  std::vector<std::size_t> chosen;
  ElementSet covered;

  std::size_t size() const { return chosen.size(); }
};

struct TraceStep {
  // Indices added in this step, ascending.
  std::vector<std::size_t> chosen;
  std::size_t newly_covered = 0;
  // Number of candidate subsets scored while choosing this step.
  std::size_t candidates_evaluated = 0;
};

struct SolveTrace {
  std::vector<TraceStep> steps;
};

// Raised when some element of the universe belongs to no available set.
class UncoverableError : public std::runtime_error {
 public:
  UncoverableError(std::size_t element, std::size_t uncovered_count);
  std::size_t element() const { return element_; }

 private:
  std::size_t element_;
};

// True iff the union of all sets is the full universe.
bool IsFeasible(const Instance& instance);

// Union of the given sets. Throws std::invalid_argument for an out-of-range
// or repeated index.
CoverSolution MakeCover(const Instance& instance,
                        std::span<const std::size_t> chosen);

// True iff the chosen sets cover the universe. Out-of-range indices throw
// std::invalid_argument rather than returning false.
bool ValidateCover(const Instance& instance, const CoverSolution& cover);
bool ValidateCover(const Instance& instance,
                   std::span<const std::size_t> chosen);

}  // namespace scp

#endif  // SCP_INSTANCE_H_
