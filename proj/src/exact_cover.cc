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

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "scp/solvers.h"

namespace scp {
namespace {

std::size_t CeilDiv(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

class DepthLimitedSearch {
 public:
  DepthLimitedSearch(const Instance& instance, std::vector<std::size_t> active,
                     std::optional<std::uint64_t> budget)
      : instance_(instance),
        active_(std::move(active)),
        budget_(budget),
        containing_(instance.universe_size()) {
    for (const std::size_t s : active_) {
      for (const std::size_t e : instance_.set(s).elements()) {
        containing_[e].push_back(s);
      }
    }
  }

  // Searches for a cover of at most `limit` sets.
  bool Run(std::size_t limit) {
    chosen_.clear();
    ElementSet uncovered = ElementSet::Full(instance_.universe_size());
    return Visit(uncovered, limit);
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  bool Visit(const ElementSet& uncovered, std::size_t depth_left) {
    ++nodes_;
    if (budget_.has_value() && nodes_ > *budget_) {
      throw OracleBudgetExceeded(*budget_);
    }
    const std::size_t remaining = uncovered.count();
    if (remaining == 0) return true;
    if (depth_left == 0) return false;

    std::size_t max_gain = 0;
    for (const std::size_t s : active_) {
      max_gain = std::max(max_gain, IntersectionCount(instance_.set(s), uncovered));
    }
    if (max_gain == 0 || CeilDiv(remaining, max_gain) > depth_left) {
      return false;
    }

    // Some set containing the rarest uncovered element must be in the cover.
    std::size_t pivot = 0;
    std::size_t pivot_degree = static_cast<std::size_t>(-1);
    for (const std::size_t e : uncovered.elements()) {
      if (containing_[e].size() < pivot_degree) {
        pivot = e;
        pivot_degree = containing_[e].size();
      }
    }
    for (const std::size_t s : containing_[pivot]) {
      chosen_.push_back(s);
      if (Visit(uncovered - instance_.set(s), depth_left - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Instance& instance_;
  std::vector<std::size_t> active_;
  std::optional<std::uint64_t> budget_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
};

std::vector<std::size_t> UndominatedSets(const Instance& instance) {
  const std::size_t m = instance.set_count();
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < m; ++j) {
    bool dominated = false;
    for (std::size_t i = 0; i < m && !dominated; ++i) {
      if (i == j) continue;
      const ElementSet& a = instance.set(i);
      const ElementSet& b = instance.set(j);
      // Equal sets: keep the lower index only.
      if (b.is_subset_of(a) && (b != a || i < j)) dominated = true;
    }
    if (!dominated) kept.push_back(j);
  }
  return kept;
}

}  // namespace

OracleBudgetExceeded::OracleBudgetExceeded(std::uint64_t budget)
    : std::runtime_error("oracle budget exceeded (" + std::to_string(budget) +
                         " nodes)") {}

CoverSolution ExactMinCover(const Instance& instance,
                            const ExactOptions& options) {
  // Also rejects infeasible input.
  const SolveResult greedy = ClassicalGreedy(instance);

  std::vector<std::size_t> active;
  if (options.eliminate_dominated) {
    active = UndominatedSets(instance);
  } else {
    for (std::size_t i = 0; i < instance.set_count(); ++i) active.push_back(i);
  }

  std::size_t largest = 0;
  for (const std::size_t s : active) {
    largest = std::max(largest, instance.set(s).count());
  }
  const std::size_t lower = CeilDiv(instance.universe_size(), largest);
  const std::size_t upper = greedy.cover.size();

  DepthLimitedSearch search(instance, std::move(active), options.node_budget);
  for (std::size_t limit = lower; limit < upper; ++limit) {
    if (search.Run(limit)) return MakeCover(instance, search.chosen());
  }
  return greedy.cover;
}

}  // namespace scp
