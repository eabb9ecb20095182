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

#ifndef SCP_BENCH_H_
#define SCP_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scp/generator.h"
#include "scp/instance.h"
#include "scp/solvers.h"

namespace scp {

enum class Verdict { kBigStepBetter, kGreedyBetter, kEqual };

// Compares cover sizes of big-step greedy and classical greedy on one
// instance. Solver errors propagate.
Verdict CompareOne(const Instance& instance, StepSize p);

struct ComparisonRow {
  std::size_t m = 0;
  double q = 0.0;
  std::size_t p = 2;
  std::uint64_t count = 0;
  std::uint64_t bigstep_better = 0;
  std::uint64_t greedy_better = 0;
  std::uint64_t equal = 0;
  // Raw draws with no cover (keep-raw policy only); also tallied as equal.
  std::uint64_t infeasible = 0;

  void Add(const ComparisonRow& other);
  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct CampaignSpec {
  std::size_t n = 100;
  double q = 0.3;
  std::vector<std::size_t> m_values;
  std::size_t p = 2;
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
  FeasibilityPolicy policy = FeasibilityPolicy::kRejectResample;
  // Number of worker threads; does not affect results.
  std::size_t workers = 1;

  // Throws std::invalid_argument on an empty m list, p == 0 or invalid
  // generator parameters.
  void Validate() const;
};

// Called with (row index, instances completed, row total). Within a row the
// completed count only grows.
using ProgressSink =
    std::function<void(std::size_t row, std::uint64_t done, std::uint64_t total)>;

class CampaignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// For each m, compares the solvers on generated instances 0..count-1 of
// (n, m, q, seed). Under keep-raw, infeasible draws count as equal.
// Results do not depend on `workers`. Generator failures are rethrown as
// CampaignError naming (q, m).
std::vector<ComparisonRow> RunCampaign(const CampaignSpec& spec,
                                       const ProgressSink& progress = {});

enum class TableFormat { kMarkdown, kCsv };

TableFormat ParseTableFormat(std::string_view text);

// Columns m, count, bigstep_better, greedy_better, equal, one row per
// entry in input order. Throws std::invalid_argument if rows mix q or p.
std::string EmitTable(const std::vector<ComparisonRow>& rows,
                      TableFormat format);

}  // namespace scp

#endif  // SCP_BENCH_H_
