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

#ifndef SCP_GENERATOR_H_
#define SCP_GENERATOR_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

#include "scp/instance.h"

namespace scp {

enum class FeasibilityPolicy {
  // Redraw until every element is covered by some set.
  kRejectResample,
  // Return the first draw, feasible or not.
  kKeepRaw,
};

std::string_view ToString(FeasibilityPolicy policy);
// Accepts "reject", "reject-resample", "raw", "keep-raw".
FeasibilityPolicy ParseFeasibilityPolicy(std::string_view text);

// Random instances where each of the m*n membership bits is set
// independently with probability q.
struct GeneratorConfig {
  std::size_t n = 100;
  std::size_t m = 10;
  double q = 0.3;
  std::uint64_t seed = 0;
  FeasibilityPolicy policy = FeasibilityPolicy::kRejectResample;
  // Maximum number of redraws under kRejectResample.
  std::size_t max_redraws = 10000;

  // Throws std::invalid_argument unless n >= 1, m >= 1 and 0 <= q <= 1.
  void Validate() const;
};

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The random stream for instance `index`: std::mt19937_64 seeded through
// std::seed_seq with the 32-bit halves of (seed, index). Both are fully
// specified by the standard, so the stream is identical on every platform
// and independent of the order in which instances are generated.
std::mt19937_64 InstanceStream(std::uint64_t seed, std::uint64_t index);

// Deterministic in (config, index). A membership bit is set when the top 53
// bits of the next engine output, scaled to [0, 1), are below q; bits are
// drawn set by set, element by element. Throws GeneratorError when
// kRejectResample exhausts max_redraws.
Instance GenerateInstance(const GeneratorConfig& config, std::uint64_t index);

// (1 - (1-q)^m)^n: the chance that a raw draw is feasible.
double FeasibilityProbability(const GeneratorConfig& config);

}  // namespace scp

#endif  // SCP_GENERATOR_H_
