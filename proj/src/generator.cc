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

#include "scp/generator.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace scp {
namespace {

Instance DrawOnce(const GeneratorConfig& config, std::mt19937_64& rng) {
  std::vector<ElementSet> sets;
  sets.reserve(config.m);
  for (std::size_t s = 0; s < config.m; ++s) {
    ElementSet set(config.n);
    for (std::size_t e = 0; e < config.n; ++e) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < config.q) set.insert(e);
    }
    sets.push_back(std::move(set));
  }
  return Instance(config.n, std::move(sets));
}

}  // namespace

std::string_view ToString(FeasibilityPolicy policy) {
  switch (policy) {
    case FeasibilityPolicy::kRejectResample:
      return "reject-resample";
    case FeasibilityPolicy::kKeepRaw:
      return "keep-raw";
  }
  return "unknown";
}

FeasibilityPolicy ParseFeasibilityPolicy(std::string_view text) {
  if (text == "reject" || text == "reject-resample") {
    return FeasibilityPolicy::kRejectResample;
  }
  if (text == "raw" || text == "keep-raw") return FeasibilityPolicy::kKeepRaw;
  throw std::invalid_argument("unknown feasibility policy '" +
                              std::string(text) + "'");
}

void GeneratorConfig::Validate() const {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (m == 0) throw std::invalid_argument("m must be >= 1");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("q must lie in [0, 1]");
  }
}

std::mt19937_64 InstanceStream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Instance GenerateInstance(const GeneratorConfig& config, std::uint64_t index) {
  config.Validate();
  std::mt19937_64 rng = InstanceStream(config.seed, index);
  Instance instance = DrawOnce(config, rng);
  if (config.policy == FeasibilityPolicy::kKeepRaw) return instance;

  for (std::size_t redraw = 0; !IsFeasible(instance); ++redraw) {
    if (redraw == config.max_redraws) {
      std::ostringstream msg;
      msg << "feasible instance unreachable: no feasible draw in "
          << config.max_redraws << " redraws (n=" << config.n
          << ", m=" << config.m << ", q=" << config.q
          << "; feasibility probability " << FeasibilityProbability(config)
          << ")";
      throw GeneratorError(msg.str());
    }
    instance = DrawOnce(config, rng);
  }
  return instance;
}

double FeasibilityProbability(const GeneratorConfig& config) {
  config.Validate();
  const double element_covered =
      1.0 - std::pow(1.0 - config.q, static_cast<double>(config.m));
  return std::pow(element_covered, static_cast<double>(config.n));
}

}  // namespace scp
