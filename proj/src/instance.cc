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

#include "scp/instance.h"

#include <string>
#include <utility>

namespace scp {
namespace {

void CheckIndex(const Instance& instance, std::size_t index) {
  if (index >= instance.set_count()) {
    throw std::invalid_argument("set index " + std::to_string(index) +
                                " out of range (m = " +
                                std::to_string(instance.set_count()) + ")");
  }
}

}  // namespace

Instance::Instance(std::size_t n, std::vector<ElementSet> sets)
    : n_(n), sets_(std::move(sets)) {
  if (n_ == 0) throw std::invalid_argument("universe size must be >= 1");
  if (sets_.empty()) throw std::invalid_argument("instance needs >= 1 set");
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].width() != n_) {
      throw std::invalid_argument("set " + std::to_string(i) + " has width " +
                                  std::to_string(sets_[i].width()) +
                                  ", expected " + std::to_string(n_));
    }
  }
}

UncoverableError::UncoverableError(std::size_t element,
                                   std::size_t uncovered_count)
    : std::runtime_error("uncoverable elements: element " +
                         std::to_string(element) + " (and " +
                         std::to_string(uncovered_count - 1) +
                         " more) is in no available set"),
      element_(element) {}

bool IsFeasible(const Instance& instance) {
  ElementSet all(instance.universe_size());
  for (const ElementSet& s : instance.sets()) all |= s;
  return all.is_full();
}

CoverSolution MakeCover(const Instance& instance,
                        std::span<const std::size_t> chosen) {
  CoverSolution cover{{}, ElementSet(instance.universe_size())};
  std::vector<bool> seen(instance.set_count(), false);
  for (const std::size_t i : chosen) {
    CheckIndex(instance, i);
    if (seen[i]) {
      throw std::invalid_argument("set index " + std::to_string(i) +
                                  " chosen twice");
    }
    seen[i] = true;
    cover.chosen.push_back(i);
    cover.covered |= instance.set(i);
  }
  return cover;
}

bool ValidateCover(const Instance& instance,
                   std::span<const std::size_t> chosen) {
  ElementSet covered(instance.universe_size());
  for (const std::size_t i : chosen) {
    CheckIndex(instance, i);
    covered |= instance.set(i);
  }
  return covered.is_full();
}

bool ValidateCover(const Instance& instance, const CoverSolution& cover) {
  return ValidateCover(instance, std::span<const std::size_t>(cover.chosen));
}

}  // namespace scp
