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

#include "scp/element_set.h"

#include <stdexcept>
#include <string>

namespace scp {
namespace {

Word TailMask(std::size_t width) {
  const std::size_t used = width % kWordBits;
  return used == 0 ? ~Word{0} : (Word{1} << used) - 1;
}

}  // namespace

ElementSet::ElementSet(std::size_t width)
    : width_(width), words_(WordsFor(width), 0) {}

ElementSet ElementSet::FromElements(std::size_t width,
                                    std::span<const std::size_t> elements) {
  ElementSet set(width);
  for (const std::size_t e : elements) {
    if (e >= width) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " out of range for universe of size " +
                                  std::to_string(width));
    }
    set.insert(e);
  }
  return set;
}

ElementSet ElementSet::FromElements(
    std::size_t width, std::initializer_list<std::size_t> elements) {
  return FromElements(width, std::span<const std::size_t>(elements.begin(),
                                                          elements.size()));
}

ElementSet ElementSet::Full(std::size_t width) {
  ElementSet set(width);
  for (Word& w : set.words_) w = ~Word{0};
  if (!set.words_.empty()) set.words_.back() &= TailMask(width);
  return set;
}

bool ElementSet::contains(std::size_t element) const {
  if (element >= width_) return false;
  return (words_[element / kWordBits] >> (element % kWordBits)) & 1;
}

void ElementSet::insert(std::size_t element) {
  if (element >= width_) {
    throw std::out_of_range("element " + std::to_string(element) +
                            " out of range");
  }
  words_[element / kWordBits] |= Word{1} << (element % kWordBits);
}

void ElementSet::erase(std::size_t element) {
  if (element >= width_) {
    throw std::out_of_range("element " + std::to_string(element) +
                            " out of range");
  }
  words_[element / kWordBits] &= ~(Word{1} << (element % kWordBits));
}

std::size_t ElementSet::count() const { return PopCount(words_); }

bool ElementSet::empty() const {
  for (const Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool ElementSet::is_full() const { return count() == width_; }

std::optional<std::size_t> ElementSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w != 0) {
      out.push_back(i * kWordBits +
                    static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void ElementSet::CheckSameWidth(const ElementSet& other) const {
  if (width_ != other.width_) {
    throw std::invalid_argument("element sets have different widths (" +
                                std::to_string(width_) + " vs " +
                                std::to_string(other.width_) + ")");
  }
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  CheckSameWidth(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  CheckSameWidth(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  CheckSameWidth(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  CheckSameWidth(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::size_t IntersectionCount(const ElementSet& a, const ElementSet& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("element sets have different widths");
  }
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t total = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  }
  return total;
}

}  // namespace scp
