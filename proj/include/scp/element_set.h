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

#ifndef SCP_ELEMENT_SET_H_
#define SCP_ELEMENT_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace scp {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t WordsFor(std::size_t width) {
  return (width + kWordBits - 1) / kWordBits;
}

// A subset of the universe {0, ..., width-1} stored as a packed bit vector.
// Bits at positions >= width are always zero, so word-wise popcounts are
// exact cardinalities.
class ElementSet {
 public:
  ElementSet() = default;
  // The empty set over a universe of `width` elements.
  explicit ElementSet(std::size_t width);

  // Throws std::invalid_argument if any element is >= width.
  static ElementSet FromElements(std::size_t width,
                                 std::span<const std::size_t> elements);
  static ElementSet FromElements(std::size_t width,
                                 std::initializer_list<std::size_t> elements);
  static ElementSet Full(std::size_t width);

  std::size_t width() const { return width_; }
  std::span<const Word> words() const { return words_; }

  bool contains(std::size_t element) const;
  // Both throw std::out_of_range if element >= width.
  void insert(std::size_t element);
  void erase(std::size_t element);

  std::size_t count() const;
  bool empty() const;
  bool is_full() const;

  // Smallest member, if any.
  std::optional<std::size_t> first() const;
  std::vector<std::size_t> elements() const;

  // Binary operations require equal widths (std::invalid_argument otherwise).
  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  // Set difference.
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    return a -= b;
  }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  bool is_subset_of(const ElementSet& other) const;

 private:
  void CheckSameWidth(const ElementSet& other) const;

  std::size_t width_ = 0;
  std::vector<Word> words_;
};

// |a ∩ b| without materializing the intersection.
std::size_t IntersectionCount(const ElementSet& a, const ElementSet& b);

inline std::size_t PopCount(std::span<const Word> words) {
  std::size_t total = 0;
  for (const Word w : words) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

}  // namespace scp

#endif  // SCP_ELEMENT_SET_H_
