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
#include <vector>

#include "scp/solvers.h"

namespace scp {
namespace {

// Scores k-subsets of a row-major matrix of word rows (each row already
// restricted to the uncovered elements). Enumeration is lexicographic over
// row positions, and only a strictly larger score replaces the incumbent, so
// the winner is the lexicographically smallest maximizer.
class SubsetScorer {
 public:
  SubsetScorer(const std::vector<Word>& rows, std::size_t row_count,
               std::size_t words)
      : rows_(rows), row_count_(row_count), words_(words) {}

  struct Best {
    std::vector<std::size_t> positions;
    std::size_t score = 0;
    std::size_t evaluated = 0;
  };

  Best Maximize(std::size_t k) {
    best_ = Best{};
    current_.assign(k, 0);
    stack_.assign((k + 1) * words_, 0);
    Extend(0, 0, k);
    return best_;
  }

  // First r-subset of `candidates` (in lexicographic order, r increasing)
  // whose union reaches `target` uncovered elements.
  std::vector<std::size_t> SmallestCovering(
      const std::vector<std::size_t>& candidates, std::size_t target) const {
    const std::size_t k = candidates.size();
    std::vector<Word> acc(words_);
    for (std::size_t r = 1; r <= k; ++r) {
      std::vector<std::size_t> pick(r);
      for (std::size_t i = 0; i < r; ++i) pick[i] = i;
      while (true) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const std::size_t i : pick) {
          const Word* row = &rows_[candidates[i] * words_];
          for (std::size_t w = 0; w < words_; ++w) acc[w] |= row[w];
        }
        if (PopCount(acc) == target) {
          std::vector<std::size_t> out;
          for (const std::size_t i : pick) out.push_back(candidates[i]);
          return out;
        }
        // Advance to the next r-combination of {0..k-1}.
        std::size_t i = r;
        while (i > 0 && pick[i - 1] == k - r + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return candidates;
  }

 private:
  void Extend(std::size_t depth, std::size_t start, std::size_t k) {
    const Word* acc = &stack_[depth * words_];
    if (depth == k) {
      ++best_.evaluated;
      const std::size_t score =
          PopCount(std::span<const Word>(acc, words_));
      if (score > best_.score || best_.positions.empty()) {
        best_.score = score;
        best_.positions = current_;
      }
      return;
    }
    Word* next = &stack_[(depth + 1) * words_];
    for (std::size_t i = start; i + (k - depth) <= row_count_; ++i) {
      const Word* row = &rows_[i * words_];
      for (std::size_t w = 0; w < words_; ++w) next[w] = acc[w] | row[w];
      current_[depth] = i;
      Extend(depth + 1, i + 1, k);
    }
  }

  const std::vector<Word>& rows_;
  std::size_t row_count_;
  std::size_t words_;
  std::vector<std::size_t> current_;
  std::vector<Word> stack_;
  Best best_;
};

}  // namespace

SolveResult BigStepGreedy(const Instance& instance, StepSize p) {
  const std::size_t n = instance.universe_size();
  const std::size_t words = WordsFor(n);
  ElementSet uncovered = ElementSet::Full(n);
  std::size_t remaining = n;

  std::vector<std::size_t> available(instance.set_count());
  for (std::size_t i = 0; i < available.size(); ++i) available[i] = i;

  SolveResult result{{{}, ElementSet(n)}, {}};
  std::vector<Word> rows;
  while (remaining > 0) {
    if (available.empty()) throw UncoverableError(*uncovered.first(), remaining);

    const std::size_t u = available.size();
    rows.assign(u * words, 0);
    const auto w_words = uncovered.words();
    for (std::size_t j = 0; j < u; ++j) {
      const auto set_words = instance.set(available[j]).words();
      for (std::size_t w = 0; w < words; ++w) {
        rows[j * words + w] = set_words[w] & w_words[w];
      }
    }

    SubsetScorer scorer(rows, u, words);
    const std::size_t k = std::min(p.value(), u);
    SubsetScorer::Best best = scorer.Maximize(k);
    if (best.score == 0) throw UncoverableError(*uncovered.first(), remaining);

    std::vector<std::size_t> positions = best.positions;
    if (best.score == remaining && k > 1) {
      positions = scorer.SmallestCovering(positions, remaining);
    }

    TraceStep step;
    step.candidates_evaluated = best.evaluated;
    for (const std::size_t pos : positions) {
      const std::size_t index = available[pos];
      step.chosen.push_back(index);
      result.cover.chosen.push_back(index);
      result.cover.covered |= instance.set(index);
      uncovered -= instance.set(index);
    }
    const std::size_t now_remaining = uncovered.count();
    step.newly_covered = remaining - now_remaining;
    remaining = now_remaining;
    result.trace.steps.push_back(std::move(step));

    // Positions are ascending; erase from the back to keep them valid.
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
      available.erase(available.begin() + static_cast<std::ptrdiff_t>(*it));
    }
  }
  return result;
}

}  // namespace scp
