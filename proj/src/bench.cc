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

#include "scp/bench.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace scp {
namespace {

constexpr std::uint64_t kChunk = 512;

// Fields are numeric today; quoting follows RFC 4180 regardless.
std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ComparisonRow RunRange(const GeneratorConfig& config, StepSize p,
                       std::uint64_t begin, std::uint64_t end) {
  ComparisonRow tally;
  for (std::uint64_t i = begin; i < end; ++i) {
    const Instance instance = GenerateInstance(config, i);
    ++tally.count;
    if (config.policy == FeasibilityPolicy::kKeepRaw && !IsFeasible(instance)) {
      ++tally.infeasible;
      ++tally.equal;
      continue;
    }
    switch (CompareOne(instance, p)) {
      case Verdict::kBigStepBetter:
        ++tally.bigstep_better;
        break;
      case Verdict::kGreedyBetter:
        ++tally.greedy_better;
        break;
      case Verdict::kEqual:
        ++tally.equal;
        break;
    }
  }
  return tally;
}

ComparisonRow RunRow(const CampaignSpec& spec, std::size_t row_index,
                     const ProgressSink& progress) {
  GeneratorConfig config;
  config.n = spec.n;
  config.m = spec.m_values[row_index];
  config.q = spec.q;
  config.seed = spec.seed;
  config.policy = spec.policy;
  const StepSize p(spec.p);

  ComparisonRow row;
  row.m = config.m;
  row.q = spec.q;
  row.p = spec.p;

  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  std::uint64_t done = 0;
  std::exception_ptr failure;

  auto work = [&] {
    while (true) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= spec.count) return;
      const std::uint64_t end = std::min(spec.count, begin + kChunk);
      ComparisonRow part;
      try {
        part = RunRange(config, p, begin, end);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(spec.count);
        return;
      }
      std::lock_guard lock(mu);
      row.Add(part);
      done += end - begin;
      if (progress) progress(row_index, done, spec.count);
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, spec.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "campaign row (q=" << spec.q << ", m=" << config.m
          << ") aborted: " << e.what();
      throw CampaignError(msg.str());
    }
  }
  return row;
}

}  // namespace

Verdict CompareOne(const Instance& instance, StepSize p) {
  const std::size_t big = BigStepGreedy(instance, p).cover.size();
  const std::size_t greedy = ClassicalGreedy(instance).cover.size();
  if (big < greedy) return Verdict::kBigStepBetter;
  if (big > greedy) return Verdict::kGreedyBetter;
  return Verdict::kEqual;
}

void ComparisonRow::Add(const ComparisonRow& other) {
  count += other.count;
  bigstep_better += other.bigstep_better;
  greedy_better += other.greedy_better;
  equal += other.equal;
  infeasible += other.infeasible;
}

void CampaignSpec::Validate() const {
  if (m_values.empty()) throw std::invalid_argument("m list is empty");
  if (p == 0) throw std::invalid_argument("step size p must be >= 1");
  for (const std::size_t m : m_values) {
    GeneratorConfig config;
    config.n = n;
    config.m = m;
    config.q = q;
    config.Validate();
  }
}

std::vector<ComparisonRow> RunCampaign(const CampaignSpec& spec,
                                       const ProgressSink& progress) {
  spec.Validate();
  std::vector<ComparisonRow> rows;
  for (std::size_t r = 0; r < spec.m_values.size(); ++r) {
    rows.push_back(RunRow(spec, r, progress));
  }
  return rows;
}

TableFormat ParseTableFormat(std::string_view text) {
  if (text == "markdown" || text == "md") return TableFormat::kMarkdown;
  if (text == "csv") return TableFormat::kCsv;
  throw std::invalid_argument("unknown table format '" + std::string(text) +
                              "'");
}

std::string EmitTable(const std::vector<ComparisonRow>& rows,
                      TableFormat format) {
  for (const ComparisonRow& row : rows) {
    if (row.q != rows.front().q || row.p != rows.front().p) {
      throw std::invalid_argument("table rows mix different (q, p) settings");
    }
  }

  std::ostringstream out;
  if (format == TableFormat::kMarkdown) {
    out << "| m | count | bigstep_better | greedy_better | equal |\n"
        << "|---|---|---|---|---|\n";
    for (const ComparisonRow& row : rows) {
      out << "| " << row.m << " | " << row.count << " | "
          << row.bigstep_better << " | " << row.greedy_better << " | "
          << row.equal << " |\n";
    }
    return out.str();
  }

  out << "m,count,bigstep_better,greedy_better,equal\n";
  for (const ComparisonRow& row : rows) {
    out << CsvField(std::to_string(row.m)) << ','
        << CsvField(std::to_string(row.count)) << ','
        << CsvField(std::to_string(row.bigstep_better)) << ','
        << CsvField(std::to_string(row.greedy_better)) << ','
        << CsvField(std::to_string(row.equal)) << '\n';
  }
  return out.str();
}

}  // namespace scp
