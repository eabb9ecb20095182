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

#ifndef SCP_IO_H_
#define SCP_IO_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scp/bench.h"
#include "scp/instance.h"

namespace scp {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line);
  // 1-based; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Native format:
//
//   n m
//   k e_1 ... e_k        (one line per set, elements ascending, 0-based)
//
// e.g. "3 1\n2 0 2\n" for n = 3 with the single set {0, 2}.
std::string SerializeInstance(const Instance& instance);

// Inverse of SerializeInstance. Any whitespace separates tokens; line numbers
// in errors refer to where the offending token appears.
Instance ParseInstance(std::string_view text);

// OR-Library SCP layout: "rows columns", one cost per column, then for each
// row a count followed by that many 1-based column indices. Rows become
// elements and columns become sets; costs are dropped. A warning is appended
// to `warnings` (if given) when any cost differs from 1.
Instance ParseOrlibScp(std::string_view text,
                       std::vector<std::string>* warnings = nullptr);

// Campaign spec as a JSON object, e.g.
//   {"n": 100, "q": 0.3, "m": [10, 20], "p": 2, "count": 1000,
//    "seed": 7, "policy": "reject"}
// Omitted keys keep their CampaignSpec defaults except "q" and "m", which
// are required.
CampaignSpec ParseCampaignSpec(std::string_view json_text);

}  // namespace scp

#endif  // SCP_IO_H_
