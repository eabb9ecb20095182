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

#ifndef SCP_CLI_H_
#define SCP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace scp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntimeError = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `scp` tool. `args` excludes the program name.
//
//   solve    --algo greedy|bigstep|exact [--p P] --input FILE
//            [--format native|orlib] [--trace] [--budget NODES]
//   gen      --n N --m M --q Q --seed S --count K --out DIR
//            [--policy reject|raw]
//   bench    --n N --q Q --m M1,M2,... --p P --count K --seed S
//            [--policy reject|raw] [--format markdown|csv] [--workers W]
//            [--config FILE] [--progress]
//   feasprob --n N --m M --q Q
//
// Returns kExitOk, kExitRuntimeError (solver, parse or I/O failure) or
// kExitUsage (bad flags; usage goes to `err`).
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace scp

#endif  // SCP_CLI_H_
