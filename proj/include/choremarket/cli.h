// Copyright 2026 The Choremarket Authors
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

#ifndef CHOREMARKET_CLI_H_
#define CHOREMARKET_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace choremarket {

enum ExitCode {
  kExitOk = 0,
  kExitInputError = 1,
  kExitCapExceeded = 2,
  kExitOracleMismatch = 3,
  kExitCertificateFailure = 4,
};

// Worker threads for the solver: the hardware concurrency, capped by the
// CHOREMARKET_THREADS environment variable when it holds a positive integer.
int WorkerThreads();

// Dispatches to a subcommand. `args` excludes the program name. Results
// go to the --out file when given, otherwise to `out`; diagnostics go to
// `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace choremarket

#endif  // CHOREMARKET_CLI_H_
