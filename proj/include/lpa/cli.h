// Copyright 2026 The lpa-ideals Authors
//
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

#ifndef LPA_CLI_H_
#define LPA_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace lpa::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidGraph = 1,
  kUsage = 2,
  kResourceLimit = 3,
};

// Runs one invocation. args[0] is the program name. Reports go to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lpa::cli

#endif  // LPA_CLI_H_
