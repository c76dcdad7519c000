// include/restobench/subprocess.h

// Copyright 2026  Restobench Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace restobench {

struct SubprocessResult {
  int exit_code = -1;
  bool timed_out = false;
  bool spawn_failed = false;
};

// Runs argv[0] with the given arguments (no shell), waiting at most
// timeout_s seconds before killing the process group. timeout_s <= 0 waits
// forever.
SubprocessResult run_subprocess(const std::vector<std::string>& argv,
                                double timeout_s);

// Splits a command string on whitespace. The adapter protocol appends the
// manifest path and output directory as the final two arguments.
std::vector<std::string> split_command(const std::string& cmd);

}  // namespace restobench
