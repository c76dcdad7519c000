// src/subprocess.cc

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

#include "restobench/subprocess.h"

#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace restobench {

std::vector<std::string> split_command(const std::string& cmd) {
  std::vector<std::string> out;
  std::stringstream ss(cmd);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

SubprocessResult run_subprocess(const std::vector<std::string>& argv,
                                double timeout_s) {
  if (argv.empty()) throw std::runtime_error("empty adapter command");

  std::vector<char*> cargv;
  cargv.reserve(argv.size() + 1);
  for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
  cargv.push_back(nullptr);

  SubprocessResult result;
  const pid_t pid = fork();
  if (pid < 0) {
    result.spawn_failed = true;
    return result;
  }
  if (pid == 0) {
    setpgid(0, 0);  // own process group so a timeout can kill helpers too
    execvp(cargv[0], cargv.data());
    _exit(127);
  }

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration<double>(timeout_s > 0 ? timeout_s
                                                                    : 1e12);
  for (;;) {
    int status = 0;
    const pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) {
      if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
        result.spawn_failed = result.exit_code == 127;
      } else if (WIFSIGNALED(status)) {
        result.exit_code = 128 + WTERMSIG(status);
      }
      return result;
    }
    if (r < 0) {
      result.spawn_failed = true;
      return result;
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(-pid, SIGKILL);
      waitpid(pid, &status, 0);
      result.timed_out = true;
      result.exit_code = -1;
      return result;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
}

}  // namespace restobench
