// Copyright 2026 The Pacioli Authors
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

#ifndef PACIOLI_CLI_COMMANDS_HPP
#define PACIOLI_CLI_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "cli/render.hpp"
#include "pacioli/date.hpp"

namespace pacioli::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kParseError = 2,
};

struct SourceFile {
  std::string name;
  std::string text;
};

struct CommandOptions {
  std::optional<Date> at;
  std::optional<Date> from;
  std::optional<Date> to;
  RenderOptions render;
  bool loose = false;
};

// Each command writes its report to `out` and diagnostics to `err`, and
// returns an ExitCode. None of them touch the file system.

int cmd_check(const SourceFile& file, const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_balance(const SourceFile& file, const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_flows(const SourceFile& file, const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_equation(const SourceFile& file, const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_schedule(const SourceFile& file, const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace pacioli::cli

#endif  // PACIOLI_CLI_COMMANDS_HPP
