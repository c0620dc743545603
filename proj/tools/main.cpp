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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace {

using pacioli::cli::CommandOptions;
using pacioli::cli::SourceFile;

std::optional<pacioli::Date> date_flag(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  auto d = pacioli::parse_date(text);
  if (!d) throw CLI::ValidationError(flag, "expected a YYYY-MM-DD date, got '" + text + "'");
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pacioli: double-entry ledger over T-accounts"};
  app.require_subcommand(1);

  std::string file;
  std::string at;
  std::string from;
  std::string to;
  bool percent = false;
  bool show_zero = false;
  bool loose = false;
  std::optional<unsigned> places;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "Journal file")->required();
    cmd->add_flag("--loose", loose, "Declare accounts implicitly on first use");
  };
  const auto add_render = [&](CLI::App* cmd) {
    cmd->add_flag("--percent", percent, "Normalize amounts by the journal's basis");
    cmd->add_option("--decimal", places, "Render fixed-point decimals with this many places")
        ->check(CLI::Range(0u, 12u));
    cmd->add_flag("--show-zero", show_zero, "Keep accounts whose reduced balance is zero");
  };

  auto* check = app.add_subcommand("check", "Validate a journal (exit 0 ok, 1 invalid, 2 parse error)");
  add_common(check);

  auto* balance = app.add_subcommand("balance", "Reduced stock view at a date");
  add_common(balance);
  add_render(balance);
  balance->add_option("--at", at, "Cutoff date, inclusive (default: last transaction)");

  auto* flows = app.add_subcommand("flows", "Net flows over (from, to]");
  add_common(flows);
  add_render(flows);
  flows->add_option("--from", from, "Interval start, exclusive");
  flows->add_option("--to", to, "Interval end, inclusive");

  auto* equation = app.add_subcommand("equation", "The zero T-account decomposition at a date");
  add_common(equation);
  add_render(equation);
  equation->add_option("--at", at, "Cutoff date, inclusive (default: last transaction)");

  auto* schedule = app.add_subcommand("schedule", "Transactions emitted by schedule directives");
  add_common(schedule);
  add_render(schedule);

  CommandOptions options;
  try {
    app.parse(argc, argv);
    options.at = date_flag(at, "--at");
    options.from = date_flag(from, "--from");
    options.to = date_flag(to, "--to");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pacioli::cli::kParseError;
  }

  if (places) options.render = pacioli::cli::RenderOptions::decimal(*places);
  if (percent) options.render.basis_mode = pacioli::cli::RenderOptions::BasisMode::percent_of_basis;
  options.render.show_zero = show_zero;
  options.loose = loose;

  std::ifstream in(file, std::ios::binary);
  if (!in) {
    std::cerr << file << ": error: cannot read file\n";
    return pacioli::cli::kParseError;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const SourceFile source{file, buffer.str()};

  if (app.got_subcommand(check)) return pacioli::cli::cmd_check(source, options, std::cout, std::cerr);
  if (app.got_subcommand(balance)) return pacioli::cli::cmd_balance(source, options, std::cout, std::cerr);
  if (app.got_subcommand(flows)) return pacioli::cli::cmd_flows(source, options, std::cout, std::cerr);
  if (app.got_subcommand(equation)) return pacioli::cli::cmd_equation(source, options, std::cout, std::cerr);
  return pacioli::cli::cmd_schedule(source, options, std::cout, std::cerr);
}
