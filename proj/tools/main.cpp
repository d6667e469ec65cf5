// Copyright 2026 The qdevsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qdevsim: device-level quantum gate simulator"};
  app.require_subcommand(1);

  double tol = 1e-10;
  bool inject = false;
  auto* verify = app.add_subcommand("verify-gates", "Check the built-in gate identity suite");
  verify->add_option("--tol", tol, "Distance tolerance")->check(CLI::PositiveNumber);
  verify->add_flag("--inject-sign-error", inject)->group("");

  std::string config;
  std::string out;
  auto* simulate = app.add_subcommand("simulate", "Run one configuration and write a JSON report");
  simulate->add_option("--config", config, "Configuration file")->required();
  simulate->add_option("--out", out, "Report path (stdout when omitted)");

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV");
  sweep->add_option("--config", config, "Configuration file")->required();
  sweep->add_option("--out", out, "CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qdevsim::cli::kExitConfig;
  }

  if (verify->parsed()) return qdevsim::cli::cmd_verify_gates(tol, inject, std::cout);
  if (simulate->parsed()) return qdevsim::cli::cmd_simulate(config, out, std::cout, std::cerr);
  return qdevsim::cli::cmd_sweep(config, out, std::cout, std::cerr);
}
