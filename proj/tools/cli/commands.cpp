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

#include "cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <stdexcept>

#include "cli/simulation.hpp"

namespace qdevsim::cli {

namespace {

/// Runs `body` and maps exceptions to exit codes.
int guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  }
}

void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ConfigError("cannot write '" + path + "'");
  write(file);
}

}  // namespace

int cmd_verify_gates(double tol, bool inject_sign_error, std::ostream& out) {
  const auto results = identity_suite(inject_sign_error);
  int failures = 0;
  out << std::left << std::setw(40) << "identity" << std::setw(14) << "distance" << "result\n";
  for (const IdentityResult& r : results) {
    const bool ok = r.distance < tol;
    failures += ok ? 0 : 1;
    out << std::left << std::setw(40) << r.name << std::setw(14) << std::scientific << std::setprecision(3)
        << r.distance << (ok ? "PASS" : "FAIL") << '\n';
  }
  out << std::defaultfloat << results.size() - failures << "/" << results.size() << " identities within " << tol
      << '\n';
  return failures == 0 ? kExitOk : kExitFailed;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FidelityReport report = simulate(load_json_file(config_path));
    emit(out_path, out, [&](std::ostream& s) { s << report_to_json(report).dump(2) << '\n'; });
  });
}

int cmd_sweep(const std::string& config_path, const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Json config = load_json_file(config_path);
    const std::vector<SweepRow> rows = sweep(config);
    const std::string parameter = config.at("sweep").at("parameter").get<std::string>();
    emit(out_path, out, [&](std::ostream& s) { write_sweep_csv(s, parameter, rows); });
  });
}

}  // namespace qdevsim::cli
