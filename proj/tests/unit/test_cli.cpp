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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/simulation.hpp"
#include "qdevsim/gate_algebra.hpp"
#include "support/oracles.hpp"

namespace qdevsim::cli {
namespace {

using oracle::kPi;

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("qdevsim_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json"))
                .string();
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

TEST(ReportJson, RoundTrip) {
  oracle::Generator gen(81);
  const FidelityReport original =
      make_report(gen.unitary(4), GateSpec{gate::SqrtSwap{Sign::Minus}}, "dots", "custom");
  const FidelityReport back = report_from_json(Json::parse(report_to_json(original).dump()));
  EXPECT_EQ(back.device, original.device);
  EXPECT_EQ(back.schedule_name, original.schedule_name);
  EXPECT_NEAR(back.distance, original.distance, 1e-15);
  EXPECT_NEAR(std::abs(back.global_phase - original.global_phase), 0.0, 1e-15);
  ASSERT_EQ(back.basis_action.size(), original.basis_action.size());
  for (std::size_t k = 0; k < back.basis_action.size(); ++k) {
    EXPECT_NEAR(std::abs(back.basis_action[k] - original.basis_action[k]), 0.0, 1e-15);
  }
  EXPECT_LT((materialize(back.target) - materialize(original.target)).norm(), 1e-15);
}

TEST(GateSpecJson, RejectsUnknownKinds) {
  EXPECT_THROW(gate_spec_from_json(Json{{"kind", "toffoli"}}), ConfigError);
  EXPECT_THROW(device_from_json(Json{{"kind", "dots"}, {"params", {{"bogus", 1}}}}), ConfigError);
}

TEST(Simulate, QpiOnDots) {
  const FidelityReport r = simulate(Json::parse(R"({"device":{"kind":"dots"},"schedule":"qpi_dots"})"));
  EXPECT_LT(r.distance, 1e-10);
  EXPECT_LT(phase_distance(basis_action_matrix(r), phase_gate(kPi)), 1e-10);
}

TEST(Simulate, CiracZollerFlipsOnlyElevenSign) {
  const FidelityReport r =
      simulate(Json::parse(R"({"device":{"kind":"ion_cz","params":{"N":2,"eta":0.1,"Omega":1}},"schedule":"cz_ions"})"));
  EXPECT_LT(r.distance, 1e-10);
  const ComplexMatrix u = basis_action_matrix(r);
  EXPECT_NEAR(std::abs(u(3, 3) + u(0, 0)), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(u(1, 1) - u(0, 0)), 0.0, 1e-10);
}

TEST(Simulate, BadConfigurationsThrow) {
  EXPECT_THROW(simulate(Json::parse(R"({"device":{"kind":"dots"}})")), ConfigError);
  EXPECT_THROW(simulate(Json::parse(R"({"device":{"kind":"dots"},"schedule":"warp"})")), ConfigError);
  EXPECT_THROW(simulate(Json::parse(R"({"device":{"kind":"atom"},"schedule":"swap"})")), ConfigError);
}

TEST(Sweep, CavityDistanceFallsWithDetuning) {
  const Json config = Json::parse(R"({"device":{"kind":"cavity","params":{"omega_ab":5,"g":1}},
      "schedule":{"builtin":"cavity_qpg","options":{"model":"exact"}},
      "sweep":{"parameter":"delta_over_g","values":[10,30,100,300,1000]}})");
  const auto rows = sweep(config);
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_LT(rows[k].report.distance, rows[k - 1].report.distance);

  std::ostringstream csv;
  write_sweep_csv(csv, "delta_over_g", rows);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "delta_over_g,distance,leakage,lamb_dicke_ratio,detuning_ratio,rwa_ratio");
  int count = 0;
  for (std::string line; std::getline(lines, line);) ++count;
  EXPECT_EQ(count, 5);
}

TEST(Sweep, EmptyValuesRejected) {
  EXPECT_THROW(sweep(Json::parse(R"({"device":{"kind":"dots"},"schedule":"swap","sweep":{"parameter":"x","values":[]}})")),
               ConfigError);
}

TEST(Commands, ExitCodes) {
  std::ostringstream out, err;
  const TempFile malformed("{bad");
  EXPECT_EQ(cmd_simulate(malformed.path(), "", out, err), kExitConfig);

  const TempFile degenerate(R"({"device":{"kind":"cavity","params":{"omega_ab":1,"nu":1}},"schedule":"cavity_qpg"})");
  EXPECT_EQ(cmd_simulate(degenerate.path(), "", out, err), kExitPrecondition);

  const TempFile empty(R"({"device":{"kind":"dots"},"schedule":"swap","sweep":{"parameter":"x","values":[]}})");
  EXPECT_EQ(cmd_sweep(empty.path(), "", out, err), kExitConfig);

  EXPECT_EQ(cmd_simulate("/nonexistent/qdevsim.json", "", out, err), kExitConfig);

  const TempFile good(R"({"device":{"kind":"dots"},"schedule":"swap"})");
  out.str("");
  EXPECT_EQ(cmd_simulate(good.path(), "", out, err), kExitOk);
  EXPECT_NO_THROW(report_from_json(Json::parse(out.str())));
}

TEST(Commands, VerifyGates) {
  std::ostringstream out;
  EXPECT_EQ(cmd_verify_gates(1e-10, false, out), kExitOk);
  EXPECT_GE(identity_suite().size(), 10u);
  std::ostringstream injected;
  EXPECT_EQ(cmd_verify_gates(1e-10, true, injected), kExitFailed);
}

}  // namespace
}  // namespace qdevsim::cli
