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

#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <set>

namespace qdevsim::cli {

namespace {

void require_object(const Json& j, const std::string& what) {
  if (!j.is_object()) throw ConfigError(what + " must be a JSON object");
}

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed, const std::string& what) {
  for (const auto& item : j.items()) {
    if (!allowed.contains(item.key())) throw ConfigError("unknown key '" + item.key() + "' in " + what);
  }
}

double number(const Json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ConfigError("'" + key + "' must be a number");
  return j.at(key).get<double>();
}

int integer(const Json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
  return j.at(key).get<int>();
}

Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::X;
  if (s == "y") return Axis::Y;
  if (s == "z") return Axis::Z;
  throw ConfigError("axis must be x, y or z");
}

std::string axis_name(Axis a) {
  switch (a) {
    case Axis::X:
      return "x";
    case Axis::Y:
      return "y";
    case Axis::Z:
      return "z";
  }
  return "x";
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw ConfigError("matrix must be square");
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = complex_from_json(row.at(static_cast<std::size_t>(c)));
  }
  return m;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<double> optional_from(const Json& j, const std::string& key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError("complex numbers are encoded as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json gate_spec_to_json(const GateSpec& spec) {
  struct Encoder {
    Json operator()(const gate::Rotation& r) const { return {{"kind", "rotation"}, {"theta", r.theta}, {"phi", r.phi}}; }
    Json operator()(const gate::Phase& p) const { return {{"kind", "phase"}, {"eta", p.eta}}; }
    Json operator()(const gate::Controlled& c) const {
      return {{"kind", "controlled"}, {"inner", gate_spec_to_json(*c.inner)}, {"controls", c.controls}};
    }
    Json operator()(const gate::Swap&) const { return {{"kind", "swap"}}; }
    Json operator()(const gate::SqrtSwap& s) const {
      return {{"kind", "sqrt_swap"}, {"sign", s.sign == Sign::Plus ? "+" : "-"}};
    }
    Json operator()(const gate::Pauli& p) const { return {{"kind", "pauli"}, {"axis", axis_name(p.axis)}}; }
    Json operator()(const gate::Explicit& e) const { return {{"kind", "explicit"}, {"matrix", matrix_to_json(e.matrix)}}; }
  };
  return std::visit(Encoder{}, spec.kind);
}

GateSpec gate_spec_from_json(const Json& j) {
  require_object(j, "target");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ConfigError("target needs a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rotation") {
    reject_unknown_keys(j, {"kind", "theta", "phi"}, "rotation target");
    return GateSpec::rotation(number(j, "theta", 0.0), number(j, "phi", 0.0));
  }
  if (kind == "phase") {
    reject_unknown_keys(j, {"kind", "eta"}, "phase target");
    return GateSpec::phase(number(j, "eta", 0.0));
  }
  if (kind == "controlled") {
    reject_unknown_keys(j, {"kind", "inner", "controls"}, "controlled target");
    if (!j.contains("inner")) throw ConfigError("controlled target needs 'inner'");
    return GateSpec::controlled(gate_spec_from_json(j.at("inner")), integer(j, "controls", 1));
  }
  if (kind == "swap") return GateSpec::swap();
  if (kind == "sqrt_swap") {
    const std::string sign = j.value("sign", std::string("+"));
    if (sign != "+" && sign != "-") throw ConfigError("sqrt_swap sign must be '+' or '-'");
    return GateSpec::sqrt_swap(sign == "+" ? Sign::Plus : Sign::Minus);
  }
  if (kind == "pauli") return GateSpec::pauli(parse_axis(j.value("axis", std::string("x"))));
  if (kind == "explicit") {
    if (!j.contains("matrix")) throw ConfigError("explicit target needs 'matrix'");
    return GateSpec::explicit_matrix(matrix_from_json(j.at("matrix")));
  }
  throw ConfigError("unknown target kind '" + kind + "'");
}

DeviceModel device_from_json(const Json& j) {
  require_object(j, "device");
  reject_unknown_keys(j, {"kind", "params"}, "device");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ConfigError("device needs a string 'kind'");
  const Json params = j.value("params", Json::object());
  require_object(params, "device params");

  DeviceKind kind;
  try {
    kind = parse_device_kind(j.at("kind").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  switch (kind) {
    case DeviceKind::TwoLevelAtom: {
      reject_unknown_keys(params, {"omega0", "omega1", "nu", "rabi", "phi"}, "atom params");
      AtomParams p;
      p.omega0 = number(params, "omega0", p.omega0);
      p.omega1 = number(params, "omega1", p.omega1);
      p.nu = number(params, "nu", p.nu);
      p.rabi = number(params, "rabi", p.rabi);
      p.phi = number(params, "phi", p.phi);
      return TwoLevelAtom{p};
    }
    case DeviceKind::CavityQED: {
      reject_unknown_keys(params, {"omega_ab", "nu", "g", "n_max", "validity_ratio"}, "cavity params");
      CavityParams p;
      p.omega_ab = number(params, "omega_ab", p.omega_ab);
      p.nu = number(params, "nu", p.nu);
      p.g = number(params, "g", p.g);
      p.n_max = integer(params, "n_max", p.n_max);
      p.validity_ratio = number(params, "validity_ratio", p.validity_ratio);
      return CavityQED{p};
    }
    case DeviceKind::IonTrapCZ: {
      reject_unknown_keys(params, {"N", "eta", "Omega", "phonon_max", "phi", "omega_cm"}, "ion_cz params");
      IonTrapParams p;
      p.N = integer(params, "N", p.N);
      p.eta = number(params, "eta", p.eta);
      p.Omega = number(params, "Omega", p.Omega);
      p.phonon_max = integer(params, "phonon_max", p.phonon_max);
      p.phi = number(params, "phi", p.phi);
      p.omega_cm = number(params, "omega_cm", p.omega_cm);
      return IonTrapCZ{p};
    }
    case DeviceKind::IonTrapSM: {
      reject_unknown_keys(params, {"eta", "Omega", "delta"}, "ion_sm params");
      SMParams p;
      p.eta = number(params, "eta", p.eta);
      p.Omega = number(params, "Omega", p.Omega);
      p.delta = number(params, "delta", p.delta);
      return IonTrapSM{p};
    }
    case DeviceKind::IonTrapJP: {
      reject_unknown_keys(params, {"Omega", "modes"}, "ion_jp params");
      JPParams p;
      p.Omega = number(params, "Omega", p.Omega);
      if (params.contains("modes")) {
        if (!params.at("modes").is_array()) throw ConfigError("'modes' must be an array");
        for (const Json& m : params.at("modes")) {
          require_object(m, "mode");
          reject_unknown_keys(m, {"eta1", "eta2", "nu"}, "mode");
          p.modes.push_back({number(m, "eta1", 0.0), number(m, "eta2", 0.0), number(m, "nu", 1.0)});
        }
      }
      return IonTrapJP{p};
    }
    case DeviceKind::QuantumDotPair:
      reject_unknown_keys(params, {}, "dots params");
      return QuantumDotPair{};
  }
  throw ConfigError("unhandled device kind");
}

PulseSchedule schedule_from_json(DeviceKind kind, const Json& j) {
  require_object(j, "schedule");
  if (!j.contains("segments") || !j.at("segments").is_array()) throw ConfigError("schedule needs a 'segments' array");
  PulseSchedule s(kind);
  for (const Json& seg : j.at("segments")) {
    require_object(seg, "segment");
    reject_unknown_keys(seg, {"duration", "channels"}, "segment");
    Segment out;
    out.duration = number(seg, "duration", 0.0);
    const Json channels = seg.value("channels", Json::object());
    require_object(channels, "segment channels");
    for (const auto& item : channels.items()) {
      const Json& v = item.value();
      if (v.is_number()) {
        out.channels[item.key()] = v.get<double>();
      } else if (v.is_array() && v.size() == 3 && v[0].is_number() && v[1].is_number() && v[2].is_number()) {
        out.channels[item.key()] = Vector3(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
      } else {
        throw ConfigError("channel '" + item.key() + "' must be a number or a 3-vector");
      }
    }
    try {
      s.add(std::move(out));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  return s;
}

Json report_to_json(const FidelityReport& report) {
  Json action = Json::array();
  for (const Complex& z : report.basis_action) action.push_back(complex_to_json(z));
  return {
      {"device", report.device},
      {"schedule_name", report.schedule_name},
      {"target", gate_spec_to_json(report.target)},
      {"distance", report.distance},
      {"global_phase", complex_to_json(report.global_phase)},
      {"basis_action", action},
      {"diagnostics",
       {{"lamb_dicke_ratio", optional_number(report.diagnostics.lamb_dicke_ratio)},
        {"detuning_ratio", optional_number(report.diagnostics.detuning_ratio)},
        {"rwa_ratio", optional_number(report.diagnostics.rwa_ratio)},
        {"leakage", report.diagnostics.leakage}}},
  };
}

FidelityReport report_from_json(const Json& j) {
  require_object(j, "report");
  try {
    FidelityReport r;
    r.device = j.at("device").get<std::string>();
    r.schedule_name = j.at("schedule_name").get<std::string>();
    r.target = gate_spec_from_json(j.at("target"));
    r.distance = j.at("distance").get<double>();
    r.global_phase = complex_from_json(j.at("global_phase"));
    for (const Json& z : j.at("basis_action")) r.basis_action.push_back(complex_from_json(z));
    const Json& d = j.at("diagnostics");
    r.diagnostics.lamb_dicke_ratio = optional_from(d, "lamb_dicke_ratio");
    r.diagnostics.detuning_ratio = optional_from(d, "detuning_ratio");
    r.diagnostics.rwa_ratio = optional_from(d, "rwa_ratio");
    r.diagnostics.leakage = d.at("leakage").get<double>();
    return r;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace qdevsim::cli
