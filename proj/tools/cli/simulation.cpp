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

#include "cli/simulation.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "qdevsim/atom.hpp"
#include "qdevsim/cavity.hpp"
#include "qdevsim/gate_algebra.hpp"
#include "qdevsim/iontrap.hpp"
#include "qdevsim/qdot.hpp"

namespace qdevsim::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  ComplexMatrix gate;
  GateSpec target;
  Diagnostics diagnostics;
};

double option(const Json& opts, const std::string& key, double fallback) {
  if (!opts.contains(key)) return fallback;
  if (!opts.at(key).is_number()) throw ConfigError("option '" + key + "' must be a number");
  return opts.at(key).get<double>();
}

std::string text_option(const Json& opts, const std::string& key, const std::string& fallback) {
  if (!opts.contains(key)) return fallback;
  if (!opts.at(key).is_string()) throw ConfigError("option '" + key + "' must be a string");
  return opts.at(key).get<std::string>();
}

template <class Device>
const Device& require_device(const DeviceModel& model, const std::string& builtin) {
  const Device* d = std::get_if<Device>(&model);
  if (!d) {
    throw ConfigError("builtin '" + builtin + "' does not support device '" +
                      device_kind_name(device_kind(model)) + "'");
  }
  return *d;
}

ComplexMatrix xx() { return kron(pauli(Axis::X), pauli(Axis::X)); }

Outcome run_swap(const DeviceModel& model, const Json&) {
  require_device<QuantumDotPair>(model, "swap");
  return {propagate(model, exchange_schedule(kPi / 2.0)), GateSpec::swap(), {}};
}

Outcome run_sqrt_swap(const DeviceModel& model, const Json& opts) {
  require_device<QuantumDotPair>(model, "sqrt_swap");
  const std::string sign = text_option(opts, "sign", "+");
  if (sign != "+" && sign != "-") throw ConfigError("sqrt_swap sign must be '+' or '-'");
  const double area = sign == "+" ? kPi / 4.0 : -kPi / 4.0;
  return {propagate(model, exchange_schedule(area)), GateSpec::sqrt_swap(sign == "+" ? Sign::Plus : Sign::Minus), {}};
}

Outcome run_qpi_dots(const DeviceModel& model, const Json&) {
  require_device<QuantumDotPair>(model, "qpi_dots");
  return {propagate(model, qpi_schedule()), GateSpec::phase(kPi), {}};
}

Outcome run_rotation(const DeviceModel& model, const Json& opts) {
  const double theta = option(opts, "theta", kPi / 2.0);
  const double phi = option(opts, "phi", 0.0);

  if (std::holds_alternative<QuantumDotPair>(model)) {
    const int dot = static_cast<int>(option(opts, "dot", 1.0));
    if (dot != 1 && dot != 2) throw ConfigError("option 'dot' must be 1 or 2");
    const ComplexMatrix gate = theta == 0.0 ? identity(4) : propagate(model, rotation_schedule(theta, phi, dot));
    return {gate, GateSpec::explicit_matrix(embed_1bit(rotation_gate(theta, phi), dot, 2)), {}};
  }

  AtomParams p = require_device<TwoLevelAtom>(model, "rotation").params;
  if (opts.contains("nu_over_rabi")) {
    p.nu = option(opts, "nu_over_rabi", 0.0) * p.rabi;
    p.omega0 = 0.0;
    p.omega1 = p.nu;
  }
  const RotationPulse pulse = pulse_for_rotation(theta, phi, p.rabi);
  p.phi = pulse.phase;

  Outcome out{ComplexMatrix(), GateSpec::rotation(theta, phi), {}};
  if (p.nu != 0.0) out.diagnostics.rwa_ratio = p.rabi / std::abs(p.nu);
  const std::string model_name = text_option(opts, "model", "rwa");
  if (model_name == "rwa") {
    PulseSchedule s(DeviceKind::TwoLevelAtom);
    if (pulse.duration > 0.0) s.add(pulse.duration, {{"rabi", p.rabi}, {"phase", pulse.phase}});
    out.gate = propagate(TwoLevelAtom{p}, s);
  } else if (model_name == "full") {
    const int steps = rk4_steps_for(p, pulse.duration);
    out.gate = to_rotating_frame(p, pulse.duration, integrate_full(p, pulse.duration, steps));
  } else {
    throw ConfigError("rotation model must be 'rwa' or 'full'");
  }
  return out;
}

Outcome run_cz_ions(const DeviceModel& model, const Json&) {
  const IonTrapParams& p = require_device<IonTrapCZ>(model, "cz_ions").params;
  p.validate();
  const double t = p.pulse_time();
  PulseSchedule s(DeviceKind::IonTrapCZ);
  s.add(t, {{"red1", 1.0}}).add(2.0 * t, {{"aux2", 1.0}}).add(t, {{"red1", 1.0}});
  const ComplexMatrix full = propagate(model, s);

  const std::vector<int> idx = computational_indices(p);
  Outcome out{ComplexMatrix(4, 4), GateSpec::phase(kPi), {}};
  for (int c = 0; c < 4; ++c) {
    double kept = 0.0;
    for (int r = 0; r < 4; ++r) {
      out.gate(r, c) = full(idx[r], idx[c]);
      kept += std::norm(out.gate(r, c));
    }
    out.diagnostics.leakage = std::max(out.diagnostics.leakage, std::max(0.0, 1.0 - kept));
  }
  if (p.omega_cm > 0.0) out.diagnostics.lamb_dicke_ratio = lamb_dicke_ratio(p);
  return out;
}

Outcome run_cavity_qpg(const DeviceModel& model, const Json& opts) {
  CavityParams p = require_device<CavityQED>(model, "cavity_qpg").params;
  p.validate();
  std::optional<double> duration;
  if (opts.contains("delta_over_g")) {
    if (!(p.g > 0.0)) throw std::invalid_argument("delta_over_g needs g > 0");
    p.nu = p.omega_ab + option(opts, "delta_over_g", 0.0) * p.g;
    duration = kPi / p.g;
  }
  if (opts.contains("duration")) duration = option(opts, "duration", 0.0);
  const double t = duration ? *duration : solve_time_for_eta(p, option(opts, "eta", kPi));
  if (t < 0.0) throw std::invalid_argument("cavity duration must be >= 0");

  const double eta = -e_minus_1(p) * t;
  Outcome out{ComplexMatrix(), GateSpec::phase(eta), {}};
  out.diagnostics.detuning_ratio = p.detuning_ratio();
  const std::string model_name = text_option(opts, "model", "effective");
  if (model_name == "effective") {
    out.gate = phase_gate_sim(p, t).gate;
  } else if (model_name == "exact") {
    out.gate = exact_phase_gate(p, t);
    out.diagnostics.leakage = exact_leakage(p, t);
  } else {
    throw ConfigError("cavity model must be 'effective' or 'exact'");
  }
  return out;
}

Outcome run_sm(const DeviceModel& model, const Json&) {
  const SMParams& p = require_device<IonTrapSM>(model, "sm_entangle").params;
  const double t = p.entangling_time();
  PulseSchedule s(DeviceKind::IonTrapSM);
  s.add(t, {{"sm", 1.0}});
  const double sign = p.omega_sm() > 0.0 ? 1.0 : -1.0;
  const ComplexMatrix ideal = (identity(4) - sign * kI * xx()) / std::sqrt(2.0);
  return {propagate(model, s), GateSpec::explicit_matrix(ideal), {}};
}

Outcome run_jp(const DeviceModel& model, const Json&) {
  const JPParams& p = require_device<IonTrapJP>(model, "jp_entangle").params;
  const double t = jp_entangling_time(p);
  PulseSchedule s(DeviceKind::IonTrapJP);
  s.add(t, {{"jp", 1.0}});
  const double sign = jp_effective_frequency(p) > 0.0 ? 1.0 : -1.0;
  ComplexMatrix ideal = identity(4);
  ideal(1, 1) = ideal(2, 2) = 1.0 / std::sqrt(2.0);
  ideal(1, 2) = ideal(2, 1) = sign * kI / std::sqrt(2.0);
  return {propagate(model, s), GateSpec::explicit_matrix(ideal), {}};
}

using Runner = Outcome (*)(const DeviceModel&, const Json&);

const std::vector<std::pair<std::string, Runner>>& builtins() {
  static const std::vector<std::pair<std::string, Runner>> table{
      {"swap", run_swap},         {"sqrt_swap", run_sqrt_swap},   {"qpi_dots", run_qpi_dots},
      {"cz_ions", run_cz_ions},   {"cavity_qpg", run_cavity_qpg}, {"sm_entangle", run_sm},
      {"jp_entangle", run_jp},    {"rotation", run_rotation},
  };
  return table;
}

Runner find_builtin(const std::string& name) {
  for (const auto& [n, r] : builtins())
    if (n == name) return r;
  throw ConfigError("unknown builtin schedule '" + name + "'");
}

/// Normalizes a string schedule to {"builtin": name}.
Json normalized_schedule(const Json& schedule) {
  if (schedule.is_string()) return Json{{"builtin", schedule.get<std::string>()}};
  if (!schedule.is_object()) throw ConfigError("schedule must be a builtin name or an object");
  return schedule;
}

void set_path(Json& root, const std::string& path, double value) {
  std::vector<std::string> keys;
  std::stringstream ss(path);
  for (std::string key; std::getline(ss, key, '.');) {
    if (key.empty()) throw ConfigError("empty component in sweep parameter '" + path + "'");
    keys.push_back(key);
  }
  Json* node = &root;
  for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
    Json& next = (*node)[keys[i]];
    if (next.is_null()) next = Json::object();
    if (!next.is_object()) throw ConfigError("sweep parameter '" + path + "' does not name an object path");
    node = &next;
  }
  (*node)[keys.back()] = value;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : builtins()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

FidelityReport simulate(const Json& config) {
  if (!config.is_object()) throw ConfigError("configuration must be a JSON object");
  for (const auto& item : config.items()) {
    const std::string& k = item.key();
    if (k != "device" && k != "schedule" && k != "target" && k != "sweep") {
      throw ConfigError("unknown key '" + k + "' in configuration");
    }
  }
  if (!config.contains("device")) throw ConfigError("configuration needs 'device'");
  if (!config.contains("schedule")) throw ConfigError("configuration needs 'schedule'");

  try {
    const DeviceModel model = device_from_json(config.at("device"));
    const Json schedule = normalized_schedule(config.at("schedule"));
    std::optional<GateSpec> target;
    if (config.contains("target")) target = gate_spec_from_json(config.at("target"));

    Outcome outcome;
    std::string name;
    if (schedule.contains("builtin")) {
      name = schedule.at("builtin").get<std::string>();
      const Json opts = schedule.value("options", Json::object());
      if (!opts.is_object()) throw ConfigError("builtin options must be an object");
      outcome = find_builtin(name)(model, opts);
    } else {
      name = "custom";
      if (!target) throw ConfigError("an explicit schedule needs a 'target'");
      outcome.gate = propagate(model, schedule_from_json(device_kind(model), schedule));
      outcome.target = *target;
    }
    if (target) outcome.target = *target;

    FidelityReport report = make_report(outcome.gate, outcome.target, device_kind_name(device_kind(model)), name);
    report.diagnostics = outcome.diagnostics;
    return report;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
}

std::vector<SweepRow> sweep(const Json& config) {
  if (!config.is_object() || !config.contains("sweep")) throw ConfigError("configuration needs a 'sweep' block");
  const Json& block = config.at("sweep");
  if (!block.is_object() || !block.contains("parameter") || !block.at("parameter").is_string()) {
    throw ConfigError("sweep needs a string 'parameter'");
  }
  if (!block.contains("values") || !block.at("values").is_array() || block.at("values").empty()) {
    throw ConfigError("sweep needs a non-empty 'values' array");
  }
  const std::string parameter = block.at("parameter").get<std::string>();

  Json base = config;
  base.erase("sweep");
  if (!base.contains("schedule")) throw ConfigError("configuration needs 'schedule'");
  base["schedule"] = normalized_schedule(base.at("schedule"));

  std::string path = parameter;
  if (parameter.find('.') == std::string::npos) {
    path = base.at("schedule").contains("builtin") ? "schedule.options." + parameter : "device.params." + parameter;
  }

  std::vector<SweepRow> rows;
  for (const Json& v : block.at("values")) {
    if (!v.is_number()) throw ConfigError("sweep values must be numbers");
    Json point = base;
    set_path(point, path, v.get<double>());
    rows.push_back({v.get<double>(), simulate(point)});
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::string& parameter, const std::vector<SweepRow>& rows) {
  const auto cell = [&](const std::optional<double>& v) {
    if (v) out << *v;
  };
  out << std::setprecision(17);
  out << parameter << ",distance,leakage,lamb_dicke_ratio,detuning_ratio,rwa_ratio\n";
  for (const SweepRow& row : rows) {
    out << row.value << ',' << row.report.distance << ',' << row.report.diagnostics.leakage << ',';
    cell(row.report.diagnostics.lamb_dicke_ratio);
    out << ',';
    cell(row.report.diagnostics.detuning_ratio);
    out << ',';
    cell(row.report.diagnostics.rwa_ratio);
    out << '\n';
  }
}

std::vector<IdentityResult> identity_suite(bool inject_sign_error) {
  std::vector<IdentityResult> out;
  const auto add = [&](std::string name, double d) { out.push_back({std::move(name), d}); };
  const ComplexMatrix q_pi = phase_gate(kPi);
  const ComplexMatrix cnot = controlled_gate(pauli(Axis::X), 1);

  const double first_phi = inject_sign_error ? -kPi / 2.0 : kPi / 2.0;
  const ComplexMatrix cnot_built = embed_1bit(rotation_gate(kPi / 4.0, first_phi), 2, 2) * q_pi *
                                   embed_1bit(rotation_gate(kPi / 4.0, -kPi / 2.0), 2, 2);
  add("cnot_from_rotations_and_phase", phase_distance(cnot_built, cnot));
  add("cnot_decomposition_report", verify_cnot_decomposition().distance);

  const ComplexMatrix xor_u = xor_gate();
  add("xor_equals_i_q_pi", (xor_u - kI * q_pi).cwiseAbs().maxCoeff());
  const ComplexMatrix qpi = qpi_sequence();
  add("dots_qpi_sequence_vs_q_pi", phase_distance(qpi, q_pi));
  add("dots_qpi_sequence_vs_xor", phase_distance(qpi, xor_u));

  add("dots_exchange_pi_2_is_swap", phase_distance(evolve_schedule(exchange_schedule(kPi / 2.0)), swap_gate()));
  add("dots_exchange_pi_4_is_sqrt_swap",
      phase_distance(evolve_schedule(exchange_schedule(kPi / 4.0)), sqrt_swap(Sign::Plus)));
  const ComplexMatrix sp = sqrt_swap(Sign::Plus);
  const ComplexMatrix sm = sqrt_swap(Sign::Minus);
  add("sqrt_swap_plus_squared", (sp * sp - swap_gate()).cwiseAbs().maxCoeff());
  add("sqrt_swap_minus_squared", (sm * sm - swap_gate()).cwiseAbs().maxCoeff());
  add("dots_exchange_closed_form",
      (evolve_schedule(exchange_schedule(0.7)) - exchange_closed_form(0.7)).cwiseAbs().maxCoeff());

  const double theta = kPi / 3.0;
  const double phi = kPi / 5.0;
  add("dots_rotation_pulse",
      (evolve_schedule(rotation_schedule(theta, phi)) - embed_1bit(rotation_gate(theta, phi), 1, 2))
          .cwiseAbs()
          .maxCoeff());
  const RotationPulse pulse = pulse_for_rotation(theta, phi, 0.3);
  add("atom_rwa_pulse_rotation",
      phase_distance(rwa_propagator(AtomParams::resonant(10.0, 0.3, pulse.phase), pulse.duration),
                     rotation_gate(theta, phi)));

  double sigma_tau = 0.0;
  for (const IdentityCheck& c : sigma_tau_identities()) sigma_tau = std::max(sigma_tau, c.residual);
  add("sigma_tau_algebra", sigma_tau);

  const IonTrapParams ions;
  const CiracZollerGate cz = cirac_zoller_gate(ions);
  add("cirac_zoller_reduced_is_q_pi", phase_distance(cz.reduced, q_pi));
  add("cirac_zoller_routes_agree",
      (cz.full - cirac_zoller_gate(ions, PropagatorRoute::Exponential).full).cwiseAbs().maxCoeff());

  CavityParams cavity;
  cavity.omega_ab = 1.0;
  cavity.nu = 1.5;
  cavity.g = 0.01;
  const double t = solve_time_for_eta(cavity, kPi);
  add("cavity_dispersive_q_pi", phase_distance(phase_gate_sim(cavity, t).gate, q_pi));

  const SMParams smp;
  const StateVector psi = sm_gate(smp, smp.entangling_time()) * basis_state(4, 0);
  StateVector bell = StateVector::Zero(4);
  bell(0) = 1.0 / std::sqrt(2.0);
  bell(3) = -kI / std::sqrt(2.0);
  add("sorensen_molmer_bell_state", 1.0 - std::norm(bell.dot(psi)));

  JPParams jpp;
  jpp.Omega = 1.0;
  jpp.modes = {{0.1, 0.1, 2.0}, {0.05, -0.08, 3.0}};
  const ComplexMatrix jp = jp_gate(jpp, jp_entangling_time(jpp)).gate;
  add("jonathan_plenio_balanced_amplitudes", std::abs(std::abs(jp(1, 1)) - std::abs(jp(2, 1))));
  return out;
}

}  // namespace qdevsim::cli
