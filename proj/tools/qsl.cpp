// Copyright 2026 The qslkit Authors
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qslkit/errors.hpp"
#include "qslkit/json_io.hpp"
#include "qslkit/mlbound.hpp"
#include "qslkit/qubit.hpp"
#include "qslkit/sampling.hpp"
#include "qslkit/saturation.hpp"
#include "qslkit/states.hpp"

namespace {

using nlohmann::json;

// 17 significant digits round-trip doubles exactly, so regenerated tables are
// byte-identical and safe to compare against golden files.
std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw qslkit::SchemaError(out_path + ": cannot open file for writing");
  }
  out << content;
}

struct SweepRow {
  std::vector<std::pair<std::string, double>> fields;
  // Integer-valued columns (the is_min flag) are emitted without a decimal.
  std::vector<std::pair<std::string, int>> flags;
};

std::string render_rows(const std::vector<SweepRow>& rows, const std::string& format) {
  if (format == "json") {
    json array = json::array();
    for (const SweepRow& row : rows) {
      json entry;
      for (const auto& [name, value] : row.fields) {
        entry[name] = value;
      }
      for (const auto& [name, value] : row.flags) {
        entry[name] = value;
      }
      array.push_back(std::move(entry));
    }
    return array.dump(2) + "\n";
  }
  std::ostringstream out;
  if (!rows.empty()) {
    bool first = true;
    for (const auto& [name, value] : rows.front().fields) {
      out << (first ? "" : ",") << name;
      first = false;
    }
    for (const auto& [name, value] : rows.front().flags) {
      out << (first ? "" : ",") << name;
      first = false;
    }
    out << "\n";
  }
  for (const SweepRow& row : rows) {
    bool first = true;
    for (const auto& [name, value] : row.fields) {
      out << (first ? "" : ",") << format_double(value);
      first = false;
    }
    for (const auto& [name, value] : row.flags) {
      out << (first ? "" : ",") << value;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

int run_alpha_sweep(int count, const std::string& out, const std::string& format) {
  if (count < 2) {
    throw qslkit::DomainError("count must be at least 2");
  }
  std::vector<SweepRow> rows;
  rows.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double delta = static_cast<double>(i) / (count - 1);
    const qslkit::ObjectiveMinimum m = qslkit::minimize_objective(delta);
    rows.push_back({{{"delta", delta}, {"z_min", m.z_min}, {"alpha", m.alpha}}, {}});
  }
  emit(out, render_rows(rows, format));
  return 0;
}

int run_objective_curves(std::vector<double> deltas, const std::string& out,
                         const std::string& format) {
  if (deltas.empty()) {
    deltas = {0.9, 0.7, 0.5, 0.3, 0.1};
  }
  for (double delta : deltas) {
    if (!(delta > 0.0 && delta < 1.0)) {
      throw qslkit::DomainError("objective curves need delta strictly inside (0, 1)");
    }
  }
  const int samples = 2001;
  std::vector<SweepRow> rows;
  rows.reserve(deltas.size() * (samples + 1));
  for (double delta : deltas) {
    const double s = std::sqrt(delta);
    for (int i = 0; i < samples; ++i) {
      const double z = -s + 2.0 * s * static_cast<double>(i) / (samples - 1);
      rows.push_back({{{"delta", delta}, {"z", z}, {"f", qslkit::objective(delta, z)}},
                      {{"is_min", 0}}});
    }
    const qslkit::ObjectiveMinimum m = qslkit::minimize_objective(delta);
    rows.push_back({{{"delta", delta}, {"z", m.z_min}, {"f", m.alpha}}, {{"is_min", 1}}});
  }
  emit(out, render_rows(rows, format));
  return 0;
}

int run_qubit_alpha_sweep(int count, double purity, double single_delta,
                          const std::string& out, const std::string& format) {
  std::vector<SweepRow> rows;
  if (single_delta >= 0.0) {
    // Single-point query; an unreachable fidelity for this purity exits 4.
    const qslkit::QubitObjectiveMinimum m = qslkit::qubit_alpha(single_delta, purity);
    rows.push_back({{{"delta", single_delta},
                     {"purity", purity},
                     {"z_min", m.z_min},
                     {"alpha", m.alpha_p}},
                    {}});
    emit(out, render_rows(rows, format));
    return 0;
  }
  if (count < 2) {
    throw qslkit::DomainError("count must be at least 2");
  }
  // Fidelities below 2(1 - purity) are unreachable on a unitary orbit, so the
  // sweep starts at the feasibility floor.
  const double floor = std::max(0.0, 2.0 * (1.0 - purity));
  rows.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double delta = floor + (1.0 - floor) * static_cast<double>(i) / (count - 1);
    const qslkit::QubitObjectiveMinimum m = qslkit::qubit_alpha(delta, purity);
    rows.push_back(
        {{{"delta", delta}, {"purity", purity}, {"z_min", m.z_min}, {"alpha", m.alpha_p}},
         {}});
  }
  emit(out, render_rows(rows, format));
  return 0;
}

int run_validate(int count, int dim_min, int dim_max, std::uint64_t seed,
                 double tolerance, const std::string& out) {
  if (count < 0) {
    throw qslkit::DomainError("count must be nonnegative");
  }
  if (dim_min < 2 || dim_max > 8 || dim_min > dim_max) {
    throw qslkit::DomainError("dimensions must satisfy 2 <= dim-min <= dim-max <= 8");
  }

  qslkit::Sampler sampler(seed);
  json violations = json::array();
  std::optional<double> worst_standard, worst_dual, worst_overlap;
  const auto track = [](std::optional<double>& worst, double margin) {
    if (!worst || margin < *worst) {
      worst = margin;
    }
  };

  for (int i = 0; i < count; ++i) {
    const int dim = sampler.uniform_int(dim_min, dim_max);
    // Every third sample is pure so the rank-1 edge stays covered.
    const qslkit::DensityMatrix rho =
        (i % 3 == 2) ? qslkit::DensityMatrix([&] {
          const qslkit::ComplexVector v = sampler.random_pure(dim);
          return qslkit::ComplexMatrix(v * v.adjoint());
        }())
                     : sampler.random_density(dim);
    const qslkit::Hamiltonian h = sampler.random_hamiltonian(dim, 1.0);
    const double t = sampler.uniform(0.01, 10.0);

    const qslkit::DensityMatrix rho_t = qslkit::evolve(rho, h, t);
    const double delta = qslkit::fidelity(rho, rho_t);

    const qslkit::BoundReport standard = qslkit::ml_bound(rho, h, delta);
    if (!standard.unbounded) {
      const double margin = t - standard.tau_lower;
      track(worst_standard, margin);
      if (margin < -tolerance) {
        violations.push_back({{"sample", i}, {"kind", "standard"}, {"margin", margin}});
      }
    }
    const qslkit::BoundReport dual = qslkit::dual_ml_bound(rho, h, delta);
    if (!dual.unbounded) {
      const double margin = t - dual.tau_lower;
      track(worst_dual, margin);
      if (margin < -tolerance) {
        violations.push_back({{"sample", i}, {"kind", "dual"}, {"margin", margin}});
      }
    }
    // The fidelity maximizes the squared overlap over all purifications, so
    // the canonical purification must come out below it.
    const qslkit::Purification w = qslkit::purify(rho);
    const double overlap = qslkit::purified_overlap(w, h, t);
    const double margin = delta - overlap;
    track(worst_overlap, margin);
    if (margin < -tolerance) {
      violations.push_back({{"sample", i}, {"kind", "overlap"}, {"margin", margin}});
    }
  }

  const auto or_null = [](const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
  };
  const json report{{"schema", 1},
                    {"seed", seed},
                    {"count", count},
                    {"dim_min", dim_min},
                    {"dim_max", dim_max},
                    {"tolerance", tolerance},
                    {"violation_count", violations.size()},
                    {"violations", violations},
                    {"worst_standard_margin", or_null(worst_standard)},
                    {"worst_dual_margin", or_null(worst_dual)},
                    {"worst_overlap_margin", or_null(worst_overlap)}};
  emit(out, report.dump(2) + "\n");
  if (!violations.empty()) {
    std::cerr << "error: " << violations.size() << " bound violation(s)\n";
    return 3;
  }
  return 0;
}

int run_construct(const std::string& spec_path, const std::string& state_out,
                  double tolerance, const std::string& out) {
  const qslkit::SaturatingSpec spec = qslkit::spec_from_json(qslkit::load_json_file(spec_path));
  const qslkit::DensityMatrix state = qslkit::construct_saturating_state(spec);
  const qslkit::Hamiltonian& h = spec.hamiltonian;

  const double energy = qslkit::expected_energy(state, h);
  const double ground = h.levels()[spec.level0].energy;
  const double gap = energy - ground;
  // The saturation time follows from the bound itself; the degenerate
  // delta = 1 state is stationary, so any positive time serves.
  const double tau = gap > 1e-12 ? qslkit::alpha(spec.delta) / gap : 1.0;

  const qslkit::SaturationReport report =
      qslkit::check_saturation(state, h, tau, spec.delta, tolerance);
  if (!state_out.empty()) {
    qslkit::write_json_file(state_out, qslkit::state_to_json(state));
  }
  const json output{{"schema", 1},
                    {"tau_star", tau},
                    {"state", qslkit::state_to_json(state)},
                    {"report", qslkit::report_to_json(report)}};
  emit(out, output.dump(2) + "\n");
  if (!report.saturates) {
    std::cerr << "error: constructed state failed its own saturation check\n";
    return 3;
  }
  return 0;
}

int run_check(const std::string& state_path, const std::string& h_path, double tau,
              double delta, double tolerance, const std::string& out) {
  const qslkit::DensityMatrix rho =
      qslkit::state_from_json(qslkit::load_json_file(state_path));
  const qslkit::Hamiltonian h =
      qslkit::hamiltonian_from_json(qslkit::load_json_file(h_path));
  const qslkit::SaturationReport report =
      qslkit::check_saturation(rho, h, tau, delta, tolerance);
  emit(out, qslkit::report_to_json(report).dump(2) + "\n");
  return 0;
}

int run_minimal_time(const std::string& state_path, const std::string& h_path,
                     double delta, double horizon, const std::string& out) {
  const qslkit::DensityMatrix rho =
      qslkit::state_from_json(qslkit::load_json_file(state_path));
  const qslkit::Hamiltonian h =
      qslkit::hamiltonian_from_json(qslkit::load_json_file(h_path));
  if (horizon <= 0.0) {
    const double spread = h.max_energy() - h.min_energy();
    if (spread <= 0.0) {
      throw qslkit::DegenerateHamiltonianError("all energy levels coincide");
    }
    horizon = 50.0 * M_PI / spread;
  }
  const std::optional<double> time =
      qslkit::minimal_time_to_fidelity(rho, h, delta, horizon);
  const json output{{"schema", 1},
                    {"delta", delta},
                    {"horizon", horizon},
                    {"found", time.has_value()},
                    {"time", time ? json(*time) : json(nullptr)}};
  emit(out, output.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Speed-limit toolkit: bound tables, randomized validation, and "
               "construction/verification of minimal-time states"};
  app.require_subcommand(1);

  std::string out;
  std::string format = "csv";
  // Subcommands must not share bound variables: every default_val() is
  // applied at parse time whether or not its subcommand ran, so a shared
  // variable would end up with whichever default was registered last.
  int alpha_count = 1001;
  int qubit_count = 1001;
  int validate_count = 100;
  double purity = 1.0;
  double qubit_delta = -1.0;
  std::vector<double> deltas;
  std::uint64_t seed = 1;
  int dim_min = 2;
  int dim_max = 6;
  double tolerance = 1e-8;
  double validate_tolerance = 1e-9;
  std::string spec_path, state_path, h_path, state_out;
  double tau = 0.0;
  double delta = 0.0;
  double horizon = 0.0;

  auto* alpha_sweep =
      app.add_subcommand("alpha-sweep", "Tabulate the bound factor over fidelity");
  alpha_sweep->add_option("--count", alpha_count, "Number of fidelity samples");
  alpha_sweep->add_option("--out", out, "Output path (stdout when omitted)");
  alpha_sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* curves = app.add_subcommand(
      "objective-curves", "Sample the bound objective across its domain per fidelity");
  curves->add_option("--delta", deltas, "Fidelities to tabulate (default 0.9 0.7 0.5 0.3 0.1)");
  curves->add_option("--out", out, "Output path (stdout when omitted)");
  curves->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* qubit_sweep = app.add_subcommand(
      "qubit-alpha-sweep", "Tabulate the purity-resolved bound factor over fidelity");
  qubit_sweep->add_option("--count", qubit_count, "Number of fidelity samples");
  qubit_sweep->add_option("--purity", purity, "State purity in [1/2, 1]");
  qubit_sweep->add_option("--delta", qubit_delta,
                          "Query a single fidelity instead of sweeping");
  qubit_sweep->add_option("--out", out, "Output path (stdout when omitted)");
  qubit_sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* validate = app.add_subcommand(
      "validate", "Randomized campaign checking both bounds and the overlap inequality");
  validate->add_option("--count", validate_count, "Number of samples");
  validate->add_option("--dim-min", dim_min, "Smallest dimension");
  validate->add_option("--dim-max", dim_max, "Largest dimension");
  validate->add_option("--seed", seed, "RNG seed; fixes the whole campaign");
  validate->add_option("--tol", validate_tolerance, "Violation tolerance");
  validate->add_option("--out", out, "Output path (stdout when omitted)");

  auto* construct = app.add_subcommand(
      "construct", "Build the minimal-time state described by a spec file and verify it");
  construct->add_option("--spec", spec_path, "Spec JSON file")->required();
  construct->add_option("--state-out", state_out, "Also write the bare state JSON here");
  construct->add_option("--tol", tolerance, "Verification tolerance");
  construct->add_option("--out", out, "Output path (stdout when omitted)");

  auto* check = app.add_subcommand(
      "check", "Evaluate the saturation conditions for a state at a given time");
  check->add_option("--state", state_path, "State JSON file")->required();
  check->add_option("--hamiltonian", h_path, "Hamiltonian JSON file")->required();
  check->add_option("--tau", tau, "Evolution time to test")->required();
  check->add_option("--delta", delta, "Target fidelity")->required();
  check->add_option("--tol", tolerance, "Residual tolerance");
  check->add_option("--out", out, "Output path (stdout when omitted)");

  auto* minimal = app.add_subcommand(
      "minimal-time", "Earliest time at which a state reaches a target fidelity");
  minimal->add_option("--state", state_path, "State JSON file")->required();
  minimal->add_option("--hamiltonian", h_path, "Hamiltonian JSON file")->required();
  minimal->add_option("--delta", delta, "Target fidelity")->required();
  minimal->add_option("--horizon", horizon, "Search horizon (auto when omitted)");
  minimal->add_option("--out", out, "Output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (alpha_sweep->parsed()) {
      return run_alpha_sweep(alpha_count, out, format);
    }
    if (curves->parsed()) {
      return run_objective_curves(deltas, out, format);
    }
    if (qubit_sweep->parsed()) {
      return run_qubit_alpha_sweep(qubit_count, purity, qubit_delta, out, format);
    }
    if (validate->parsed()) {
      return run_validate(validate_count, dim_min, dim_max, seed, validate_tolerance, out);
    }
    if (construct->parsed()) {
      return run_construct(spec_path, state_out, tolerance, out);
    }
    if (check->parsed()) {
      return run_check(state_path, h_path, tau, delta, tolerance, out);
    }
    if (minimal->parsed()) {
      return run_minimal_time(state_path, h_path, delta, horizon, out);
    }
  } catch (const qslkit::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qslkit::InfeasibleFidelityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const qslkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
