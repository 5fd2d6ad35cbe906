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

#include "qslkit/json_io.hpp"

#include <fstream>
#include <utility>

#include "qslkit/errors.hpp"

namespace qslkit {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key) {
  if (!j.is_object()) {
    throw SchemaError(std::string("expected an object holding \"") + key + "\"");
  }
  const auto it = j.find(key);
  if (it == j.end()) {
    throw SchemaError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

double require_number(const json& j, const char* key) {
  const json& field = require_field(j, key);
  if (!field.is_number()) {
    throw SchemaError(std::string("field \"") + key + "\" must be a number");
  }
  return field.get<double>();
}

int require_integer(const json& j, const char* key) {
  const json& field = require_field(j, key);
  if (!field.is_number_integer()) {
    throw SchemaError(std::string("field \"") + key + "\" must be an integer");
  }
  return field.get<int>();
}

std::vector<double> require_number_array(const json& field, const char* key) {
  if (!field.is_array()) {
    throw SchemaError(std::string("field \"") + key + "\" must be an array");
  }
  std::vector<double> values;
  values.reserve(field.size());
  for (const json& entry : field) {
    if (!entry.is_number()) {
      throw SchemaError(std::string("field \"") + key +
                        "\" must contain only numbers");
    }
    values.push_back(entry.get<double>());
  }
  return values;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  }
  return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const int dim = require_integer(j, "dim");
  if (dim < 1) {
    throw SchemaError("\"dim\" must be positive");
  }
  const std::vector<double> re = require_number_array(require_field(j, "re"), "re");
  const std::vector<double> im = require_number_array(require_field(j, "im"), "im");
  const std::size_t expected = static_cast<std::size_t>(dim) * dim;
  if (re.size() != expected || im.size() != expected) {
    throw SchemaError("\"re\" and \"im\" must hold dim*dim entries in row-major order");
  }
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) {
      const std::size_t flat = static_cast<std::size_t>(i) * dim + k;
      m(i, k) = Complex(re[flat], im[flat]);
    }
  }
  return m;
}

json vector_to_json(const ComplexVector& v) {
  json re = json::array();
  json im = json::array();
  for (int i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexVector vector_from_json(const json& j) {
  const std::vector<double> re = require_number_array(require_field(j, "re"), "re");
  const std::vector<double> im = require_number_array(require_field(j, "im"), "im");
  if (re.size() != im.size()) {
    throw SchemaError("vector \"re\" and \"im\" must have equal length");
  }
  ComplexVector v(static_cast<int>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) {
    v(static_cast<int>(i)) = Complex(re[i], im[i]);
  }
  return v;
}

json state_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

DensityMatrix state_from_json(const json& j) {
  return DensityMatrix(matrix_from_json(j));
}

json hamiltonian_to_json(const Hamiltonian& h) { return matrix_to_json(h.matrix()); }

Hamiltonian hamiltonian_from_json(const json& j) {
  return Hamiltonian(matrix_from_json(j));
}

json spec_to_json(const SaturatingSpec& spec) {
  json weights = json::array();
  for (double w : spec.weights) {
    weights.push_back(w);
  }
  json pairing = json::array();
  for (const auto& pair : spec.pairing) {
    pairing.push_back(json::array(
        {vector_to_json(pair.first), vector_to_json(pair.second)}));
  }
  return json{{"hamiltonian", hamiltonian_to_json(spec.hamiltonian)},
              {"level0", spec.level0},
              {"level1", spec.level1},
              {"delta", spec.delta},
              {"weights", std::move(weights)},
              {"pairing", std::move(pairing)}};
}

SaturatingSpec spec_from_json(const json& j) {
  SaturatingSpec spec{hamiltonian_from_json(require_field(j, "hamiltonian")),
                      require_integer(j, "level0"),
                      require_integer(j, "level1"),
                      require_number(j, "delta"),
                      {},
                      {}};
  spec.weights = require_number_array(require_field(j, "weights"), "weights");
  const json& pairing = require_field(j, "pairing");
  if (!pairing.is_array()) {
    throw SchemaError("field \"pairing\" must be an array of vector pairs");
  }
  for (const json& pair : pairing) {
    if (!pair.is_array() || pair.size() != 2) {
      throw SchemaError("each pairing entry must be a two-element array");
    }
    spec.pairing.emplace_back(vector_from_json(pair[0]), vector_from_json(pair[1]));
  }
  return spec;
}

json report_to_json(const SaturationReport& report) {
  const auto condition = [](const ConditionResult& c) {
    return json{{"pass", c.pass}, {"residual", c.residual}};
  };
  json j{{"schema", 1},
         {"tau_star", report.tau_star},
         {"delta", report.delta},
         {"condition_i", condition(report.condition_i)},
         {"condition_ii", condition(report.condition_ii)},
         {"eigenvector_residuals", report.eigenvector_residuals},
         {"condition_iii", condition(report.condition_iii)},
         {"compression_residual", report.compression_residual},
         {"q0", report.q0},
         {"q1", report.q1},
         {"q0_residual", report.q0_residual},
         {"q1_residual", report.q1_residual},
         {"fidelity_error", report.fidelity_error},
         {"bound_error", report.bound_error},
         {"saturates", report.saturates}};
  j["compression_phase"] =
      report.compression_phase ? json(*report.compression_phase) : json(nullptr);
  return j;
}

json bound_to_json(const BoundReport& report) {
  return json{{"schema", 1},
              {"variant",
               report.variant == BoundReport::Variant::standard ? "standard" : "dual"},
              {"delta", report.delta},
              {"energy", report.energy},
              {"ground_energy", report.ground_energy},
              {"top_energy", report.top_energy},
              {"unbounded", report.unbounded},
              {"tau_lower", report.tau_lower}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError(path + ": cannot open file");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw SchemaError(path + ": cannot open file for writing");
  }
  out << j.dump(2) << "\n";
}

}  // namespace qslkit
