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

#pragma once

#include <string>

#include "json.hpp"
#include "qslkit/mlbound.hpp"
#include "qslkit/saturation.hpp"
#include "qslkit/states.hpp"

namespace qslkit {

// Complex matrices travel as {"dim": n, "re": [...], "im": [...]} with the
// entry arrays flat in row-major order; vectors as {"re": [...], "im": [...]}.
// Density matrices and Hamiltonians share the matrix schema. Readers throw
// SchemaError on malformed input, with the file path and parse position when
// reading from disk.

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);

nlohmann::json hamiltonian_to_json(const Hamiltonian& h);
Hamiltonian hamiltonian_from_json(const nlohmann::json& j);

// {"hamiltonian": matrix, "level0": k, "level1": l, "delta": d,
//  "weights": [...], "pairing": [[vector, vector], ...]}
nlohmann::json spec_to_json(const SaturatingSpec& spec);
SaturatingSpec spec_from_json(const nlohmann::json& j);

// Report serializers; every report carries "schema": 1.
nlohmann::json report_to_json(const SaturationReport& report);
nlohmann::json bound_to_json(const BoundReport& report);

/// Parses the file at `path`; SchemaError messages carry the path and the
/// parser's position information.
nlohmann::json load_json_file(const std::string& path);

/// Writes pretty-printed JSON followed by a newline.
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace qslkit
