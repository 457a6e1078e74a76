// Copyright 2026 The stabmagic Authors
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

#ifndef STABMAGIC_JSON_IO_H
#define STABMAGIC_JSON_IO_H

// Complex numbers serialize as [re, im]; vectors as lists of those; matrices
// as lists of rows.

#include "json.hpp"
#include "stabmagic/dense.h"

namespace stabmagic {

nlohmann::json complex_to_json(Complex c);
nlohmann::json vector_to_json(const Vector &v);
nlohmann::json matrix_to_json(const Matrix &m);

Complex complex_from_json(const nlohmann::json &j);
Vector vector_from_json(const nlohmann::json &j);
Matrix matrix_from_json(const nlohmann::json &j);

/// True when `j` is a list of rows (a matrix) rather than a list of pairs.
bool json_is_matrix(const nlohmann::json &j);

/// Reads a pure state (vector) or density matrix from JSON. A bare vector or
/// matrix is accepted, as is an object with a "state" or "matrix" field.
DensityMatrix density_from_json(const nlohmann::json &j);

}  // namespace stabmagic

#endif
