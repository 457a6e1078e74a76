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

#include "stabmagic/json_io.h"

namespace stabmagic {

nlohmann::json complex_to_json(Complex c) {
    return nlohmann::json::array({c.real(), c.imag()});
}

nlohmann::json vector_to_json(const Vector &v) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); i++) {
        out.push_back(complex_to_json(v[i]));
    }
    return out;
}

nlohmann::json matrix_to_json(const Matrix &m) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(complex_to_json(m(r, c)));
        }
        out.push_back(row);
    }
    return out;
}

Complex complex_from_json(const nlohmann::json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("expected a complex number [re, im], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Vector vector_from_json(const nlohmann::json &j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("expected a non-empty list of complex numbers");
    }
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); i++) {
        v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
    }
    return v;
}

bool json_is_matrix(const nlohmann::json &j) {
    return j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array();
}

Matrix matrix_from_json(const nlohmann::json &j) {
    if (!json_is_matrix(j)) {
        throw std::invalid_argument("expected a matrix (list of rows of [re, im])");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; r++) {
        const auto &row = j[static_cast<size_t>(r)];
        if (static_cast<Eigen::Index>(row.size()) != cols) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (Eigen::Index c = 0; c < cols; c++) {
            m(r, c) = complex_from_json(row[static_cast<size_t>(c)]);
        }
    }
    return m;
}

DensityMatrix density_from_json(const nlohmann::json &j) {
    if (j.is_object()) {
        if (j.contains("state")) {
            return density_from_json(j.at("state"));
        }
        if (j.contains("matrix")) {
            return density_from_json(j.at("matrix"));
        }
        throw std::invalid_argument("state object needs a 'state' or 'matrix' field");
    }
    if (json_is_matrix(j)) {
        return DensityMatrix(matrix_from_json(j));
    }
    return DensityMatrix::pure(StateVector(vector_from_json(j)));
}

}  // namespace stabmagic
