// Copyright 2026 The qtt Authors
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

#include "qtt/statevec_io.h"

#include <stdexcept>

namespace qtt {

nlohmann::json state_to_json(const SparseState &state) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto &[key, value] : state.amplitudes()) {
        amps.push_back({{"index", key}, {"value", to_string(value)}});
    }
    return {{"dims", state.dims()}, {"amplitudes", amps}};
}

SparseState state_from_json(const nlohmann::json &doc) {
    SparseState state(doc.at("dims").get<std::vector<uint64_t>>());
    for (const auto &entry : doc.at("amplitudes")) {
        auto key = entry.at("index").get<BasisKey>();
        if (state.amplitude(key) != 0) {
            throw std::invalid_argument("duplicate basis index in state document");
        }
        state.add(key, parse_rational(entry.at("value").get<std::string>()));
    }
    return state;
}

nlohmann::json matrix_to_json(const OrthogonalMatrix &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : m.to_rows()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto &v : row) {
            r.push_back(to_string(v));
        }
        rows.push_back(std::move(r));
    }
    return {{"dimension", m.dimension()}, {"rows", rows}};
}

OrthogonalMatrix matrix_from_json(const nlohmann::json &doc) {
    auto dimension = doc.at("dimension").get<uint64_t>();
    const auto &rows_doc = doc.at("rows");
    if (rows_doc.size() != dimension) {
        throw std::invalid_argument("matrix document row count does not match its dimension");
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto &r : rows_doc) {
        std::vector<Rational> row;
        for (const auto &v : r) {
            row.push_back(parse_rational(v.get<std::string>()));
        }
        rows.push_back(std::move(row));
    }
    return OrthogonalMatrix::from_rows(rows);
}

}  // namespace qtt
