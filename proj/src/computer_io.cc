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

#include "qtt/computer_io.h"

#include <fstream>
#include <map>
#include <memory>
#include <stdexcept>

namespace qtt {

namespace {

std::string steps_key(const StepInstance &instance) {
    std::string key;
    for (size_t j = 0; j < instance.steps().size(); j++) {
        if (j) {
            key += ",";
        }
        key += std::to_string(instance.steps()[j]);
    }
    return key;
}

}  // namespace

AdvisedComputer computer_from_json(const nlohmann::json &doc) {
    auto M = doc.at("M").get<size_t>();
    auto n = doc.at("n").get<size_t>();
    auto T = doc.at("T").get<size_t>();
    auto k = doc.at("k").get<size_t>();
    auto p = doc.at("p").get<size_t>();
    auto workspace_dim = doc.at("workspace_dim").get<uint64_t>();
    if (k > 20) {
        throw std::invalid_argument("computer documents support advice of at most 20 bits");
    }

    using Table = std::map<std::pair<size_t, BitString>, PrequeryState>;
    auto table = std::make_shared<Table>();
    for (const auto &entry : doc.at("prequery")) {
        auto block = entry.at("block").get<size_t>();
        auto advice = BitString::from_string(entry.at("advice").get<std::string>());
        if (block < 1 || block > M || advice.size() != k) {
            throw std::invalid_argument("prequery entry with bad block or advice length");
        }
        PrequeryState pre(T, workspace_dim);
        for (const auto &term : entry.at("terms")) {
            QueryList list;
            for (const auto &q : term.at("queries")) {
                auto word_block = q.at(0).get<uint32_t>();
                auto loc = BitString::from_string(q.at(1).get<std::string>());
                if (loc.size() != n) {
                    throw std::invalid_argument("query location must have exactly n bits");
                }
                list.push_back({word_block, loc.value()});
            }
            pre.add(std::move(list), term.at("workspace").get<uint64_t>(),
                    parse_rational(term.at("amplitude").get<std::string>()));
        }
        if (!table->emplace(std::make_pair(block, advice), std::move(pre)).second) {
            throw std::invalid_argument("duplicate prequery entry");
        }
    }
    if (table->size() != M * (size_t{1} << k)) {
        throw std::invalid_argument("prequery table must cover every (block, advice) pair");
    }

    RegisterLayout layout{M, n, T, workspace_dim};
    SparseState probe(layout.dims());
    uint64_t dim = probe.total_dimension();
    if (dim == 0 || dim > kMaxDocumentDimension) {
        throw std::invalid_argument("register space too large for a dense matrix document");
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto &r : doc.at("V")) {
        std::vector<Rational> row;
        for (const auto &v : r) {
            row.push_back(parse_rational(v.get<std::string>()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() != dim) {
        throw std::invalid_argument("V must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }

    auto generator = [table](size_t block, const BitString &advice) { return table->at({block, advice}); };
    NonadaptiveComputer computer(M, n, T, k, p, workspace_dim, generator,
                                 FinalTransform::matrix(OrthogonalMatrix::from_rows(rows)));
    for (size_t block = 1; block <= M; block++) {
        for (uint64_t h = 0; h < (uint64_t{1} << k); h++) {
            computer.prequery(block, BitString::from_value(h, k));
        }
    }

    AdviceFunction advice = AdviceFunction::none();
    if (doc.contains("advice")) {
        auto advice_table = std::make_shared<std::map<std::string, BitString>>();
        for (const auto &[key, value] : doc.at("advice").items()) {
            advice_table->emplace(key, BitString::from_string(value.get<std::string>()));
        }
        advice = AdviceFunction(k, [advice_table](const StepInstance &instance) {
            auto it = advice_table->find(steps_key(instance));
            if (it == advice_table->end()) {
                throw std::invalid_argument("advice table has no entry for " + instance.to_string());
            }
            return it->second;
        });
    } else if (k != 0) {
        advice = AdviceFunction(k, [](const StepInstance &) -> BitString {
            throw std::invalid_argument("computer document has no advice table");
        });
    }
    return {std::move(computer), std::move(advice)};
}

AdvisedComputer load_computer(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open computer document '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("computer document '" + path + "' is not valid JSON: " + e.what());
    }
    try {
        return computer_from_json(doc);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("computer document '" + path + "' is malformed: " + e.what());
    }
}

nlohmann::json computer_to_json(const AdvisedComputer &subject, uint64_t advice_budget) {
    const auto &c = subject.computer;
    const RegisterLayout &layout = c.layout();
    SparseState probe(layout.dims());
    uint64_t dim = probe.total_dimension();
    if (dim == 0 || dim > kMaxDocumentDimension) {
        throw std::invalid_argument("register space too large for a dense matrix document");
    }

    nlohmann::json prequery = nlohmann::json::array();
    for (size_t block = 1; block <= c.M(); block++) {
        for (uint64_t h = 0; h < (uint64_t{1} << c.k()); h++) {
            BitString advice = BitString::from_value(h, c.k());
            nlohmann::json terms = nlohmann::json::array();
            PrequeryState pre = c.prequery(block, advice);
            for (const auto &[key, amp] : pre.terms()) {
                nlohmann::json queries = nlohmann::json::array();
                for (const auto &w : key.list) {
                    queries.push_back({w.block, BitString::from_value(w.location, c.n()).to_string()});
                }
                terms.push_back({{"amplitude", to_string(amp)}, {"queries", queries}, {"workspace", key.workspace}});
            }
            prequery.push_back({{"block", block}, {"advice", advice.to_string()}, {"terms", terms}});
        }
    }

    std::vector<std::vector<std::string>> rows(dim, std::vector<std::string>(dim, "0"));
    for (uint64_t col = 0; col < dim; col++) {
        SparseState image = c.final_transform().apply(SparseState::basis(layout.dims(), probe.unflatten(col)), layout,
                                                      c.output_width());
        for (const auto &[key, amp] : image.amplitudes()) {
            rows[probe.flatten(key)][col] = to_string(amp);
        }
    }

    nlohmann::json doc = {{"M", c.M()},
                          {"n", c.n()},
                          {"T", c.T()},
                          {"k", c.k()},
                          {"p", c.output_width()},
                          {"workspace_dim", c.workspace_dim()},
                          {"prequery", prequery},
                          {"V", rows}};
    uint64_t count = instance_count(c.M(), c.n());
    if (count != 0 && count <= advice_budget) {
        nlohmann::json advice = nlohmann::json::object();
        for (const auto &instance : enumerate_instances(c.M(), c.n(), advice_budget)) {
            advice[steps_key(instance)] = subject.advice(instance).to_string();
        }
        doc["advice"] = advice;
    }
    return doc;
}

}  // namespace qtt
