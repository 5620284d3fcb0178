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

#ifndef QTT_HARNESS_COMMANDS_H
#define QTT_HARNESS_COMMANDS_H

#include <string>
#include <vector>

#include "json.hpp"
#include "qtt/harness/config.h"

namespace qtt {

/// Per-instance rows plus a summary. `passed` is false iff some check in the run failed.
struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    nlohmann::ordered_json summary;
    bool passed = true;

    std::string to_csv() const;
    /// Writes the CSV to `path` and the summary to `path`.summary.json.
    void write(const std::string &path) const;
};

/// Output distribution and error per (instance, block). Passes iff the worst error is at
/// most epsilon.
Report cmd_simulate(const ExperimentConfig &config);

/// Encode, decode and the pigeonhole census over the sweep, with length accounting.
Report cmd_roundtrip(const ExperimentConfig &config);

/// Upper bounds of the reference subjects next to the lower bounds for the parameters.
Report cmd_bounds(const ExperimentConfig &config);

/// Exhaustive audit of the rank, LWSS and substituted-state lemmas.
Report cmd_lemmas(const ExperimentConfig &config);

}  // namespace qtt

#endif
