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

#ifndef QTT_HARNESS_CONFIG_H
#define QTT_HARNESS_CONFIG_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qtt/compression/error_params.h"

namespace qtt {

/// Bad configuration or usage. Maps to exit status 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Experiment parameters. Read from a flat "key = value" file; '#' starts a comment.
///
/// Keys: M, n, p, k, l, epsilon, c, subject, budget, scheme (multi | single).
struct ExperimentConfig {
    size_t M = 1;
    size_t n = 1;
    size_t p = 1;
    size_t k = 0;
    size_t l = 1;
    Rational epsilon{1, 3};
    Rational c{1, 8};
    /// Built-in subject name or a path to a computer document.
    std::string subject = "full-query";
    uint64_t budget = 4096;
    std::string scheme = "multi";
    /// Restricts simulate to one instance, e.g. "M=1 n=2 steps=3".
    std::optional<std::string> instance;

    ErrorParams params() const;
    bool single() const {
        return scheme == "single";
    }
    /// Throws ConfigError.
    void validate() const;
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string &path);

/// Applies one key = value assignment. Throws ConfigError on unknown keys or bad values.
void set_config_value(ExperimentConfig &config, const std::string &key, const std::string &value);

}  // namespace qtt

#endif
