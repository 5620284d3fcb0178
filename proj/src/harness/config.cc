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

#include "qtt/harness/config.h"

#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qtt {

namespace {

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

uint64_t parse_count(const std::string &key, const std::string &value) {
    uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
        throw ConfigError("config key '" + key + "' needs a non-negative integer, got '" + value + "'");
    }
    return out;
}

}  // namespace

ErrorParams ExperimentConfig::params() const {
    try {
        return ErrorParams::make(epsilon, c);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

void ExperimentConfig::validate() const {
    if (M < 1 || n < 1 || n > 20) {
        throw ConfigError("need M >= 1 and n in [1, 20]");
    }
    if (k > M * n) {
        throw ConfigError("advice length k = " + std::to_string(k) + " exceeds M*n = " + std::to_string(M * n));
    }
    if (scheme != "multi" && scheme != "single") {
        throw ConfigError("scheme must be 'multi' or 'single', got '" + scheme + "'");
    }
    if (single()) {
        if (M != 1) {
            throw ConfigError("the single-block scheme needs M = 1");
        }
        if (k + 1 > n) {
            throw ConfigError("the single-block scheme needs k + 1 <= n");
        }
    } else {
        if (!std::has_single_bit(M)) {
            throw ConfigError("M must be a power of two");
        }
        if (p < 1 || p > n) {
            throw ConfigError("p must be in [1, n]");
        }
        if (l < 1 || l > M) {
            throw ConfigError("l must be in [1, M]");
        }
    }
    params();
}

void set_config_value(ExperimentConfig &config, const std::string &key, const std::string &value) {
    if (key == "M") {
        config.M = parse_count(key, value);
    } else if (key == "n") {
        config.n = parse_count(key, value);
    } else if (key == "p") {
        config.p = parse_count(key, value);
    } else if (key == "k") {
        config.k = parse_count(key, value);
    } else if (key == "l") {
        config.l = parse_count(key, value);
    } else if (key == "budget") {
        config.budget = parse_count(key, value);
    } else if (key == "epsilon" || key == "c") {
        Rational r;
        try {
            r = parse_rational(value);
        } catch (const std::invalid_argument &e) {
            throw ConfigError("config key '" + key + "': " + e.what());
        }
        (key == "c" ? config.c : config.epsilon) = r;
    } else if (key == "subject") {
        config.subject = value;
    } else if (key == "scheme") {
        config.scheme = value;
    } else if (key == "instance") {
        config.instance = value;
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig config;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::string body = trim(line);
        if (body.empty()) {
            continue;
        }
        auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + " has no '='");
        }
        set_config_value(config, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
    }
    return config;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace qtt
