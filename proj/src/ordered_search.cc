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

#include "qtt/ordered_search.h"

#include <optional>
#include <sstream>

namespace qtt {

StepInstance::StepInstance(size_t n, std::vector<uint64_t> steps) : n_(n), steps_(std::move(steps)) {
    if (n_ == 0 || n_ > 32) {
        throw std::invalid_argument("location width n must be in [1, 32]");
    }
    if (steps_.empty()) {
        throw std::invalid_argument("an instance needs at least one block");
    }
    for (uint64_t s : steps_) {
        if (s < 1 || s > N()) {
            throw std::out_of_range("step " + std::to_string(s) + " outside [1, " + std::to_string(N()) + "]");
        }
    }
}

uint64_t StepInstance::step(size_t block) const {
    if (block < 1 || block > steps_.size()) {
        throw std::out_of_range("block " + std::to_string(block) + " outside [1, " + std::to_string(steps_.size()) +
                                "]");
    }
    return steps_[block - 1];
}

std::string StepInstance::to_string() const {
    std::string out = "M=" + std::to_string(M()) + " n=" + std::to_string(n_) + " steps=";
    for (size_t k = 0; k < steps_.size(); k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(steps_[k]);
    }
    return out;
}

StepInstance StepInstance::parse(std::string_view literal) {
    auto number = [](const std::string &key, const std::string &text) -> uint64_t {
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("bad value '" + text + "' for '" + key + "' in instance literal");
        }
        return std::stoull(text);
    };
    std::istringstream in{std::string(literal)};
    std::string token;
    std::optional<uint64_t> m;
    std::optional<uint64_t> n;
    std::optional<std::vector<uint64_t>> steps;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("instance literal token '" + token + "' lacks '='");
        }
        std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        if (key == "M") {
            m = number(key, value);
        } else if (key == "n") {
            n = number(key, value);
        } else if (key == "steps") {
            steps.emplace();
            std::istringstream vs(value);
            std::string item;
            while (std::getline(vs, item, ',')) {
                steps->push_back(number(key, item));
            }
        } else {
            throw std::invalid_argument("unknown key '" + key + "' in instance literal");
        }
    }
    if (!n || !steps) {
        throw std::invalid_argument("instance literal needs n= and steps=");
    }
    if (m && *m != steps->size()) {
        throw std::invalid_argument("instance literal has M=" + std::to_string(*m) + " but " +
                                    std::to_string(steps->size()) + " steps");
    }
    return StepInstance(static_cast<size_t>(*n), std::move(*steps));
}

void ProblemSpec::validate() const {
    if (M < 1) {
        throw std::invalid_argument("M must be at least 1");
    }
    if (n < 1 || n > 32) {
        throw std::invalid_argument("n must be in [1, 32]");
    }
    if (p < 1 || p > n) {
        throw std::invalid_argument("p must be in [1, n]");
    }
}

std::string bits_to_string(uint64_t value, size_t width) {
    std::string out(width, '0');
    for (size_t k = 0; k < width; k++) {
        if ((value >> (width - 1 - k)) & 1) {
            out[k] = '1';
        }
    }
    return out;
}

std::string bin_n(size_t n, uint64_t rank) {
    if (n == 0 || n > 63 || rank < 1 || rank > (uint64_t{1} << n)) {
        throw std::out_of_range("rank " + std::to_string(rank) + " outside [1, 2^" + std::to_string(n) + "]");
    }
    return bits_to_string(rank - 1, n);
}

std::string step_string(size_t n, uint64_t step) {
    if (n == 0 || n > 32 || step < 1 || step > (uint64_t{1} << n)) {
        throw std::out_of_range("step outside [1, N]");
    }
    uint64_t N = uint64_t{1} << n;
    return std::string(step - 1, '0') + std::string(N - step + 1, '1');
}

std::string eval_G(const StepInstance &instance, size_t block, size_t p) {
    if (p < 1 || p > instance.n()) {
        throw std::out_of_range("answer width p outside [1, n]");
    }
    return bits_to_string(last_bits(instance.code(block), p), p);
}

uint64_t instance_count(size_t M, size_t n) {
    uint64_t total = 1;
    for (size_t k = 0; k < M; k++) {
        if (n >= 63 || total > (uint64_t{1} << (63 - n))) {
            return 0;
        }
        total <<= n;
    }
    return total;
}

std::vector<StepInstance> enumerate_instances(size_t M, size_t n, uint64_t budget) {
    uint64_t count = instance_count(M, n);
    if (count == 0 || count > budget) {
        throw BudgetExceeded("sweep over " + std::to_string(M) + " blocks of width " + std::to_string(n) +
                             " exceeds the budget of " + std::to_string(budget) + " instances");
    }
    std::vector<StepInstance> out;
    out.reserve(count);
    uint64_t N = uint64_t{1} << n;
    std::vector<uint64_t> steps(M, 1);
    for (uint64_t t = 0; t < count; t++) {
        out.emplace_back(n, steps);
        for (size_t k = M; k-- > 0;) {
            if (steps[k] < N) {
                steps[k]++;
                break;
            }
            steps[k] = 1;
        }
    }
    return out;
}

}  // namespace qtt
