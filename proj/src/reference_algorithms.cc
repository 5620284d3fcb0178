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

#include "qtt/reference_algorithms.h"

#include <stdexcept>
#include <string>

namespace qtt {

ReferenceAlgorithm build_full_query(size_t M, size_t n) {
    return build_advised(M, n, 0);
}

ReferenceAlgorithm build_advised(size_t M, size_t n, size_t k) {
    if (M < 1 || n < 1 || n > 20) {
        throw std::invalid_argument("reference algorithms need M >= 1 and n in [1, 20]");
    }
    size_t per_block = k / M;
    if (per_block > n) {
        throw std::invalid_argument("advice length " + std::to_string(k) + " exceeds M*n = " + std::to_string(M * n));
    }
    size_t window_bits = n - per_block;
    size_t T = (size_t{1} << window_bits) - 1;
    uint64_t scratch_dim = uint64_t{1} << per_block;
    uint64_t workspace_dim = (uint64_t{1} << n) * scratch_dim;

    auto generator = [=](size_t block, const BitString &advice) {
        uint64_t window = advice.value_at((block - 1) * per_block, per_block);
        QueryList list;
        list.reserve(T);
        for (uint64_t t = 0; t < T; t++) {
            list.push_back({static_cast<uint32_t>(block), (window << window_bits) + t});
        }
        PrequeryState pre(T, workspace_dim);
        pre.add(std::move(list), window, Rational(1));
        return pre;
    };
    auto rule = [=](std::span<const QueryWord>, std::span<const uint8_t> answers, uint64_t scratch) {
        uint64_t zeros = 0;
        for (uint8_t a : answers) {
            zeros += a == 0 ? 1 : 0;
        }
        return (scratch << window_bits) + zeros;
    };
    AdviceFunction advice(k, [=](const StepInstance &instance) {
        BitString h;
        for (size_t j = 1; j <= M; j++) {
            h.append_value(first_bits(instance.code(j), n, per_block), per_block);
        }
        while (h.size() < k) {
            h.push_back(false);
        }
        return h;
    });
    return {NonadaptiveComputer(M, n, T, k, n, workspace_dim, generator, FinalTransform::output_rule(rule)),
            std::move(advice)};
}

}  // namespace qtt
