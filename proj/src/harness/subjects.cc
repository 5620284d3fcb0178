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

#include "qtt/harness/subjects.h"

#include <filesystem>
#include <stdexcept>

#include "qtt/computer_io.h"

namespace qtt {

namespace {

uint32_t next_block(size_t block, size_t M) {
    return static_cast<uint32_t>(block % M + 1);
}

uint64_t count_zeros(std::span<const uint8_t> answers) {
    uint64_t zeros = 0;
    for (uint8_t a : answers) {
        zeros += a == 0 ? 1 : 0;
    }
    return zeros;
}

void check_shape(size_t M, size_t n) {
    if (M < 1 || n < 1 || n > 20) {
        throw std::invalid_argument("subjects need M >= 1 and n in [1, 20]");
    }
}

}  // namespace

AdvisedComputer build_zero_query(size_t M, size_t n, size_t k) {
    check_shape(M, n);
    uint64_t workspace_dim = uint64_t{1} << n;
    auto generator = [=](size_t, const BitString &) {
        PrequeryState pre(0, workspace_dim);
        pre.add({}, 0, Rational(1));
        return pre;
    };
    auto rule = [](std::span<const QueryWord>, std::span<const uint8_t>, uint64_t) { return uint64_t{0}; };
    AdviceFunction advice(k, [=](const StepInstance &) { return BitString::from_value(0, k); });
    return {NonadaptiveComputer(M, n, 0, k, n, workspace_dim, generator, FinalTransform::output_rule(rule)),
            std::move(advice)};
}

AdvisedComputer build_shortcut(size_t M, size_t n, size_t k) {
    check_shape(M, n);
    uint64_t N = uint64_t{1} << n;
    size_t T = N - 1;
    size_t flags = std::min(k, M);
    uint64_t workspace_dim = N * 2;
    auto generator = [=](size_t block, const BitString &advice) {
        PrequeryState pre(T, workspace_dim);
        if (block <= flags && advice[block - 1]) {
            pre.add(QueryList(T, QueryWord{next_block(block, M), 0}), (N - 1) * 2 + 1, Rational(1));
            return pre;
        }
        QueryList list;
        for (uint64_t z = 0; z < T; z++) {
            list.push_back({static_cast<uint32_t>(block), z});
        }
        pre.add(std::move(list), 0, Rational(1));
        return pre;
    };
    auto rule = [](std::span<const QueryWord>, std::span<const uint8_t> answers, uint64_t scratch) {
        return scratch == 1 ? uint64_t{0} : count_zeros(answers);
    };
    AdviceFunction advice(k, [=](const StepInstance &instance) {
        BitString h;
        for (size_t j = 1; j <= flags; j++) {
            h.push_back(instance.step(j) == N);
        }
        while (h.size() < k) {
            h.push_back(false);
        }
        return h;
    });
    return {NonadaptiveComputer(M, n, T, k, n, workspace_dim, generator, FinalTransform::output_rule(rule)),
            std::move(advice)};
}

AdvisedComputer build_leaky(size_t M, size_t n) {
    check_shape(M, n);
    constexpr uint64_t kLeakScratch = 6;
    constexpr uint64_t kScratchDim = 8;
    uint64_t workspace_dim = (uint64_t{1} << n) * kScratchDim;
    size_t k = M * n;
    auto generator = [=](size_t block, const BitString &advice) {
        uint64_t code = advice.value_at((block - 1) * n, n);
        PrequeryState pre(1, workspace_dim);
        Rational tail(1);
        for (uint64_t t = 0; t < kLeakScratch; t++) {
            pre.add({{next_block(block, M), 0}}, code * kScratchDim + t, Rational(4, 5) * tail);
            tail *= Rational(3, 5);
        }
        pre.add({{static_cast<uint32_t>(block), code}}, code * kScratchDim + kLeakScratch, tail);
        return pre;
    };
    auto rule = [](std::span<const QueryWord>, std::span<const uint8_t> answers, uint64_t scratch) {
        return scratch == kLeakScratch && answers[0] == 0 ? uint64_t{1} : uint64_t{0};
    };
    AdviceFunction advice(k, [=](const StepInstance &instance) {
        BitString h;
        for (size_t j = 1; j <= M; j++) {
            h.append_value(instance.code(j), n);
        }
        return h;
    });
    return {NonadaptiveComputer(M, n, 1, k, n, workspace_dim, generator, FinalTransform::output_rule(rule)),
            std::move(advice)};
}

std::vector<std::string> builtin_subjects() {
    return {"full-query", "advised", "zero-query", "shortcut", "leaky"};
}

AdvisedComputer make_subject(const std::string &name_or_path, size_t M, size_t n, size_t k) {
    if (name_or_path == "full-query") {
        if (k != 0) {
            throw std::invalid_argument("full-query takes no advice; use 'advised' for k > 0");
        }
        return build_full_query(M, n);
    }
    if (name_or_path == "advised") {
        return build_advised(M, n, k);
    }
    if (name_or_path == "zero-query") {
        return build_zero_query(M, n, k);
    }
    if (name_or_path == "shortcut") {
        return build_shortcut(M, n, k);
    }
    if (name_or_path == "leaky") {
        if (k != M * n) {
            throw std::invalid_argument("leaky needs k = M*n");
        }
        return build_leaky(M, n);
    }
    if (std::filesystem::exists(name_or_path)) {
        AdvisedComputer subject = load_computer(name_or_path);
        if (subject.computer.M() != M || subject.computer.n() != n || subject.computer.k() != k) {
            throw std::invalid_argument("computer document does not match the configured M, n, k");
        }
        return subject;
    }
    throw std::invalid_argument("unknown subject '" + name_or_path + "'");
}

}  // namespace qtt
