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

#include "qtt/compression/weights.h"

#include <algorithm>
#include <set>

namespace qtt {

QueryWeights::QueryWeights(const PrequeryState &pre, size_t n) : n_(n) {
    std::set<QueryWord> distinct;
    for (const auto &[key, amp] : pre.terms()) {
        distinct.clear();
        distinct.insert(key.list.begin(), key.list.end());
        Rational mass = amp * amp;
        for (const auto &w : distinct) {
            words_[w] += mass;
        }
    }
}

Rational QueryWeights::word(uint32_t block, uint64_t location) const {
    auto it = words_.find({block, location});
    return it == words_.end() ? Rational(0) : it->second;
}

Rational QueryWeights::prefix(uint32_t block, uint64_t prefix, size_t p) const {
    uint64_t lo = prefix << p;
    uint64_t hi = (prefix + 1) << p;
    Rational total = 0;
    for (auto it = words_.lower_bound({block, lo}); it != words_.end() && it->first < QueryWord{block, hi}; ++it) {
        total += it->second;
    }
    return total;
}

std::map<uint64_t, Rational> QueryWeights::prefix_table(uint32_t block, size_t p) const {
    std::map<uint64_t, Rational> table;
    for (auto it = words_.lower_bound({block, 0}); it != words_.end() && it->first.block == block; ++it) {
        table[it->first.location >> p] += it->second;
    }
    (void)n_;
    return table;
}

Rational weight(const NonadaptiveComputer &computer, size_t i, const BitString &advice, size_t j, uint64_t location) {
    return QueryWeights(computer.prequery(i, advice), computer.n()).word(static_cast<uint32_t>(j), location);
}

Rational weight_p(const NonadaptiveComputer &computer, size_t i, const BitString &advice, size_t j, uint64_t prefix,
                  size_t p) {
    if (p < 1 || p > computer.n()) {
        throw std::invalid_argument("p must be in [1, n]");
    }
    return QueryWeights(computer.prequery(i, advice), computer.n()).prefix(static_cast<uint32_t>(j), prefix, p);
}

size_t GoodBadProfile::good_count() const {
    return static_cast<size_t>(std::count_if(blocks.begin(), blocks.end(), [](const auto &b) { return b.good; }));
}

std::vector<size_t> GoodBadProfile::good_indices() const {
    std::vector<size_t> out;
    for (const auto &b : blocks) {
        if (b.good) {
            out.push_back(b.block);
        }
    }
    return out;
}

std::vector<size_t> GoodBadProfile::bad_indices() const {
    std::vector<size_t> out;
    for (const auto &b : blocks) {
        if (!b.good) {
            out.push_back(b.block);
        }
    }
    return out;
}

std::vector<uint64_t> heavy_prefixes(const NonadaptiveComputer &computer, size_t block, const BitString &advice,
                                     size_t p, const Rational &threshold) {
    QueryWeights weights(computer.prequery(block, advice), computer.n());
    std::vector<uint64_t> heavy;
    for (const auto &[prefix, w] : weights.prefix_table(static_cast<uint32_t>(block), p)) {
        if (w > threshold) {
            heavy.push_back(prefix);
        }
    }
    return heavy;
}

GoodBadProfile profile(const NonadaptiveComputer &computer, const AdviceFunction &advice_fn,
                       const StepInstance &instance, size_t p, const ErrorParams &params) {
    if (p < 1 || p > instance.n()) {
        throw std::invalid_argument("p must be in [1, n]");
    }
    GoodBadProfile result{instance.n(), p, advice_fn(instance), {}};
    const Rational &threshold = params.threshold();
    size_t n = instance.n();
    for (size_t i = 1; i <= instance.M(); i++) {
        QueryWeights weights(computer.prequery(i, result.advice), n);
        uint64_t own_prefix = first_bits(instance.code(i), n, n - p);
        BlockProfile b{i, weights.prefix(static_cast<uint32_t>(i), own_prefix, p), false, 0, {}, 0};
        b.good = b.own_weight > threshold;
        for (const auto &[prefix, w] : weights.prefix_table(static_cast<uint32_t>(i), p)) {
            b.prefix_weight_sum += w;
            if (w > threshold) {
                b.heavy_prefixes.push_back(prefix);
                if (prefix < own_prefix) {
                    b.rank++;
                }
            }
        }
        result.blocks.push_back(std::move(b));
    }
    return result;
}

}  // namespace qtt
