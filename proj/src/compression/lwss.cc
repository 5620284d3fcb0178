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

#include "qtt/compression/lwss.h"

#include <algorithm>

namespace qtt {

LwssSchedule default_lwss_schedule(const EncodingContext &ctx, size_t good_count) {
    size_t bad = ctx.M - good_count;
    if (ctx.T == 0 || bad == 0) {
        return {0, 0};
    }
    Rational t = Rational(static_cast<unsigned long>(ctx.T)) / ctx.params.threshold();
    Rational b = static_cast<unsigned long>(bad);
    auto q = [&](size_t m) -> Rational {
        Rational r = static_cast<unsigned long>(m);
        return t * r * r - (t - 1) * r - b;
    };
    size_t m = 0;
    while (q(m + 1) <= 0) {
        m++;
    }
    if (m == 0) {
        return {0, 0};
    }
    return {m, ctx.params.threshold() / Rational(static_cast<unsigned long>(m))};
}

bool LwssResult::contains(size_t block) const {
    return round_of(block) != 0;
}

size_t LwssResult::round_of(size_t block) const {
    auto it = std::find(selected.begin(), selected.end(), block);
    return it == selected.end() ? 0 : static_cast<size_t>(it - selected.begin()) + 1;
}

LwssResult lwss(const NonadaptiveComputer &computer, const BitString &advice, const std::map<size_t, uint64_t> &bad_prefixes,
                size_t p, const LwssSchedule &schedule) {
    LwssResult result{schedule, {}, {}, {}};
    std::vector<size_t> survivors;
    for (const auto &[block, prefix] : bad_prefixes) {
        survivors.push_back(block);
    }
    result.survivor_sizes.push_back(survivors.size());
    for (size_t round = 1; round <= schedule.rounds; round++) {
        auto pick = std::find_if(survivors.begin(), survivors.end(), [&](size_t j) { return !result.contains(j); });
        if (pick == survivors.end()) {
            throw InvariantViolation("LWSS round " + std::to_string(round) + " found no unselected survivor");
        }
        size_t w = *pick;
        result.selected.push_back(w);

        QueryWeights weights(computer.prequery(w, advice), computer.n());
        std::map<size_t, Rational> cross;
        for (const auto &[j, prefix] : bad_prefixes) {
            cross[j] = weights.prefix(static_cast<uint32_t>(j), prefix, p);
        }
        std::erase_if(survivors, [&](size_t j) { return cross.at(j) >= schedule.threshold; });
        result.cross_weights.push_back(std::move(cross));
        result.survivor_sizes.push_back(survivors.size());
    }
    return result;
}

LwssResult lwss(const NonadaptiveComputer &computer, const StepInstance &instance, const GoodBadProfile &profile,
                const EncodingContext &ctx) {
    std::map<size_t, uint64_t> bad_prefixes;
    for (size_t j : profile.bad_indices()) {
        bad_prefixes[j] = first_bits(instance.code(j), ctx.n, ctx.n - ctx.p);
    }
    return lwss(computer, profile.advice, bad_prefixes, ctx.p, default_lwss_schedule(ctx, profile.good_count()));
}

}  // namespace qtt
