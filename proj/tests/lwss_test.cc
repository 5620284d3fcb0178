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


#include <gtest/gtest.h>

#include "qtt/compression/lwss.h"
#include "qtt/harness/subjects.h"
#include "qtt/reference_algorithms.h"

using namespace qtt;

namespace {

// M = 4, n = 1, T = 1. Block i queries location 0 of block i+1 with amplitude 3/5 and of block
// i+2 with amplitude 4/5 (cyclically).
NonadaptiveComputer ring() {
    auto gen = [](size_t i, const BitString &) {
        PrequeryState pre(1, 2);
        pre.add({{static_cast<uint32_t>(i % 4 + 1), 0}}, 0, Rational(3, 5));
        pre.add({{static_cast<uint32_t>((i + 1) % 4 + 1), 0}}, 0, Rational(4, 5));
        return pre;
    };
    return NonadaptiveComputer(4, 1, 1, 0, 1, 2, gen,
                               FinalTransform::output_rule([](auto, auto, uint64_t) -> uint64_t { return 0; }));
}

}  // namespace

TEST(lwss, hand_trace) {
    std::map<size_t, uint64_t> prefixes{{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    LwssResult r = lwss(ring(), BitString(), prefixes, 1, LwssSchedule{2, Rational(1, 2)});
    EXPECT_EQ(r.selected, (std::vector<size_t>{1, 2}));
    EXPECT_EQ(r.survivor_sizes, (std::vector<size_t>{4, 3, 2}));
    ASSERT_EQ(r.cross_weights.size(), 2u);
    EXPECT_EQ(r.cross_weights[0].at(2), Rational(9, 25));
    EXPECT_EQ(r.cross_weights[0].at(3), Rational(16, 25));
    EXPECT_EQ(r.cross_weights[0].at(4), 0);
    EXPECT_EQ(r.cross_weights[1].at(4), Rational(16, 25));
    EXPECT_TRUE(r.contains(2));
    EXPECT_FALSE(r.contains(3));
    EXPECT_EQ(r.round_of(2), 2u);
    EXPECT_EQ(r.round_of(4), 0u);
}

TEST(lwss, exhaustion_is_an_invariant_violation) {
    std::map<size_t, uint64_t> prefixes{{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    EXPECT_THROW(lwss(ring(), BitString(), prefixes, 1, LwssSchedule{3, Rational(1, 2)}), InvariantViolation);
}

TEST(lwss, zero_rounds) {
    std::map<size_t, uint64_t> prefixes{{1, 0}, {3, 0}};
    LwssResult r = lwss(ring(), BitString(), prefixes, 1, LwssSchedule{0, 0});
    EXPECT_TRUE(r.selected.empty());
    EXPECT_EQ(r.survivor_sizes, (std::vector<size_t>{2}));
}

TEST(lwss, zero_query_selects_lexicographically) {
    auto z = build_zero_query(4, 1, 0);
    std::map<size_t, uint64_t> prefixes{{2, 0}, {3, 0}, {4, 0}};
    LwssResult r = lwss(z.computer, BitString(), prefixes, 1, LwssSchedule{2, Rational(1, 2)});
    EXPECT_EQ(r.selected, (std::vector<size_t>{2, 3}));
    EXPECT_EQ(r.survivor_sizes, (std::vector<size_t>{3, 3, 3}));
}

TEST(lwss, default_schedule) {
    ErrorParams d = ErrorParams::defaults();
    // 256 m^2 - 255 m - 2 <= 0 holds at m = 1 only.
    EncodingContext leaky{2, 2, 1, 4, 1, d, 1};
    EXPECT_EQ(default_lwss_schedule(leaky, 0).rounds, 1u);
    EXPECT_EQ(default_lwss_schedule(leaky, 0).threshold, Rational(1, 256));
    // 16 m^2 - 15 m - 64: -30 at m = 2, 35 at m = 3.
    ErrorParams e0 = ErrorParams::make(0, Rational(1, 2));
    EncodingContext wide{64, 6, 1, 0, 1, e0, 1};
    LwssSchedule s = default_lwss_schedule(wide, 0);
    EXPECT_EQ(s.rounds, 2u);
    EXPECT_EQ(s.threshold, Rational(1, 32));
    EXPECT_EQ(default_lwss_schedule(wide, 64).rounds, 0u);
    EncodingContext none{2, 2, 1, 0, 0, d, 1};
    EXPECT_EQ(default_lwss_schedule(none, 0).rounds, 0u);
}

TEST(lwss, full_query_has_no_bad_blocks) {
    auto fq = build_full_query(2, 3);
    EncodingContext ctx = EncodingContext::for_computer(fq.computer, 1, ErrorParams::defaults(), 1);
    for (const auto &inst : enumerate_instances(2, 3)) {
        GoodBadProfile prof = profile(fq.computer, fq.advice, inst, 1, ctx.params);
        LwssResult r = lwss(fq.computer, inst, prof, ctx);
        EXPECT_TRUE(r.selected.empty());
    }
}

TEST(lwss, leaky_selection_properties) {
    auto lk = build_leaky(2, 2);
    for (size_t p : {1, 2}) {
        EncodingContext ctx = EncodingContext::for_computer(lk.computer, p, ErrorParams::defaults(), 1);
        for (const auto &inst : enumerate_instances(2, 2)) {
            GoodBadProfile prof = profile(lk.computer, lk.advice, inst, p, ctx.params);
            LwssResult r = lwss(lk.computer, inst, prof, ctx);
            EXPECT_EQ(r.selected, (std::vector<size_t>{1}));
            EXPECT_EQ(r.survivor_sizes.front(), 2u);
        }
    }
}
