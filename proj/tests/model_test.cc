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

#include "qtt/computer_io.h"
#include "qtt/model.h"
#include "qtt/reference_algorithms.h"

using namespace qtt;

namespace {

Rational q(const char *text) {
    return parse_rational(text);
}

// n = 1, T = 1: queries location 0 and outputs the right bit with amplitude 4/5.
NonadaptiveComputer noisy_bit() {
    auto gen = [](size_t, const BitString &) {
        PrequeryState pre(1, 4);
        pre.add({{1, 0}}, 0, q("3/5"));
        pre.add({{1, 0}}, 1, q("4/5"));
        return pre;
    };
    auto rule = [](std::span<const QueryWord>, std::span<const uint8_t> ans, uint64_t scratch) -> uint64_t {
        return scratch == 1 ? 1 - ans[0] : ans[0];
    };
    return NonadaptiveComputer(1, 1, 1, 0, 1, 4, gen, FinalTransform::output_rule(rule));
}

// Always outputs 0 without looking.
NonadaptiveComputer constant_zero(size_t n) {
    auto gen = [](size_t, const BitString &) {
        PrequeryState pre(0, 2);
        pre.add({}, 0, 1);
        return pre;
    };
    return NonadaptiveComputer(1, n, 0, 0, 1, 2, gen,
                               FinalTransform::output_rule([](auto, auto, uint64_t) -> uint64_t { return 0; }));
}

std::vector<size_t> all_blocks(size_t M) {
    std::vector<size_t> b;
    for (size_t i = 1; i <= M; i++) {
        b.push_back(i);
    }
    return b;
}

}  // namespace

TEST(model, oracle_answers) {
    StepInstance three(2, {3});
    EXPECT_EQ(oracle_answers(three, {{1, 0b10}, {1, 0b11}}), (std::vector<uint8_t>{1, 1}));
    EXPECT_EQ(oracle_answers(three, {{1, 0b00}, {1, 0b01}}), (std::vector<uint8_t>{0, 0}));
    EXPECT_EQ(oracle_answers(StepInstance(2, {1, 4}), {{1, 0b00}, {2, 0b10}}), (std::vector<uint8_t>{1, 0}));
    EXPECT_THROW(oracle_answers(three, {{2, 0}}), std::out_of_range);
}

TEST(model, apply_oracle) {
    RegisterLayout layout{2, 2, 2, 1};
    PrequeryState pre(2, 1);
    pre.add({{1, 1}, {2, 3}}, 0, 1);
    SparseState post = apply_oracle(pre, StepInstance(2, {3, 4}));
    ASSERT_EQ(post.support_size(), 1u);
    BasisKey key = post.amplitudes().begin()->first;
    EXPECT_EQ(key, (BasisKey{layout.encode_word({1, 1}), layout.encode_word({2, 3}), 0, 1, 0}));

    SparseState ones = apply_oracle(pre, StepInstance(2, {1, 1}));
    EXPECT_EQ(ones.amplitudes().begin()->first[2], 1u);
    EXPECT_EQ(ones.amplitudes().begin()->first[3], 1u);

    PrequeryState two(1, 1);
    two.add({{1, 0}}, 0, q("3/5"));
    two.add({{1, 2}}, 0, q("4/5"));
    SparseState p2 = apply_oracle(two, StepInstance(2, {2}));
    RegisterLayout l1{1, 2, 1, 1};
    EXPECT_EQ(p2.amplitude({l1.encode_word({1, 0}), 0, 0}), q("3/5"));
    EXPECT_EQ(p2.amplitude({l1.encode_word({1, 2}), 1, 0}), q("4/5"));
    EXPECT_EQ(norm_sq(p2), 1);
}

TEST(model, prequery_validation) {
    PrequeryState pre(2, 3);
    EXPECT_THROW(pre.add({{1, 0}}, 0, 1), std::invalid_argument);
    EXPECT_THROW(pre.add({{1, 0}, {1, 0}}, 3, 1), std::out_of_range);
    auto bad_norm = [](size_t, const BitString &) {
        PrequeryState p(0, 2);
        p.add({}, 0, q("1/2"));
        return p;
    };
    NonadaptiveComputer c(1, 1, 0, 0, 1, 2, bad_norm, FinalTransform::output_rule([](auto, auto, uint64_t) -> uint64_t {
                              return 0;
                          }));
    EXPECT_THROW(c.prequery(1, BitString()), std::logic_error);
    EXPECT_THROW(c.prequery(2, BitString()), std::out_of_range);
    EXPECT_THROW(c.prequery(1, BitString::from_string("1")), std::invalid_argument);
    EXPECT_THROW(NonadaptiveComputer(1, 1, 0, 0, 2, 2, bad_norm, FinalTransform::output_rule(nullptr)),
                 std::invalid_argument);
}

TEST(model, run_full_query) {
    auto fq = build_full_query(1, 2);
    Distribution d = run(fq.computer, 1, BitString(), StepInstance(2, {2}));
    EXPECT_EQ(d, (Distribution{{0b01, 1}}));
    d = run(fq.computer, 1, BitString(), StepInstance(2, {3}));
    EXPECT_EQ(d, (Distribution{{0b10, 1}}));
}

TEST(model, run_with_full_advice) {
    auto adv = build_advised(1, 3, 3);
    EXPECT_EQ(adv.computer.T(), 0u);
    for (const auto &inst : enumerate_instances(1, 3)) {
        Distribution d = run(adv.computer, 1, adv.advice(inst), inst);
        EXPECT_EQ(marginal_last_bits(d, 1), (Distribution{{inst.code(1) & 1, 1}}));
    }
}

TEST(model, probabilities_sum_to_one) {
    std::vector<AdvisedComputer> subjects = {build_full_query(2, 2), build_advised(2, 2, 2), build_advised(1, 3, 1)};
    for (const auto &s : subjects) {
        for (const auto &inst : enumerate_instances(s.computer.M(), s.computer.n())) {
            for (size_t i = 1; i <= s.computer.M(); i++) {
                Rational total = 0;
                for (const auto &[o, pr] : run(s.computer, i, s.advice(inst), inst)) {
                    total += pr;
                }
                EXPECT_EQ(total, 1);
            }
        }
    }
}

TEST(model, error_probability) {
    NonadaptiveComputer c = noisy_bit();
    for (const auto &inst : enumerate_instances(1, 1)) {
        EXPECT_EQ(error_probability(c, AdviceFunction::none(), 1, inst, 1), q("9/25"));
    }
    NonadaptiveComputer z = constant_zero(2);
    EXPECT_EQ(error_probability(z, AdviceFunction::none(), 1, StepInstance(2, {1}), 1), 0);
    EXPECT_EQ(error_probability(z, AdviceFunction::none(), 1, StepInstance(2, {2}), 1), 1);
    EXPECT_THROW(error_probability(z, AdviceFunction::none(), 2, StepInstance(2, {2}), 1), std::invalid_argument);
}

TEST(model, max_error) {
    auto fq = build_full_query(1, 3);
    auto all = enumerate_instances(1, 3);
    std::vector<size_t> one{1};
    EXPECT_EQ(max_error(fq.computer, fq.advice, 3, all, one), 0);
    EXPECT_EQ(max_error(constant_zero(3), AdviceFunction::none(), 1, all, one), 1);
    std::vector<StepInstance> single{StepInstance(1, {2})};
    EXPECT_EQ(max_error(noisy_bit(), AdviceFunction::none(), 1, single, one),
              error_probability(noisy_bit(), AdviceFunction::none(), 1, single[0], 1));
    std::vector<StepInstance> none;
    EXPECT_THROW(max_error(fq.computer, fq.advice, 1, none, one), std::invalid_argument);
}

TEST(model, advice_function_length_checked) {
    AdviceFunction bad(2, [](const StepInstance &) { return BitString::from_string("1"); });
    EXPECT_THROW(bad(StepInstance(1, {1})), std::logic_error);
}

TEST(reference, full_query_table) {
    for (size_t n = 1; n <= 4; n++) {
        auto fq = build_full_query(1, n);
        EXPECT_EQ(fq.computer.T(), (uint64_t{1} << n) - 1);
        EXPECT_EQ(fq.advice.k(), 0u);
    }
    EXPECT_EQ(build_full_query(2, 2).computer.T(), 3u);
}

TEST(reference, advised_table) {
    EXPECT_EQ(build_advised(1, 3, 1).computer.T(), 3u);
    EXPECT_EQ(build_advised(1, 4, 1).computer.T(), 7u);
    EXPECT_EQ(build_advised(1, 4, 2).computer.T(), 3u);
    EXPECT_EQ(build_advised(2, 2, 2).computer.T(), 1u);
    EXPECT_EQ(build_advised(2, 3, 2).computer.T(), 3u);
    EXPECT_EQ(build_advised(1, 2, 2).computer.T(), 0u);
    EXPECT_THROW(build_advised(1, 2, 3), std::invalid_argument);
}

TEST(reference, advised_T_formula) {
    for (size_t M = 1; M <= 2; M++) {
        for (size_t n = 1; n <= 4; n++) {
            for (size_t k = 0; k <= M * n; k++) {
                auto a = build_advised(M, n, k);
                EXPECT_EQ(a.computer.T(), (uint64_t{1} << (n - k / M)) - 1) << M << " " << n << " " << k;
            }
        }
    }
}

// Every reference computer is exact on every instance and block, n <= 4, M <= 2.
TEST(reference, exhaustive_zero_error) {
    for (size_t M = 1; M <= 2; M++) {
        for (size_t n = 1; n <= 4; n++) {
            auto all = enumerate_instances(M, n);
            std::vector<AdvisedComputer> subjects{build_full_query(M, n)};
            for (size_t k = 1; k <= M * n; k++) {
                subjects.push_back(build_advised(M, n, k));
            }
            for (const auto &s : subjects) {
                EXPECT_EQ(max_error(s.computer, s.advice, n, all, all_blocks(M)), 0)
                    << M << " " << n << " T=" << s.computer.T();
                for (size_t i = 1; i <= M; i++) {
                    PrequeryState pre = s.computer.prequery(i, s.advice(all.back()));
                    EXPECT_EQ(pre.norm_sq(), 1);
                    for (const auto &[key, amp] : pre.terms()) {
                        EXPECT_EQ(key.list.size(), s.computer.T());
                    }
                }
            }
        }
    }
}

TEST(computer_io, round_trip_preserves_behavior) {
    for (const auto &s : {build_full_query(1, 1), build_advised(1, 2, 1)}) {
        auto doc = computer_to_json(s);
        AdvisedComputer back = computer_from_json(nlohmann::json::parse(doc.dump()));
        EXPECT_EQ(back.computer.T(), s.computer.T());
        EXPECT_EQ(back.advice.k(), s.advice.k());
        for (const auto &inst : enumerate_instances(1, s.computer.n())) {
            EXPECT_EQ(back.advice(inst), s.advice(inst));
            EXPECT_EQ(run(back.computer, 1, back.advice(inst), inst), run(s.computer, 1, s.advice(inst), inst));
        }
        EXPECT_EQ(computer_to_json(back), doc);
    }
}

TEST(computer_io, hand_written_document) {
    // n = 1: query location 0 and output the negated answer via a dense V over 2 * 2 * 2 basis states.
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 8; r++) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 8; c++) {
            int ans = (c >> 1) & 1;
            int target = ans == 0 ? (c ^ 1) : c;
            row.push_back(target == r ? "1" : "0");
        }
        rows.push_back(row);
    }
    nlohmann::json doc = {
        {"M", 1}, {"n", 1}, {"T", 1}, {"k", 0}, {"p", 1}, {"workspace_dim", 2},
        {"prequery", {{{"block", 1}, {"advice", ""}, {"terms", {{{"amplitude", "1"}, {"queries", {{1, "0"}}}, {"workspace", 0}}}}}}},
        {"V", rows},
    };
    AdvisedComputer c = computer_from_json(doc);
    auto all = enumerate_instances(1, 1);
    std::vector<size_t> one{1};
    EXPECT_EQ(max_error(c.computer, c.advice, 1, all, one), 0);

    nlohmann::json broken = doc;
    broken["V"][0][0] = "1";
    EXPECT_ANY_THROW(computer_from_json(broken));
    nlohmann::json missing = doc;
    missing.erase("prequery");
    EXPECT_ANY_THROW(computer_from_json(missing));
    EXPECT_THROW(computer_to_json(build_full_query(1, 4)), std::invalid_argument);
}
