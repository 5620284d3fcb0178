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

#include "qtt/ordered_search.h"

using namespace qtt;

TEST(ordered_search, bin_n) {
    EXPECT_EQ(bin_n(3, 1), "000");
    EXPECT_EQ(bin_n(3, 8), "111");
    EXPECT_EQ(bin_n(2, 3), "10");
    EXPECT_THROW(bin_n(2, 0), std::out_of_range);
    EXPECT_THROW(bin_n(2, 5), std::out_of_range);
}

TEST(ordered_search, step_string) {
    EXPECT_EQ(step_string(2, 1), "1111");
    EXPECT_EQ(step_string(2, 4), "0001");
    EXPECT_EQ(step_string(2, 3), "0011");
}

TEST(ordered_search, eval_G) {
    EXPECT_EQ(eval_G(StepInstance(2, {3}), 1, 2), "10");
    EXPECT_EQ(eval_G(StepInstance(2, {1, 4}), 2, 1), "1");
    EXPECT_THROW(eval_G(StepInstance(2, {1}), 1, 0), std::out_of_range);
}

TEST(ordered_search, step_properties) {
    for (size_t n = 1; n <= 4; n++) {
        uint64_t N = uint64_t{1} << n;
        for (uint64_t s = 1; s <= N; s++) {
            std::string x = step_string(n, s);
            ASSERT_EQ(x.size(), N);
            EXPECT_EQ(x.find('1'), s - 1);
            EXPECT_EQ(x.find('0', s - 1), std::string::npos);
            StepInstance inst(n, {s});
            EXPECT_EQ(eval_G(inst, 1, n), bin_n(n, s));
            for (uint64_t z = 0; z < N; z++) {
                EXPECT_EQ(inst.bit(1, z), x[z] == '1');
            }
        }
    }
}

TEST(ordered_search, enumerate_instances) {
    auto one = enumerate_instances(1, 1);
    ASSERT_EQ(one.size(), 2u);
    EXPECT_EQ(one[0].steps(), std::vector<uint64_t>{1});
    EXPECT_EQ(one[1].steps(), std::vector<uint64_t>{2});
    EXPECT_EQ(enumerate_instances(2, 1).size(), 4u);
    auto all = enumerate_instances(2, 3);
    EXPECT_EQ(all.size(), 64u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_THROW(enumerate_instances(2, 3, 63), BudgetExceeded);
    EXPECT_EQ(instance_count(3, 4), 4096u);
}

TEST(ordered_search, instance_literal) {
    StepInstance inst = StepInstance::parse("M=2 n=3 steps=3,7");
    EXPECT_EQ(inst, StepInstance(3, {3, 7}));
    EXPECT_EQ(inst.code(2), 6u);
    EXPECT_EQ(StepInstance::parse(inst.to_string()), inst);
    EXPECT_THROW(StepInstance::parse("M=3 n=3 steps=3,7"), std::invalid_argument);
    EXPECT_THROW(StepInstance::parse("n=2 steps=5"), std::out_of_range);
    EXPECT_THROW(StepInstance::parse("n=2"), std::invalid_argument);
    EXPECT_THROW(StepInstance::parse("n=2 steps=1 q=1"), std::invalid_argument);
    EXPECT_THROW(inst.step(3), std::out_of_range);
}

TEST(ordered_search, problem_spec) {
    EXPECT_NO_THROW((ProblemSpec{2, 3, 3}.validate()));
    EXPECT_THROW((ProblemSpec{2, 3, 0}.validate()), std::invalid_argument);
    EXPECT_THROW((ProblemSpec{0, 3, 1}.validate()), std::invalid_argument);
}

TEST(ordered_search, bit_slices) {
    EXPECT_EQ(first_bits(0b1101, 4, 2), 0b11u);
    EXPECT_EQ(first_bits(0b1101, 4, 0), 0u);
    EXPECT_EQ(last_bits(0b1101, 3), 0b101u);
    EXPECT_EQ(bits_to_string(5, 4), "0101");
}
