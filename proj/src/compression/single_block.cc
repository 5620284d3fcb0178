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

#include "qtt/compression/single_block.h"

namespace qtt {

size_t SingleBlockContext::rank_width() const {
    uint64_t w = ceil_log2(Rational(static_cast<unsigned long>(T)) / params.threshold());
    if (w > 64) {
        throw std::invalid_argument("rank field width exceeds 64 bits");
    }
    return w;
}

void SingleBlockContext::validate() const {
    if (n < 1 || n > 32) {
        throw std::invalid_argument("n must be in [1, 32]");
    }
    if (k + 1 > n) {
        throw std::invalid_argument("single-block scheme needs k + 1 <= n");
    }
    if (case1_length() == case2_length()) {
        throw std::invalid_argument("both cases would encode to " + std::to_string(case2_length()) +
                                    " bits; the framing cannot tell them apart");
    }
}

SingleBlockContext SingleBlockContext::for_computer(const NonadaptiveComputer &computer, const ErrorParams &params) {
    if (computer.M() != 1) {
        throw std::invalid_argument("single-block scheme needs M = 1");
    }
    SingleBlockContext ctx{computer.n(), computer.k(), computer.T(), params};
    ctx.validate();
    return ctx;
}

Encoding encode_single(const SingleBlockContext &ctx, const NonadaptiveComputer &computer,
                       const AdviceFunction &advice_fn, const StepInstance &instance) {
    ctx.validate();
    if (instance.M() != 1 || instance.n() != ctx.n || computer.M() != 1) {
        throw std::invalid_argument("single-block scheme needs M = 1");
    }
    size_t p = ctx.p();
    size_t n = ctx.n;
    GoodBadProfile prof = profile(computer, advice_fn, instance, p, ctx.params);
    const BlockProfile &b = prof.block(1);
    uint64_t code = instance.code(1);

    Encoding enc{{}, b.good ? 1 : 2, {}, prof.good_indices()};
    enc.bits.append(prof.advice);
    enc.items.push_back({"advice", 0, ctx.k});
    if (b.good) {
        size_t width = ctx.rank_width();
        if (width < 64 && (b.rank >> width) != 0) {
            throw InvariantViolation("rank " + std::to_string(b.rank) + " does not fit in " + std::to_string(width) +
                                     " bits");
        }
        enc.items.push_back({"last", enc.bits.size(), p});
        enc.bits.append_value(last_bits(code, p), p);
        enc.items.push_back({"rank", enc.bits.size(), width});
        enc.bits.append_value(b.rank, width);
    } else {
        enc.items.push_back({"prefix", enc.bits.size(), n - p});
        enc.bits.append_value(first_bits(code, n, n - p), n - p);
    }
    return enc;
}

DecodeResult decode_single(const SingleBlockContext &ctx, const NonadaptiveComputer &computer, const BitString &bits) {
    ctx.validate();
    size_t p = ctx.p();
    size_t n = ctx.n;
    BitReader reader(bits);
    DecodeResult result{StepInstance(n, {1}), 0, {}, {}, {}};
    uint64_t code;
    if (bits.size() == ctx.case1_length()) {
        result.case_tag = 1;
        result.good = {1};
        BitString advice = reader.read_bits(ctx.k);
        uint64_t last = reader.read_value(p);
        uint64_t rank = reader.read_value(ctx.rank_width());
        auto heavy = heavy_prefixes(computer, 1, advice, p, ctx.params.threshold());
        if (rank >= heavy.size()) {
            throw DecodeError("rank " + std::to_string(rank) + " exceeds the " + std::to_string(heavy.size()) +
                              " heavy prefixes");
        }
        code = (heavy[rank] << p) | last;
    } else if (bits.size() == ctx.case2_length()) {
        result.case_tag = 2;
        BitString advice = reader.read_bits(ctx.k);
        uint64_t prefix = reader.read_value(n - p);
        if (p > computer.output_width()) {
            throw std::invalid_argument("output width is smaller than p");
        }
        PrequeryState pre = computer.prequery(1, advice);
        SparseState substituted = apply_answers(pre, 1, n, [&](const QueryWord &word) {
            if (word.block != 1) {
                throw std::out_of_range("query word outside the instance domain");
            }
            return (word.location >> p) > prefix;
        });
        SparseState final_state =
            computer.final_transform().apply(substituted, computer.layout(), computer.output_width());
        Distribution marginal = marginal_last_bits(measure_output(computer, final_state), p);
        auto chosen = majority_outcome(marginal);
        if (!chosen) {
            throw DecodeError("no outcome above one half");
        }
        code = (prefix << p) | *chosen;
        result.rounds.push_back({1, std::move(substituted), std::move(marginal), *chosen});
    } else {
        throw MalformedStream("single-block encoding of " + std::to_string(bits.size()) + " bits; expected " +
                              std::to_string(ctx.case1_length()) + " or " + std::to_string(ctx.case2_length()));
    }
    result.instance = StepInstance(n, {code + 1});
    return result;
}

Rational single_block_bound(size_t n, size_t k, const ErrorParams &params) {
    return params.threshold() * pow2(static_cast<int64_t>(n) - 2 * static_cast<int64_t>(k) - 2);
}

}  // namespace qtt
