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

#include "qtt/compression/encoding.h"

#include <algorithm>
#include <set>

namespace qtt {

namespace {

struct ItemWriter {
    Encoding &enc;

    void begin(const std::string &name) {
        enc.items.push_back({name, enc.bits.size(), 0});
    }
    void end() {
        enc.items.back().length = enc.bits.size() - enc.items.back().offset;
    }
};

void append_header(const EncodingContext &ctx, const BitString &advice, const std::vector<size_t> &good,
                   Encoding &enc) {
    ItemWriter w{enc};
    w.begin("advice");
    enc.bits.append(advice);
    w.end();
    w.begin("good_indices");
    for (size_t i : good) {
        enc.bits.append(double_binary(BitString::from_value(i - 1, ctx.index_width())));
    }
    w.end();
    w.begin("separator");
    enc.bits.append(BitString::from_string("01"));
    w.end();
}

// Reads the advice, the doubled index list and the separator.
std::vector<size_t> read_header(const EncodingContext &ctx, BitReader &reader, Encoding &enc) {
    enc.items.push_back({"advice", 0, ctx.k});
    reader.read_bits(ctx.k);
    size_t start = reader.position();
    BitString raw;
    while (true) {
        bool a = reader.read_bit();
        bool b = reader.read_bit();
        if (!a && b) {
            break;
        }
        if (a && !b) {
            throw MalformedStream("invalid pair '10' in the good-index list at offset " +
                                  std::to_string(reader.position() - 2));
        }
        raw.push_back(a);
    }
    enc.items.push_back({"good_indices", start, reader.position() - 2 - start});
    enc.items.push_back({"separator", reader.position() - 2, 2});
    size_t width = ctx.index_width();
    if (raw.size() % width != 0) {
        throw MalformedStream("good-index list is not a whole number of indices");
    }
    std::vector<size_t> good;
    for (size_t off = 0; off < raw.size(); off += width) {
        size_t index = raw.value_at(off, width) + 1;
        if (index > ctx.M || (!good.empty() && index <= good.back())) {
            throw MalformedStream("good-index list is out of range or not increasing");
        }
        good.push_back(index);
    }
    return good;
}

std::vector<size_t> complement(size_t M, const std::vector<size_t> &good) {
    std::vector<size_t> bad;
    for (size_t i = 1; i <= M; i++) {
        if (!std::binary_search(good.begin(), good.end(), i)) {
            bad.push_back(i);
        }
    }
    return bad;
}

}  // namespace

const EncodingItem &Encoding::item(const std::string &name) const {
    for (const auto &it : items) {
        if (it.name == name) {
            return it;
        }
    }
    throw std::out_of_range("encoding has no item '" + name + "'");
}

nlohmann::json Encoding::dump() const {
    nlohmann::json j;
    j["bits"] = bits.size();
    j["hex"] = bits.to_hex();
    j["case"] = case_tag;
    j["items"] = nlohmann::json::array();
    for (const auto &it : items) {
        j["items"].push_back({{"name", it.name}, {"offset", it.offset}, {"length", it.length}});
    }
    return j;
}

BitString double_binary(const BitString &bits) {
    BitString out;
    for (size_t i = 0; i < bits.size(); i++) {
        out.push_back(bits[i]);
        out.push_back(bits[i]);
    }
    return out;
}

Encoding encode(const EncodingContext &ctx, const NonadaptiveComputer &computer, const StepInstance &instance,
                const GoodBadProfile &profile) {
    ctx.validate();
    if (instance.M() != ctx.M || instance.n() != ctx.n || profile.blocks.size() != ctx.M) {
        throw std::invalid_argument("instance or profile shape does not match the encoding context");
    }
    if (profile.advice.size() != ctx.k) {
        throw std::invalid_argument("advice length does not match k");
    }
    std::vector<size_t> good = profile.good_indices();
    Encoding enc{{}, ctx.l <= good.size() ? 1 : 2, {}, good};
    append_header(ctx, profile.advice, good, enc);
    ItemWriter w{enc};
    size_t n = ctx.n;
    size_t p = ctx.p;

    if (enc.case_tag == 1) {
        size_t width = ctx.rank_width();
        w.begin("blocks");
        for (const auto &b : profile.blocks) {
            uint64_t code = instance.code(b.block);
            if (b.good) {
                if (width < 64 && (b.rank >> width) != 0) {
                    throw InvariantViolation("rank " + std::to_string(b.rank) + " of block " +
                                             std::to_string(b.block) + " does not fit in " + std::to_string(width) +
                                             " bits");
                }
                enc.bits.append_value(b.rank, width);
                enc.bits.append_value(last_bits(code, p), p);
            } else {
                enc.bits.append_value(code, n);
            }
        }
        w.end();
        return enc;
    }

    w.begin("good_steps");
    for (size_t i : good) {
        enc.bits.append_value(instance.code(i), n);
    }
    w.end();
    std::vector<size_t> bad = profile.bad_indices();
    w.begin("bad_prefixes");
    for (size_t i : bad) {
        enc.bits.append_value(first_bits(instance.code(i), n, n - p), n - p);
    }
    w.end();
    LwssResult selection = lwss(computer, instance, profile, ctx);
    w.begin("r");
    for (size_t i : bad) {
        if (!selection.contains(i)) {
            enc.bits.append_value(last_bits(instance.code(i), p), p);
        }
    }
    w.end();
    return enc;
}

Encoding encode(const EncodingContext &ctx, const NonadaptiveComputer &computer, const AdviceFunction &advice_fn,
                const StepInstance &instance) {
    return encode(ctx, computer, instance, profile(computer, advice_fn, instance, ctx.p, ctx.params));
}

Encoding parse_encoding(const EncodingContext &ctx, const BitString &bits) {
    ctx.validate();
    Encoding enc{bits, 0, {}, {}};
    BitReader reader(bits);
    enc.good = read_header(ctx, reader, enc);
    size_t good = enc.good.size();
    size_t bad = ctx.M - good;
    size_t offset = reader.position();
    auto add = [&](const std::string &name, size_t length) {
        enc.items.push_back({name, offset, length});
        offset += length;
    };
    if (ctx.l <= good) {
        enc.case_tag = 1;
        add("blocks", good * (ctx.rank_width() + ctx.p) + bad * ctx.n);
    } else {
        enc.case_tag = 2;
        size_t rounds = default_lwss_schedule(ctx, good).rounds;
        add("good_steps", good * ctx.n);
        add("bad_prefixes", bad * (ctx.n - ctx.p));
        add("r", (bad - rounds) * ctx.p);
    }
    if (offset != bits.size()) {
        throw MalformedStream("encoding has " + std::to_string(bits.size()) + " bits, framing expects " +
                              std::to_string(offset));
    }
    return enc;
}

std::optional<uint64_t> majority_outcome(const Distribution &dist) {
    for (const auto &[outcome, prob] : dist) {
        if (prob * 2 > 1) {
            return outcome;
        }
    }
    return std::nullopt;
}

DecodeResult decode(const EncodingContext &ctx, const NonadaptiveComputer &computer, const BitString &bits) {
    Encoding enc = parse_encoding(ctx, bits);
    if (computer.M() != ctx.M || computer.n() != ctx.n || computer.T() != ctx.T || computer.k() != ctx.k) {
        throw std::invalid_argument("computer does not match the encoding context");
    }
    size_t n = ctx.n;
    size_t p = ctx.p;
    BitReader reader(bits);
    BitString advice = reader.read_bits(ctx.k);
    reader.read_bits(enc.item("separator").offset + 2 - ctx.k);

    std::vector<uint64_t> codes(ctx.M + 1);
    std::vector<size_t> bad = complement(ctx.M, enc.good);
    DecodeResult result{StepInstance(n, std::vector<uint64_t>(ctx.M, 1)), enc.case_tag, enc.good, {}, {}};

    if (enc.case_tag == 1) {
        size_t width = ctx.rank_width();
        for (size_t i = 1; i <= ctx.M; i++) {
            if (std::binary_search(enc.good.begin(), enc.good.end(), i)) {
                uint64_t rank = reader.read_value(width);
                uint64_t last = reader.read_value(p);
                auto heavy = heavy_prefixes(computer, i, advice, p, ctx.params.threshold());
                if (rank >= heavy.size()) {
                    throw DecodeError("block " + std::to_string(i) + " rank " + std::to_string(rank) +
                                      " exceeds its " + std::to_string(heavy.size()) + " heavy prefixes");
                }
                codes[i] = (heavy[rank] << p) | last;
            } else {
                codes[i] = reader.read_value(n);
            }
        }
    } else {
        for (size_t i : enc.good) {
            codes[i] = reader.read_value(n);
        }
        std::map<size_t, uint64_t> prefixes;
        for (size_t i : bad) {
            prefixes[i] = reader.read_value(n - p);
        }
        result.selection = lwss(computer, advice, prefixes, p, default_lwss_schedule(ctx, enc.good.size()));
        const LwssResult &sel = result.selection;
        std::vector<bool> known(ctx.M + 1, true);
        for (size_t i : bad) {
            if (sel.contains(i)) {
                codes[i] = prefixes[i] << p;
                known[i] = false;
            } else {
                codes[i] = (prefixes[i] << p) | reader.read_value(p);
            }
        }
        if (p > computer.output_width()) {
            throw std::invalid_argument("output width is smaller than p");
        }
        for (size_t w : sel.selected) {
            PrequeryState pre = computer.prequery(w, advice);
            auto answer = [&](const QueryWord &word) {
                if (word.block < 1 || word.block > ctx.M) {
                    throw std::out_of_range("query word outside the instance domain");
                }
                uint64_t v = word.location >> p;
                uint64_t prefix = codes[word.block] >> p;
                if (v != prefix) {
                    return v > prefix;
                }
                if (!known[word.block]) {
                    return false;
                }
                return word.location >= codes[word.block];
            };
            SparseState substituted = apply_answers(pre, ctx.M, n, answer);
            SparseState final_state =
                computer.final_transform().apply(substituted, computer.layout(), computer.output_width());
            Distribution marginal = marginal_last_bits(measure_output(computer, final_state), p);
            auto chosen = majority_outcome(marginal);
            if (!chosen) {
                throw DecodeError("no outcome above one half while decoding block " + std::to_string(w));
            }
            codes[w] = (prefixes[w] << p) | *chosen;
            known[w] = true;
            result.rounds.push_back({w, std::move(substituted), std::move(marginal), *chosen});
        }
    }
    std::vector<uint64_t> steps;
    for (size_t i = 1; i <= ctx.M; i++) {
        steps.push_back(codes[i] + 1);
    }
    result.instance = StepInstance(n, std::move(steps));
    return result;
}

}  // namespace qtt
