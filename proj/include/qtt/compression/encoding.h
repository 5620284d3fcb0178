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

#ifndef QTT_COMPRESSION_ENCODING_H
#define QTT_COMPRESSION_ENCODING_H

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qtt/compression/lwss.h"

namespace qtt {

/// Raised when a decoder cannot pick an output: no outcome has probability above one half.
struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EncodingItem {
    std::string name;
    size_t offset;
    size_t length;
};

/// An encoding E(s) with its parsed item boundaries. The items are an audit aid; decoders
/// reparse the raw bits.
struct Encoding {
    BitString bits;
    int case_tag;
    std::vector<EncodingItem> items;
    /// Good blocks, ascending.
    std::vector<size_t> good;

    size_t size() const {
        return bits.size();
    }
    const EncodingItem &item(const std::string &name) const;
    /// {"bits": length, "hex": ..., "case": ..., "items": [{"name", "offset", "length"}]}
    nlohmann::json dump() const;
};

/// Writes each bit twice.
BitString double_binary(const BitString &bits);

/// Encodes s under the given profile. Case 1 when ctx.l <= number of good blocks.
///
/// Case 1: f | doubled good indices | 01 | per block in order: k_i (rank_width bits) and
/// Last_p(s_i) if good, else bin_n(s_i).
/// Case 2: f | doubled good indices | 01 | bin_n(s_i) for good i | First_{n-p}(s_i) for bad i |
/// Last_p(s_v) for bad v outside the LWSS selection, ascending.
Encoding encode(const EncodingContext &ctx, const NonadaptiveComputer &computer, const StepInstance &instance,
                const GoodBadProfile &profile);

Encoding encode(const EncodingContext &ctx, const NonadaptiveComputer &computer, const AdviceFunction &advice_fn,
                const StepInstance &instance);

/// Splits raw bits into items. Throws MalformedStream on bad doubling, out-of-order or
/// out-of-range indices, or a length that does not match the framing.
Encoding parse_encoding(const EncodingContext &ctx, const BitString &bits);

/// One round of the substituted-answer decoder.
struct DecoderRound {
    size_t block;
    /// Postquery state built from substituted answers.
    SparseState substituted;
    /// Distribution of the last p output bits after V.
    Distribution marginal;
    uint64_t recovered;
};

struct DecodeResult {
    StepInstance instance;
    int case_tag;
    std::vector<size_t> good;
    LwssResult selection;
    std::vector<DecoderRound> rounds;
};

/// Inverts encode. Case 1 reads good prefixes off the heavy-prefix list; Case 2 reruns
/// LWSS and simulates V on substituted oracle answers. Throws MalformedStream or
/// DecodeError.
DecodeResult decode(const EncodingContext &ctx, const NonadaptiveComputer &computer, const BitString &bits);

/// The unique outcome with probability above one half, if any.
std::optional<uint64_t> majority_outcome(const Distribution &dist);

}  // namespace qtt

#endif
