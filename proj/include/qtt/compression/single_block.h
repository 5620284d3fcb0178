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

#ifndef QTT_COMPRESSION_SINGLE_BLOCK_H
#define QTT_COMPRESSION_SINGLE_BLOCK_H

#include "qtt/compression/encoding.h"

namespace qtt {

/// The single-block scheme with p = k + 1.
///
/// Case 1 (own prefix weight above threshold): f | Last_p(s) | e, with e the rank of
/// First_{n-p}(s) among the heavy prefixes in rank_width bits.
/// Case 2: f | First_{n-p}(s), which is n - 1 bits long.
/// The case is recovered from the length alone.
struct SingleBlockContext {
    size_t n;
    size_t k;
    size_t T;
    ErrorParams params;

    size_t p() const {
        return k + 1;
    }
    size_t rank_width() const;
    size_t case1_length() const {
        return k + p() + rank_width();
    }
    size_t case2_length() const {
        return n - 1;
    }
    /// Requires k + 1 <= n and distinct case lengths. Throws std::invalid_argument.
    void validate() const;

    static SingleBlockContext for_computer(const NonadaptiveComputer &computer, const ErrorParams &params);
};

Encoding encode_single(const SingleBlockContext &ctx, const NonadaptiveComputer &computer,
                       const AdviceFunction &advice_fn, const StepInstance &instance);

/// Inverts encode_single. Case 2 answers every query word sharing the step's prefix with 0.
DecodeResult decode_single(const SingleBlockContext &ctx, const NonadaptiveComputer &computer, const BitString &bits);

/// The lower bound threshold * N / 2^(2k+2).
Rational single_block_bound(size_t n, size_t k, const ErrorParams &params);

}  // namespace qtt

#endif
