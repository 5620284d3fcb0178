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

#ifndef QTT_COMPRESSION_BOUNDS_H
#define QTT_COMPRESSION_BOUNDS_H

#include <optional>
#include <string>

#include "qtt/compression/error_params.h"
#include "qtt/model.h"

namespace qtt {

/// Everything the encoder and decoders share besides the computer itself. None of it is
/// stored in an encoding.
struct EncodingContext {
    size_t M;
    size_t n;
    size_t p;
    size_t k;
    size_t T;
    ErrorParams params;
    /// Case selection: Case 1 iff l <= number of good blocks.
    size_t l;

    /// Requires p in [1, n], l in [1, M] and M a power of two. Throws std::invalid_argument.
    void validate() const;

    /// log2 M.
    size_t log_M() const;
    /// Bits per good index before doubling: log2 M, but at least one.
    size_t index_width() const;
    /// Width of a k_i field: ceil(log2(T / threshold)). Throws if it exceeds 64.
    size_t rank_width() const;

    static EncodingContext for_computer(const NonadaptiveComputer &computer, size_t p, const ErrorParams &params,
                                        size_t l);
};

/// coef * 2^(exp_num / exp_den), with exp_den > 0.
struct PowerBound {
    Rational coef;
    int64_t exp_num = 0;
    uint64_t exp_den = 1;

    /// True iff x < value, decided exactly.
    bool exceeds(const Rational &x) const;
    /// The exact value when the exponent is an integer.
    std::optional<Rational> exact() const;
    double approx() const;
    std::string to_string() const;
};

/// Exact comparison of two nonnegative bounds.
bool operator<(const PowerBound &a, const PowerBound &b);

/// The two-branch function C_{U,V} for the given count of good blocks.
///   good_count >= l: threshold * N / (M^2 2^(p + 1 + (k + 2)/l))
///   otherwise:       threshold * (M - l) p^2 / (2 l log M + k + 2)^2
PowerBound c_uv(const EncodingContext &ctx, size_t good_count);

struct InequalityReport {
    /// 1 if l <= good_count, else 2.
    int branch;
    PowerBound bound;
    size_t T;
    /// T < c_uv.
    bool hypothesis;
    /// The length inequality of the active branch, evaluated exactly.
    bool inequality;
    /// hypothesis implies inequality.
    bool implication_holds() const {
        return !hypothesis || inequality;
    }
    std::string note() const;
};

/// Branch 1: l(2 log M - n + log(T/threshold) + p + 1) + k + 2 < 0, checked as
/// (T/threshold)^l < 2^-(l(2 log M - n + p + 1) + k + 2).
/// Branch 2: 2 l log M + k + 2 < p sqrt(threshold (M - l) / T), checked squared.
/// Requires T >= 1.
InequalityReport check_inequalities(const EncodingContext &ctx, size_t good_count, size_t T);

/// Exact |E(s)| from the item list, given the good count and the LWSS round count.
size_t predicted_length(const EncodingContext &ctx, size_t good_count, size_t lwss_rounds);

}  // namespace qtt

#endif
