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

#ifndef QTT_COMPRESSION_WEIGHTS_H
#define QTT_COMPRESSION_WEIGHTS_H

#include <map>
#include <vector>

#include "qtt/compression/error_params.h"
#include "qtt/model.h"

namespace qtt {

/// Query weights of one prequery state.
///
/// wt(j, z) is the total squared amplitude of the terms whose query list contains (j, z).
/// A list containing the same word twice counts once for that word.
class QueryWeights {
   public:
    QueryWeights(const PrequeryState &pre, size_t n);

    /// wt(j, z).
    Rational word(uint32_t block, uint64_t location) const;

    /// wt_p(j, z'): the sum of wt(j, z) over the 2^p locations z whose first n - p bits are
    /// `prefix`.
    Rational prefix(uint32_t block, uint64_t prefix, size_t p) const;

    /// wt_p(j, a) for every prefix a of nonzero weight, keyed by prefix.
    std::map<uint64_t, Rational> prefix_table(uint32_t block, size_t p) const;

   private:
    size_t n_;
    std::map<QueryWord, Rational> words_;
};

/// wt(i:j, z) for the prequery state on block input i with the given advice.
Rational weight(const NonadaptiveComputer &computer, size_t i, const BitString &advice, size_t j, uint64_t location);

/// wt_p(i:j, z').
Rational weight_p(const NonadaptiveComputer &computer, size_t i, const BitString &advice, size_t j, uint64_t prefix,
                  size_t p);

struct BlockProfile {
    size_t block;
    /// wt_p(i:i, First_{n-p}(s_i)).
    Rational own_weight;
    bool good;
    /// Sum over all prefixes a of wt_p(i:i, a).
    Rational prefix_weight_sum;
    /// A_i: the prefixes a with wt_p(i:i, a) > threshold, ascending.
    std::vector<uint64_t> heavy_prefixes;
    /// k_i: members of A_i below First_{n-p}(s_i). Meaningful for good blocks.
    uint64_t rank;
};

/// Per-instance good/bad classification of the blocks.
struct GoodBadProfile {
    size_t n;
    size_t p;
    BitString advice;
    std::vector<BlockProfile> blocks;

    /// l'_s.
    size_t good_count() const;
    std::vector<size_t> good_indices() const;
    std::vector<size_t> bad_indices() const;
    const BlockProfile &block(size_t i) const {
        return blocks.at(i - 1);
    }
};

/// Block i is good iff wt_p(i:i, First_{n-p}(s_i)) > threshold (strict).
GoodBadProfile profile(const NonadaptiveComputer &computer, const AdviceFunction &advice_fn,
                       const StepInstance &instance, size_t p, const ErrorParams &params);

/// The heavy prefixes A_i of block i, computed from the advice alone.
std::vector<uint64_t> heavy_prefixes(const NonadaptiveComputer &computer, size_t block, const BitString &advice,
                                     size_t p, const Rational &threshold);

}  // namespace qtt

#endif
