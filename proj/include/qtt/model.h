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

#ifndef QTT_MODEL_H
#define QTT_MODEL_H

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qtt/bits.h"
#include "qtt/ordered_search.h"
#include "qtt/rational.h"
#include "qtt/statevec.h"

namespace qtt {

/// A query word (j, z) in [1, M] x {0,1}^n. `location` is the integer value of z.
struct QueryWord {
    uint32_t block;
    uint64_t location;

    auto operator<=>(const QueryWord &other) const = default;
};

/// An ordered tuple of query words; duplicates are allowed.
using QueryList = std::vector<QueryWord>;

/// Basis label of a prequery term: the query list and the workspace content. The answer
/// register is implicitly all zero.
struct PrequeryKey {
    QueryList list;
    uint64_t workspace;

    auto operator<=>(const PrequeryKey &other) const = default;
};

/// The state U|0>|0>|i,h>, stored as a sparse map over (query list, workspace).
class PrequeryState {
   public:
    PrequeryState(size_t T, uint64_t workspace_dim);

    /// Accumulates amplitude on (list, workspace). Throws if |list| != T.
    void add(QueryList list, uint64_t workspace, const Rational &amplitude);

    size_t T() const {
        return T_;
    }
    uint64_t workspace_dim() const {
        return workspace_dim_;
    }
    const std::map<PrequeryKey, Rational> &terms() const {
        return terms_;
    }
    Rational norm_sq() const;

   private:
    size_t T_;
    uint64_t workspace_dim_;
    std::map<PrequeryKey, Rational> terms_;
};

/// Register layout shared by every state of one computer:
/// T query-word registers of size M*N, T answer registers of size 2, one workspace register.
///
/// A word register holds (block - 1) * N + location. The workspace value is
/// output * scratch_dim + scratch, so the output cells are its leading bits.
struct RegisterLayout {
    size_t M;
    size_t n;
    size_t T;
    uint64_t workspace_dim;

    std::vector<uint64_t> dims() const;
    size_t answer_register(size_t j) const {
        return T + j;
    }
    size_t workspace_register() const {
        return 2 * T;
    }
    uint64_t encode_word(const QueryWord &w) const {
        return (uint64_t{w.block} - 1) * (uint64_t{1} << n) + w.location;
    }
    QueryWord decode_word(uint64_t value) const {
        return {static_cast<uint32_t>(value >> n) + 1, value & ((uint64_t{1} << n) - 1)};
    }
};

/// The final operator V, applied after the oracle.
///
/// Either an explicit orthogonal matrix over the whole register space, or an output rule:
/// the output cells are XORed with a function of (query list, answers, scratch). The latter
/// is an involution on basis states and therefore orthogonal by construction.
class FinalTransform {
   public:
    using OutputRule =
        std::function<uint64_t(std::span<const QueryWord> list, std::span<const uint8_t> answers, uint64_t scratch)>;

    static FinalTransform output_rule(OutputRule rule);
    static FinalTransform matrix(OrthogonalMatrix m);

    const OrthogonalMatrix *explicit_matrix() const {
        return matrix_ ? &*matrix_ : nullptr;
    }

    SparseState apply(const SparseState &post, const RegisterLayout &layout, size_t output_width) const;

   private:
    OutputRule rule_;
    std::optional<OrthogonalMatrix> matrix_;
};

/// A nonadaptive black-box computer (U, V, T) with k-bit advice.
///
/// The prequery generator stands in for U applied to |0>|0>|i,h>: it maps a block input
/// and an advice string to the prequery state.
class NonadaptiveComputer {
   public:
    using Generator = std::function<PrequeryState(size_t block, const BitString &advice)>;

    NonadaptiveComputer(size_t M, size_t n, size_t T, size_t k, size_t output_width, uint64_t workspace_dim,
                        Generator generator, FinalTransform final_transform);

    size_t M() const {
        return layout_.M;
    }
    size_t n() const {
        return layout_.n;
    }
    size_t T() const {
        return layout_.T;
    }
    size_t k() const {
        return k_;
    }
    size_t output_width() const {
        return output_width_;
    }
    uint64_t workspace_dim() const {
        return layout_.workspace_dim;
    }
    uint64_t scratch_dim() const {
        return layout_.workspace_dim >> output_width_;
    }
    const RegisterLayout &layout() const {
        return layout_;
    }
    const FinalTransform &final_transform() const {
        return final_;
    }

    /// Runs the generator and checks the result: unit norm, T words per list, words and
    /// workspace in range. Throws std::invalid_argument on bad inputs or a malformed state.
    PrequeryState prequery(size_t block, const BitString &advice) const;

   private:
    RegisterLayout layout_;
    size_t k_;
    size_t output_width_;
    Generator generator_;
    FinalTransform final_;
};

/// Maps an instance to its k-bit advice string. The block input never enters.
class AdviceFunction {
   public:
    using Fn = std::function<BitString(const StepInstance &)>;

    AdviceFunction(size_t k, Fn fn) : k_(k), fn_(std::move(fn)) {
    }
    /// The constant empty advice.
    static AdviceFunction none() {
        return AdviceFunction(0, [](const StepInstance &) { return BitString(); });
    }

    size_t k() const {
        return k_;
    }
    /// Throws std::logic_error if the function returns a string of the wrong length.
    BitString operator()(const StepInstance &instance) const;

   private:
    size_t k_;
    Fn fn_;
};

/// A computer paired with the advice function it is meant to run with.
struct AdvisedComputer {
    NonadaptiveComputer computer;
    AdviceFunction advice;
};

/// Output distribution over output_width-bit outcomes.
using Distribution = std::map<uint64_t, Rational>;

/// The oracle's answer bits for one query list.
std::vector<uint8_t> oracle_answers(const StepInstance &instance, const QueryList &list);

/// Writes answers chosen by `answer` into the answer register of every prequery term.
SparseState apply_answers(const PrequeryState &pre, size_t M, size_t n,
                          const std::function<bool(const QueryWord &)> &answer);

/// O_x: the postquery state for the given instance.
SparseState apply_oracle(const PrequeryState &pre, const StepInstance &instance);

/// The prequery state as a full register state (answers all zero).
SparseState prequery_as_state(const PrequeryState &pre, size_t M, size_t n);

/// Measures the output cells of a final state.
Distribution measure_output(const NonadaptiveComputer &computer, const SparseState &final_state);

/// V O_x U |0>|0>|i,h>, measured on the output cells.
Distribution run(const NonadaptiveComputer &computer, size_t block, const BitString &advice,
                 const StepInstance &instance);

/// Marginal over the last p bits of each outcome.
Distribution marginal_last_bits(const Distribution &dist, size_t p);

/// 1 - Pr[last p output bits equal the last p bits of bin_n(s_block)].
Rational error_probability(const NonadaptiveComputer &computer, const AdviceFunction &advice_fn, size_t p,
                           const StepInstance &instance, size_t block);

/// Worst error over instances x blocks. Throws std::invalid_argument on empty sets.
Rational max_error(const NonadaptiveComputer &computer, const AdviceFunction &advice_fn, size_t p,
                   std::span<const StepInstance> instances, std::span<const size_t> blocks);

}  // namespace qtt

#endif
