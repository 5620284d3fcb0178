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

#include "qtt/model.h"

#include <stdexcept>
#include <string>

namespace qtt {

PrequeryState::PrequeryState(size_t T, uint64_t workspace_dim) : T_(T), workspace_dim_(workspace_dim) {
    if (workspace_dim_ == 0) {
        throw std::invalid_argument("workspace dimension must be positive");
    }
}

void PrequeryState::add(QueryList list, uint64_t workspace, const Rational &amplitude) {
    if (list.size() != T_) {
        throw std::invalid_argument("query list has " + std::to_string(list.size()) + " words, expected exactly " +
                                    std::to_string(T_));
    }
    if (workspace >= workspace_dim_) {
        throw std::out_of_range("workspace index out of range");
    }
    if (amplitude == 0) {
        return;
    }
    PrequeryKey key{std::move(list), workspace};
    auto [it, inserted] = terms_.try_emplace(std::move(key), amplitude);
    if (!inserted) {
        it->second += amplitude;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational PrequeryState::norm_sq() const {
    Rational total = 0;
    for (const auto &[key, amp] : terms_) {
        total += amp * amp;
    }
    return total;
}

std::vector<uint64_t> RegisterLayout::dims() const {
    std::vector<uint64_t> dims;
    dims.reserve(2 * T + 1);
    uint64_t word_dim = static_cast<uint64_t>(M) << n;
    dims.insert(dims.end(), T, word_dim);
    dims.insert(dims.end(), T, 2);
    dims.push_back(workspace_dim);
    return dims;
}

FinalTransform FinalTransform::output_rule(OutputRule rule) {
    FinalTransform t;
    t.rule_ = std::move(rule);
    return t;
}

FinalTransform FinalTransform::matrix(OrthogonalMatrix m) {
    FinalTransform t;
    t.matrix_ = std::move(m);
    return t;
}

SparseState FinalTransform::apply(const SparseState &post, const RegisterLayout &layout, size_t output_width) const {
    if (post.dims() != layout.dims()) {
        throw std::invalid_argument("final transform applied to a state of the wrong shape");
    }
    if (matrix_) {
        return apply_matrix(*matrix_, post);
    }
    uint64_t scratch_dim = layout.workspace_dim >> output_width;
    uint64_t out_limit = uint64_t{1} << output_width;
    SparseState out(post.dims());
    QueryList words(layout.T);
    std::vector<uint8_t> answers(layout.T);
    for (const auto &[key, amp] : post.amplitudes()) {
        for (size_t j = 0; j < layout.T; j++) {
            words[j] = layout.decode_word(key[j]);
            answers[j] = static_cast<uint8_t>(key[layout.answer_register(j)]);
        }
        uint64_t ws = key[layout.workspace_register()];
        uint64_t output = ws / scratch_dim;
        uint64_t scratch = ws % scratch_dim;
        uint64_t mask = rule_(words, answers, scratch);
        if (mask >= out_limit) {
            throw std::logic_error("output rule produced a value wider than the output register");
        }
        BasisKey target = key;
        target[layout.workspace_register()] = (output ^ mask) * scratch_dim + scratch;
        out.add(target, amp);
    }
    return out;
}

NonadaptiveComputer::NonadaptiveComputer(size_t M, size_t n, size_t T, size_t k, size_t output_width,
                                         uint64_t workspace_dim, Generator generator, FinalTransform final_transform)
    : layout_{M, n, T, workspace_dim},
      k_(k),
      output_width_(output_width),
      generator_(std::move(generator)),
      final_(std::move(final_transform)) {
    if (M < 1 || n < 1 || n > 32) {
        throw std::invalid_argument("computer needs M >= 1 and n in [1, 32]");
    }
    if (output_width_ >= 63 || workspace_dim == 0 || workspace_dim % (uint64_t{1} << output_width_) != 0) {
        throw std::invalid_argument("workspace dimension must be a positive multiple of 2^output_width");
    }
    if (const auto *m = final_.explicit_matrix()) {
        SparseState probe(layout_.dims());
        if (probe.total_dimension() != m->dimension()) {
            throw std::invalid_argument("final matrix dimension " + std::to_string(m->dimension()) +
                                        " does not match the register space");
        }
    }
}

PrequeryState NonadaptiveComputer::prequery(size_t block, const BitString &advice) const {
    if (block < 1 || block > M()) {
        throw std::out_of_range("block input " + std::to_string(block) + " outside [1, " + std::to_string(M()) + "]");
    }
    if (advice.size() != k_) {
        throw std::invalid_argument("advice has " + std::to_string(advice.size()) + " bits, computer expects " +
                                    std::to_string(k_));
    }
    PrequeryState pre = generator_(block, advice);
    if (pre.T() != T() || pre.workspace_dim() != workspace_dim()) {
        throw std::logic_error("prequery generator produced a state of the wrong shape");
    }
    uint64_t N = uint64_t{1} << n();
    for (const auto &[key, amp] : pre.terms()) {
        for (const auto &w : key.list) {
            if (w.block < 1 || w.block > M() || w.location >= N) {
                throw std::logic_error("prequery generator produced a query word outside the problem domain");
            }
        }
    }
    if (pre.norm_sq() != 1) {
        throw std::logic_error("prequery state for block " + std::to_string(block) + " has squared norm " +
                               to_string(pre.norm_sq()));
    }
    return pre;
}

BitString AdviceFunction::operator()(const StepInstance &instance) const {
    BitString h = fn_(instance);
    if (h.size() != k_) {
        throw std::logic_error("advice function returned " + std::to_string(h.size()) + " bits, expected " +
                               std::to_string(k_));
    }
    return h;
}

std::vector<uint8_t> oracle_answers(const StepInstance &instance, const QueryList &list) {
    std::vector<uint8_t> bits;
    bits.reserve(list.size());
    for (const auto &w : list) {
        if (w.block < 1 || w.block > instance.M() || w.location >= instance.N()) {
            throw std::out_of_range("query word outside the instance domain");
        }
        bits.push_back(instance.bit(w.block, w.location) ? 1 : 0);
    }
    return bits;
}

SparseState apply_answers(const PrequeryState &pre, size_t M, size_t n,
                          const std::function<bool(const QueryWord &)> &answer) {
    RegisterLayout layout{M, n, pre.T(), pre.workspace_dim()};
    SparseState out(layout.dims());
    BasisKey key(2 * pre.T() + 1);
    for (const auto &[term, amp] : pre.terms()) {
        for (size_t j = 0; j < pre.T(); j++) {
            key[j] = layout.encode_word(term.list[j]);
            key[layout.answer_register(j)] = answer(term.list[j]) ? 1 : 0;
        }
        key[layout.workspace_register()] = term.workspace;
        out.add(key, amp);
    }
    return out;
}

SparseState apply_oracle(const PrequeryState &pre, const StepInstance &instance) {
    return apply_answers(pre, instance.M(), instance.n(), [&](const QueryWord &w) {
        if (w.block < 1 || w.block > instance.M() || w.location >= instance.N()) {
            throw std::out_of_range("query word outside the instance domain");
        }
        return instance.bit(w.block, w.location);
    });
}

SparseState prequery_as_state(const PrequeryState &pre, size_t M, size_t n) {
    return apply_answers(pre, M, n, [](const QueryWord &) { return false; });
}

Distribution measure_output(const NonadaptiveComputer &computer, const SparseState &final_state) {
    return measure_register(final_state, computer.layout().workspace_register(), computer.output_width());
}

Distribution run(const NonadaptiveComputer &computer, size_t block, const BitString &advice,
                 const StepInstance &instance) {
    if (instance.M() != computer.M() || instance.n() != computer.n()) {
        throw std::invalid_argument("instance shape does not match the computer");
    }
    PrequeryState pre = computer.prequery(block, advice);
    SparseState post = apply_oracle(pre, instance);
    SparseState final_state = computer.final_transform().apply(post, computer.layout(), computer.output_width());
    return measure_output(computer, final_state);
}

Distribution marginal_last_bits(const Distribution &dist, size_t p) {
    Distribution out;
    for (const auto &[outcome, prob] : dist) {
        out[last_bits(outcome, p)] += prob;
    }
    return out;
}

Rational error_probability(const NonadaptiveComputer &computer, const AdviceFunction &advice_fn, size_t p,
                           const StepInstance &instance, size_t block) {
    if (p < 1 || p > computer.output_width() || p > instance.n()) {
        throw std::invalid_argument("answer width p must be in [1, min(n, output width)]");
    }
    Distribution dist = run(computer, block, advice_fn(instance), instance);
    uint64_t correct = last_bits(instance.code(block), p);
    Rational hit = 0;
    for (const auto &[outcome, prob] : dist) {
        if (last_bits(outcome, p) == correct) {
            hit += prob;
        }
    }
    return Rational(1) - hit;
}

Rational max_error(const NonadaptiveComputer &computer, const AdviceFunction &advice_fn, size_t p,
                   std::span<const StepInstance> instances, std::span<const size_t> blocks) {
    if (instances.empty() || blocks.empty()) {
        throw std::invalid_argument("max_error over an empty domain");
    }
    Rational worst = 0;
    for (const auto &instance : instances) {
        for (size_t block : blocks) {
            Rational e = error_probability(computer, advice_fn, p, instance, block);
            if (e > worst) {
                worst = e;
            }
        }
    }
    return worst;
}

}  // namespace qtt
