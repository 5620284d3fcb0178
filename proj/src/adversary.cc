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

#include "qtt/adversary.h"

#include <cmath>
#include <stdexcept>

namespace qtt {

namespace {

void check_epsilon(const Rational &epsilon) {
    if (epsilon < 0 || epsilon * 2 >= 1) {
        throw std::invalid_argument("epsilon must be in [0, 1/2)");
    }
}

double two_sqrt_eps(const Rational &epsilon) {
    double e = epsilon.get_d();
    return 2 * std::sqrt(e * (1 - e));
}

}  // namespace

AdvicePartition partition_by_advice(const AdviceFunction &advice_fn, size_t n) {
    AdvicePartition part{n, advice_fn.k(), {}, {}};
    for (const auto &s : enumerate_instances(1, n, uint64_t{1} << n)) {
        part.classes[advice_fn(s)].push_back(s.step(1));
    }
    Rational needed = pow2(static_cast<int64_t>(n) - static_cast<int64_t>(part.k));
    for (const auto &[advice, steps] : part.classes) {
        if (Rational(static_cast<unsigned long>(steps.size())) >= needed) {
            part.selected = advice;
            return part;
        }
    }
    throw std::logic_error("no advice class reaches N / 2^k steps");
}

SparseState final_state(const NonadaptiveComputer &computer, const BitString &advice, const StepInstance &instance) {
    if (computer.M() != 1 || instance.M() != 1 || instance.n() != computer.n()) {
        throw std::invalid_argument("final_state needs a single-block computer and instance of the same n");
    }
    PrequeryState pre = computer.prequery(1, advice);
    return computer.final_transform().apply(apply_oracle(pre, instance), computer.layout(), computer.output_width());
}

bool ZetaReport::pair_bounds_hold() const {
    Rational limit = 4 * epsilon * (1 - epsilon);
    for (const auto &overlap : overlaps) {
        if (overlap * overlap > limit) {
            return false;
        }
    }
    return true;
}

bool ZetaReport::implied_bound_holds() const {
    // T >= (1 - 2 sqrt(q)) (b - 1)  <=>  2 sqrt(q) (b - 1) >= (b - 1) - T
    Rational gap = structural_lower();
    if (gap <= 0) {
        return true;
    }
    Rational span = static_cast<long>(b) - 1;
    return 4 * epsilon * (1 - epsilon) * span * span >= gap * gap;
}

double ZetaReport::upper_bound() const {
    return two_sqrt_eps(epsilon) * static_cast<double>(b - 1);
}

double ZetaReport::implied_bound() const {
    return (1 - two_sqrt_eps(epsilon)) * static_cast<double>(b - 1);
}

ZetaReport zeta(const NonadaptiveComputer &computer, const AdvicePartition &partition, const Rational &epsilon) {
    check_epsilon(epsilon);
    const auto &steps = partition.selected_steps();
    if (steps.size() < 2) {
        throw std::invalid_argument("advice class has " + std::to_string(steps.size()) + " steps; need at least 2");
    }
    ZetaReport report{{}, 0, steps.size(), computer.T(), epsilon};
    std::vector<SparseState> states;
    for (uint64_t s : steps) {
        states.push_back(final_state(computer, partition.selected, StepInstance(partition.n, {s})));
    }
    for (size_t t = 0; t + 1 < states.size(); t++) {
        Rational overlap = abs(inner_product(states[t], states[t + 1]));
        report.zeta += overlap;
        report.overlaps.push_back(std::move(overlap));
    }
    return report;
}

double adversary_bound(uint64_t N, size_t k, const Rational &epsilon) {
    check_epsilon(epsilon);
    if (N == 0) {
        throw std::invalid_argument("N must be positive");
    }
    return (1 - two_sqrt_eps(epsilon)) * (static_cast<double>(N) / std::exp2(static_cast<double>(k)) - 1);
}

}  // namespace qtt
