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

#ifndef QTT_ADVERSARY_H
#define QTT_ADVERSARY_H

#include <map>
#include <vector>

#include "qtt/model.h"

namespace qtt {

/// Single-block steps grouped by the advice string they receive.
struct AdvicePartition {
    size_t n;
    size_t k;
    /// Advice string -> ascending steps.
    std::map<BitString, std::vector<uint64_t>> classes;
    /// The lexicographically smallest advice string whose class has at least N / 2^k steps.
    BitString selected;

    const std::vector<uint64_t> &selected_steps() const {
        return classes.at(selected);
    }
    size_t b() const {
        return selected_steps().size();
    }
};

AdvicePartition partition_by_advice(const AdviceFunction &advice_fn, size_t n);

/// V O_s U |advice>, for a single-block instance.
SparseState final_state(const NonadaptiveComputer &computer, const BitString &advice, const StepInstance &instance);

struct ZetaReport {
    /// |I(t, t+1)| for consecutive steps of the selected class.
    std::vector<Rational> overlaps;
    Rational zeta;
    size_t b;
    size_t T;
    Rational epsilon;

    /// (b - 1) - T.
    Rational structural_lower() const {
        return Rational(static_cast<long>(b) - 1 - static_cast<long>(T));
    }
    bool structural_holds() const {
        return zeta >= structural_lower();
    }
    /// Every |I(t, t+1)| <= 2 sqrt(eps (1 - eps)), compared squared.
    bool pair_bounds_hold() const;
    /// T >= (1 - 2 sqrt(eps (1 - eps))) (b - 1), compared exactly.
    bool implied_bound_holds() const;
    /// 2 sqrt(eps (1 - eps)) (b - 1), to about 1e-9.
    double upper_bound() const;
    double implied_bound() const;
};

/// Throws std::invalid_argument if the selected class has fewer than two steps.
ZetaReport zeta(const NonadaptiveComputer &computer, const AdvicePartition &partition, const Rational &epsilon);

/// (1 - 2 sqrt(eps (1 - eps))) (N / 2^k - 1), to about 1e-9.
double adversary_bound(uint64_t N, size_t k, const Rational &epsilon);

}  // namespace qtt

#endif
