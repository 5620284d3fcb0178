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

#ifndef QTT_COMPRESSION_LWSS_H
#define QTT_COMPRESSION_LWSS_H

#include <map>
#include <vector>

#include "qtt/compression/bounds.h"
#include "qtt/compression/weights.h"

namespace qtt {

/// Round count and cross-weight filter of one LWSS run.
struct LwssSchedule {
    size_t rounds;
    /// Blocks whose cross weight is >= threshold drop out of the survivor set.
    Rational threshold;
};

/// rounds = the largest integer m >= 0 with (T/C) m^2 - (T/C - 1) m - (M - good_count) <= 0,
/// which is the positive root of the equality rounded down; threshold = C / m.
/// A computer with T = 0 gets no rounds.
LwssSchedule default_lwss_schedule(const EncodingContext &ctx, size_t good_count);

struct LwssResult {
    LwssSchedule schedule;
    /// Selected blocks w_1, ..., w_m in round order.
    std::vector<size_t> selected;
    /// |L_1|, ..., |L_{m+1}|.
    std::vector<size_t> survivor_sizes;
    /// cross_weights[i][j] = wt_p(w_{i+1} : j, First_{n-p}(s_j)) for every bad j.
    std::vector<std::map<size_t, Rational>> cross_weights;

    bool contains(size_t block) const;
    /// 1-based round in which the block was selected, or 0.
    size_t round_of(size_t block) const;
};

/// Runs LWSS from the data a decoder has: the advice, the bad blocks and their
/// (n - p)-bit prefixes (keyed by block). Throws InvariantViolation if a round finds no
/// unselected survivor.
LwssResult lwss(const NonadaptiveComputer &computer, const BitString &advice, const std::map<size_t, uint64_t> &bad_prefixes,
                size_t p, const LwssSchedule &schedule);

/// Runs LWSS for an instance with the default schedule.
LwssResult lwss(const NonadaptiveComputer &computer, const StepInstance &instance, const GoodBadProfile &profile,
                const EncodingContext &ctx);

}  // namespace qtt

#endif
