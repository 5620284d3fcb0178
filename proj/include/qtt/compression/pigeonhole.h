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

#ifndef QTT_COMPRESSION_PIGEONHOLE_H
#define QTT_COMPRESSION_PIGEONHOLE_H

#include <map>
#include <optional>
#include <utility>

#include "qtt/compression/single_block.h"

namespace qtt {

struct PigeonholeReport {
    size_t instances = 0;
    /// Length in bits of the inputs, M n.
    size_t input_length = 0;
    size_t max_length = 0;
    size_t min_length = 0;
    /// Instance count per encoding length.
    std::map<size_t, size_t> length_census;
    size_t case1 = 0;
    size_t case2 = 0;
    /// The first pair of instances found sharing an encoding.
    std::optional<std::pair<StepInstance, StepInstance>> collision;

    bool injective() const {
        return !collision.has_value();
    }
    bool reaches_input_length() const {
        return instances > 0 && max_length >= input_length;
    }
    bool passed() const {
        return injective() && reaches_input_length();
    }
};

/// Encodes every instance and checks that no two share an encoding.
PigeonholeReport verify_pigeonhole(const EncodingContext &ctx, const NonadaptiveComputer &computer,
                                   const AdviceFunction &advice_fn, uint64_t budget = 4096);

PigeonholeReport verify_pigeonhole_single(const SingleBlockContext &ctx, const NonadaptiveComputer &computer,
                                          const AdviceFunction &advice_fn);

}  // namespace qtt

#endif
