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

#include "qtt/compression/pigeonhole.h"

#include <functional>

namespace qtt {

namespace {

PigeonholeReport census(const std::vector<StepInstance> &instances, size_t input_length,
                        const std::function<Encoding(const StepInstance &)> &encoder) {
    PigeonholeReport report;
    report.input_length = input_length;
    std::map<BitString, size_t> seen;
    for (size_t t = 0; t < instances.size(); t++) {
        Encoding enc = encoder(instances[t]);
        size_t len = enc.size();
        if (report.instances == 0 || len < report.min_length) {
            report.min_length = len;
        }
        report.max_length = std::max(report.max_length, len);
        report.length_census[len]++;
        (enc.case_tag == 1 ? report.case1 : report.case2)++;
        report.instances++;
        auto [it, inserted] = seen.emplace(std::move(enc.bits), t);
        if (!inserted && !report.collision) {
            report.collision.emplace(instances[it->second], instances[t]);
        }
    }
    return report;
}

}  // namespace

PigeonholeReport verify_pigeonhole(const EncodingContext &ctx, const NonadaptiveComputer &computer,
                                   const AdviceFunction &advice_fn, uint64_t budget) {
    auto instances = enumerate_instances(ctx.M, ctx.n, budget);
    return census(instances, ctx.M * ctx.n,
                  [&](const StepInstance &s) { return encode(ctx, computer, advice_fn, s); });
}

PigeonholeReport verify_pigeonhole_single(const SingleBlockContext &ctx, const NonadaptiveComputer &computer,
                                          const AdviceFunction &advice_fn) {
    auto instances = enumerate_instances(1, ctx.n, uint64_t{1} << ctx.n);
    return census(instances, ctx.n,
                  [&](const StepInstance &s) { return encode_single(ctx, computer, advice_fn, s); });
}

}  // namespace qtt
