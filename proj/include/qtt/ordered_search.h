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

#ifndef QTT_ORDERED_SEARCH_H
#define QTT_ORDERED_SEARCH_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtt {

/// Raised when an exhaustive sweep would exceed the configured instance budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A multiple-block ordered search oracle: M blocks of N = 2^n bits, block i being
/// 0^{s_i - 1} 1^{N - s_i + 1}.
///
/// Steps are 1-based ranks in [1, N]. A step is identified with the n-bit string
/// bin_n(s), whose integer value is s - 1; `code(i)` returns that value.
class StepInstance {
   public:
    StepInstance(size_t n, std::vector<uint64_t> steps);

    /// Parses "M=2 n=3 steps=3,7".
    static StepInstance parse(std::string_view literal);

    size_t M() const {
        return steps_.size();
    }
    size_t n() const {
        return n_;
    }
    uint64_t N() const {
        return uint64_t{1} << n_;
    }
    const std::vector<uint64_t> &steps() const {
        return steps_;
    }

    /// Step of block i (1-based).
    uint64_t step(size_t block) const;

    /// bin_n(step(block)) as an integer, i.e. step(block) - 1.
    uint64_t code(size_t block) const {
        return step(block) - 1;
    }

    /// Oracle bit of block `block` at the location whose n-bit string has value `location`.
    bool bit(size_t block, uint64_t location) const {
        return location >= code(block);
    }

    std::string to_string() const;

    bool operator==(const StepInstance &other) const = default;
    auto operator<=>(const StepInstance &other) const = default;

   private:
    size_t n_;
    std::vector<uint64_t> steps_;
};

/// Problem shape for G_{M,N,p}: the answer is the last p bits of bin_n(s_i).
struct ProblemSpec {
    size_t M;
    size_t n;
    size_t p;

    void validate() const;
};

/// The lexicographically i-th n-bit string, i in [1, 2^n].
std::string bin_n(size_t n, uint64_t rank);

/// 0^{s-1} 1^{N-s+1}.
std::string step_string(size_t n, uint64_t step);

/// Last p bits of bin_n(s_i).
std::string eval_G(const StepInstance &instance, size_t block, size_t p);

/// Integer value of the first `count` bits of an n-bit value.
inline uint64_t first_bits(uint64_t value, size_t n, size_t count) {
    return count == 0 ? 0 : value >> (n - count);
}

/// Integer value of the last `count` bits.
inline uint64_t last_bits(uint64_t value, size_t count) {
    return count >= 64 ? value : value & ((uint64_t{1} << count) - 1);
}

/// Renders value as a width-bit string.
std::string bits_to_string(uint64_t value, size_t width);

/// Number of instances N^M, or 0 if it exceeds 2^63.
uint64_t instance_count(size_t M, size_t n);

/// All N^M instances in lexicographic order of the step vector.
/// Throws BudgetExceeded if N^M > budget.
std::vector<StepInstance> enumerate_instances(size_t M, size_t n, uint64_t budget = 4096);

}  // namespace qtt

#endif
