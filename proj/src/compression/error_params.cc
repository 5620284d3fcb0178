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

#include "qtt/compression/error_params.h"

namespace qtt {

ErrorParams ErrorParams::make(const Rational &epsilon, const Rational &c) {
    if (epsilon < 0 || epsilon >= Rational(1, 2)) {
        throw std::invalid_argument("epsilon must lie in [0, 1/2), got " + to_string(epsilon));
    }
    ErrorParams p;
    p.epsilon_ = epsilon;
    p.c_ = c;
    p.d_ = epsilon > 0 ? Rational(1 / (2 * epsilon) - 1) : Rational(1);
    if (c <= 0 || c >= p.d_) {
        throw std::invalid_argument("c must lie in (0, " + to_string(p.d_) + "), got " + to_string(c));
    }
    p.epsilon_prime_ = (1 + c) * epsilon;
    p.sqrt_threshold_ = (1 - 2 * p.epsilon_prime_) / 4;
    p.threshold_ = p.sqrt_threshold_ * p.sqrt_threshold_;
    if (2 * p.sqrt_threshold_ + epsilon != Rational(1, 2) - c * epsilon || p.threshold_ <= 0) {
        throw InvariantViolation("error parameter identities failed");
    }
    return p;
}

ErrorParams ErrorParams::defaults() {
    return make(Rational(1, 3), Rational(1, 8));
}

}  // namespace qtt
