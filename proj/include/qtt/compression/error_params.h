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

#ifndef QTT_COMPRESSION_ERROR_PARAMS_H
#define QTT_COMPRESSION_ERROR_PARAMS_H

#include <stdexcept>

#include "qtt/rational.h"

namespace qtt {

/// Raised when an internal guarantee of the encoding machinery fails. These indicate
/// either a bug or a subject computer that violates its stated preconditions.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// The error budget and the threshold it induces.
///
///   d(eps)    = 1/(2 eps) - 1 if eps > 0, else 1
///   eps'      = (1 + c) eps
///   threshold = (1 - 2 eps')^2 / 16
///
/// The square root of the threshold, (1 - 2 eps') / 4, is rational, so the decoder margin
/// identity 2 sqrt(threshold) + eps = 1/2 - c eps holds exactly.
class ErrorParams {
   public:
    /// Requires eps in [0, 1/2) and c in (0, d(eps)); throws std::invalid_argument otherwise.
    static ErrorParams make(const Rational &epsilon, const Rational &c);

    /// eps = 1/3, c = 1/8, which gives threshold 1/256.
    static ErrorParams defaults();

    const Rational &epsilon() const {
        return epsilon_;
    }
    const Rational &c() const {
        return c_;
    }
    const Rational &d() const {
        return d_;
    }
    const Rational &epsilon_prime() const {
        return epsilon_prime_;
    }
    /// C_eps.
    const Rational &threshold() const {
        return threshold_;
    }
    const Rational &sqrt_threshold() const {
        return sqrt_threshold_;
    }
    /// c * eps: how far the decoder's success probability stays above one half.
    Rational margin() const {
        return c_ * epsilon_;
    }

   private:
    ErrorParams() = default;

    Rational epsilon_;
    Rational c_;
    Rational d_;
    Rational epsilon_prime_;
    Rational threshold_;
    Rational sqrt_threshold_;
};

}  // namespace qtt

#endif
