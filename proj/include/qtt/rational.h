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

#ifndef QTT_RATIONAL_H
#define QTT_RATIONAL_H

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qtt {

/// Exact rational number. Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// Parses "p/q", "p", "-p/q". The unicode minus sign U+2212 is accepted as well.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational &value);

/// Decimal rendering for human-facing reports; not used in any comparison.
std::string to_decimal(const Rational &value, int digits = 12);

Rational abs(const Rational &value);

/// 2^exponent as an exact rational (negative exponents allowed).
Rational pow2(int64_t exponent);

/// base^exponent for exponent >= 0.
Rational pow(const Rational &base, uint64_t exponent);

/// Smallest integer e >= 0 with 2^e >= value; 0 when value <= 1.
uint64_t ceil_log2(const Rational &value);

/// Largest integer not exceeding value.
mpz_class floor(const Rational &value);

}  // namespace qtt

#endif
