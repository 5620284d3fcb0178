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

#include "qtt/rational.h"

#include <cctype>
#include <stdexcept>

namespace qtt {

namespace {

bool is_integer_literal(std::string_view text) {
    size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        start = 1;
    }
    if (start >= text.size()) {
        return false;
    }
    for (size_t i = start; i < text.size(); i++) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string normalized;
    constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    if (text.substr(0, kUnicodeMinus.size()) == kUnicodeMinus) {
        normalized = "-";
        normalized.append(text.substr(kUnicodeMinus.size()));
    } else {
        normalized = std::string(text);
    }
    while (!normalized.empty() && std::isspace(static_cast<unsigned char>(normalized.back()))) {
        normalized.pop_back();
    }
    size_t lead = 0;
    while (lead < normalized.size() && std::isspace(static_cast<unsigned char>(normalized[lead]))) {
        lead++;
    }
    normalized.erase(0, lead);

    auto slash = normalized.find('/');
    std::string num = normalized.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : normalized.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    mpz_class p(num, 10);
    mpz_class q(den, 10);
    if (q == 0) {
        throw std::invalid_argument("zero denominator in rational literal '" + std::string(text) + "'");
    }
    Rational result(p, q);
    result.canonicalize();
    return result;
}

std::string to_string(const Rational &value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational &value, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class magnitude = value.get_num();
    if (magnitude < 0) {
        magnitude = -magnitude;
    }
    magnitude *= scale;
    mpz_class q = value.get_den();
    mpz_class scaled = (2 * magnitude + q) / (2 * q);  // round half up
    mpz_class whole = scaled / scale;
    mpz_class frac = scaled % scale;
    std::string frac_str = frac.get_str();
    frac_str.insert(0, static_cast<size_t>(digits) - frac_str.size(), '0');
    while (!frac_str.empty() && frac_str.back() == '0') {
        frac_str.pop_back();
    }
    std::string out = value < 0 && scaled != 0 ? "-" : "";
    out += whole.get_str();
    if (!frac_str.empty()) {
        out += "." + frac_str;
    }
    return out;
}

Rational abs(const Rational &value) {
    return value < 0 ? Rational(-value) : value;
}

Rational pow2(int64_t exponent) {
    mpz_class p = 1;
    uint64_t e = exponent < 0 ? static_cast<uint64_t>(-exponent) : static_cast<uint64_t>(exponent);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
    if (exponent < 0) {
        return Rational(mpz_class(1), p);
    }
    return Rational(p);
}

Rational pow(const Rational &base, uint64_t exponent) {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
    Rational result(num, den);
    result.canonicalize();
    return result;
}

uint64_t ceil_log2(const Rational &value) {
    uint64_t e = 0;
    Rational power = 1;
    while (power < value) {
        power *= 2;
        e++;
    }
    return e;
}

mpz_class floor(const Rational &value) {
    mpz_class result;
    mpz_fdiv_q(result.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return result;
}

}  // namespace qtt
