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

#include "qtt/compression/bounds.h"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qtt {

void EncodingContext::validate() const {
    if (M < 1 || !std::has_single_bit(M)) {
        throw std::invalid_argument("M must be a power of two, got " + std::to_string(M));
    }
    if (n < 1 || n > 32) {
        throw std::invalid_argument("n must be in [1, 32]");
    }
    if (p < 1 || p > n) {
        throw std::invalid_argument("p must be in [1, n], got " + std::to_string(p));
    }
    if (l < 1 || l > M) {
        throw std::invalid_argument("l must be in [1, M], got " + std::to_string(l));
    }
    rank_width();
}

size_t EncodingContext::log_M() const {
    return static_cast<size_t>(std::countr_zero(M));
}

size_t EncodingContext::index_width() const {
    return std::max<size_t>(1, log_M());
}

size_t EncodingContext::rank_width() const {
    uint64_t w = ceil_log2(Rational(T) / params.threshold());
    if (w > 64) {
        throw std::invalid_argument("rank field width " + std::to_string(w) + " exceeds 64 bits");
    }
    return w;
}

EncodingContext EncodingContext::for_computer(const NonadaptiveComputer &computer, size_t p,
                                              const ErrorParams &params, size_t l) {
    EncodingContext ctx{computer.M(), computer.n(), p, computer.k(), computer.T(), params, l};
    ctx.validate();
    return ctx;
}

bool PowerBound::exceeds(const Rational &x) const {
    if (coef <= 0) {
        return x < 0;
    }
    if (x <= 0) {
        return true;
    }
    // x < coef 2^(a/b)  <=>  (x / coef)^b < 2^a
    return pow(x / coef, exp_den) < pow2(exp_num);
}

std::optional<Rational> PowerBound::exact() const {
    if (exp_num % static_cast<int64_t>(exp_den) != 0) {
        return std::nullopt;
    }
    return coef * pow2(exp_num / static_cast<int64_t>(exp_den));
}

double PowerBound::approx() const {
    return coef.get_d() * std::exp2(static_cast<double>(exp_num) / static_cast<double>(exp_den));
}

std::string PowerBound::to_string() const {
    if (auto v = exact()) {
        return qtt::to_string(*v);
    }
    return qtt::to_string(coef) + "*2^(" + std::to_string(exp_num) + "/" + std::to_string(exp_den) + ")";
}

bool operator<(const PowerBound &a, const PowerBound &b) {
    if (a.coef <= 0 || b.coef <= 0) {
        return a.coef <= 0 && b.coef > 0;
    }
    uint64_t den = std::lcm(a.exp_den, b.exp_den);
    int64_t x = a.exp_num * static_cast<int64_t>(den / a.exp_den);
    int64_t y = b.exp_num * static_cast<int64_t>(den / b.exp_den);
    return pow(a.coef / b.coef, den) < pow2(y - x);
}

PowerBound c_uv(const EncodingContext &ctx, size_t good_count) {
    if (ctx.l < 1) {
        throw std::invalid_argument("l must be at least 1");
    }
    if (ctx.M < 1 || !std::has_single_bit(ctx.M)) {
        throw std::invalid_argument("M must be a power of two");
    }
    const Rational &C = ctx.params.threshold();
    Rational M = static_cast<unsigned long>(ctx.M);
    if (ctx.l <= good_count) {
        Rational coef = C * pow2(static_cast<int64_t>(ctx.n)) / (M * M * pow2(static_cast<int64_t>(ctx.p) + 1));
        int64_t num = -static_cast<int64_t>(ctx.k + 2);
        uint64_t den = ctx.l;
        uint64_t g = std::gcd(static_cast<uint64_t>(-num), den);
        return {coef, num / static_cast<int64_t>(g), den / g};
    }
    Rational A = static_cast<unsigned long>(2 * ctx.l * ctx.log_M() + ctx.k + 2);
    Rational p = static_cast<unsigned long>(ctx.p);
    Rational coef = C * Rational(static_cast<unsigned long>(ctx.M - ctx.l)) * p * p / (A * A);
    return {coef, 0, 1};
}

std::string InequalityReport::note() const {
    if (!hypothesis) {
        return "hypothesis not met; no length guarantee";
    }
    return inequality ? "hypothesis met; inequality verified" : "hypothesis met; inequality FAILED";
}

InequalityReport check_inequalities(const EncodingContext &ctx, size_t good_count, size_t T) {
    if (T < 1) {
        throw std::invalid_argument("check_inequalities requires T >= 1");
    }
    const Rational &C = ctx.params.threshold();
    InequalityReport report{ctx.l <= good_count ? 1 : 2, c_uv(ctx, good_count), T, false, false};
    Rational t = static_cast<unsigned long>(T);
    report.hypothesis = report.bound.exceeds(t);
    int64_t l = static_cast<int64_t>(ctx.l);
    if (report.branch == 1) {
        int64_t rhs = -(l * (2 * static_cast<int64_t>(ctx.log_M()) - static_cast<int64_t>(ctx.n) +
                             static_cast<int64_t>(ctx.p) + 1) +
                        static_cast<int64_t>(ctx.k) + 2);
        report.inequality = pow(t / C, ctx.l) < pow2(rhs);
    } else {
        Rational A = static_cast<unsigned long>(2 * ctx.l * ctx.log_M() + ctx.k + 2);
        Rational p = static_cast<unsigned long>(ctx.p);
        report.inequality = A * A * t < p * p * C * Rational(static_cast<unsigned long>(ctx.M - ctx.l));
    }
    return report;
}

size_t predicted_length(const EncodingContext &ctx, size_t good_count, size_t lwss_rounds) {
    size_t bad = ctx.M - good_count;
    size_t header = ctx.k + 2 * good_count * ctx.index_width() + 2;
    if (ctx.l <= good_count) {
        return header + good_count * (ctx.rank_width() + ctx.p) + bad * ctx.n;
    }
    if (lwss_rounds > bad) {
        throw std::invalid_argument("more LWSS rounds than bad blocks");
    }
    return header + good_count * ctx.n + bad * (ctx.n - ctx.p) + ctx.p * (bad - lwss_rounds);
}

}  // namespace qtt
