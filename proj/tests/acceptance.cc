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


// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qtt/adversary.h"
#include "qtt/compression/single_block.h"
#include "qtt/harness/commands.h"
#include "qtt/harness/subjects.h"
#include "qtt/reference_algorithms.h"

using namespace qtt;

namespace {

struct Sweep {
    std::string subject;
    size_t M, n, p, k, l;

    ExperimentConfig config() const {
        ExperimentConfig c;
        c.subject = subject;
        c.M = M;
        c.n = n;
        c.p = p;
        c.k = k;
        c.l = l;
        return c;
    }
    std::string label() const {
        std::ostringstream s;
        s << subject << "(M=" << M << ",n=" << n << ",p=" << p << ",k=" << k << ",l=" << l << ")";
        return s.str();
    }
};

std::vector<Sweep> sweeps() {
    std::vector<Sweep> out;
    for (size_t l : {1, 2}) {
        out.push_back({"full-query", 2, 3, 1, 0, l});
    }
    for (size_t p : {1, 2}) {
        for (size_t l : {1, 2}) {
            out.push_back({"full-query", 2, 2, p, 0, l});
            for (size_t k = 1; k <= 4; k++) {
                out.push_back({"advised", 2, 2, p, k, l});
            }
            out.push_back({"shortcut", 2, 2, p, 2, l});
            out.push_back({"leaky", 2, 2, p, 4, l});
        }
    }
    return out;
}

std::vector<size_t> blocks(size_t M) {
    std::vector<size_t> b;
    for (size_t i = 1; i <= M; i++) {
        b.push_back(i);
    }
    return b;
}

bool exact_with_T(const AdvisedComputer &s, uint64_t T, std::ostringstream &why) {
    const auto &c = s.computer;
    auto all = enumerate_instances(c.M(), c.n());
    Rational err = max_error(c, s.advice, c.n(), all, blocks(c.M()));
    bool ok = c.T() == T && err == 0;
    if (!ok) {
        why << " [M=" << c.M() << " n=" << c.n() << " k=" << c.k() << ": T=" << c.T() << " want " << T
            << ", max_error=" << to_string(err) << "]";
    }
    return ok;
}

bool ac1(std::ostringstream &why) {
    bool ok = true;
    for (size_t n = 1; n <= 4; n++) {
        ok &= exact_with_T(build_full_query(1, n), (uint64_t{1} << n) - 1, why);
    }
    for (auto [n, k] : std::vector<std::pair<size_t, size_t>>{{3, 1}, {4, 1}, {4, 2}}) {
        ok &= exact_with_T(build_advised(1, n, k), (uint64_t{1} << (n - k)) - 1, why);
    }
    ok &= exact_with_T(build_advised(2, 3, 2), (uint64_t{1} << (3 - 2 / 2)) - 1, why);
    why << " 8 subjects exact";
    return ok;
}

struct SweepResults {
    size_t round_trips = 0, case1 = 0, case2 = 0, lemma_rows = 0, substituted = 0;
    bool roundtrip = true, pigeonhole = true, formula = true, lemmas = true;
    std::string failures;
};

SweepResults run_sweeps() {
    SweepResults r;
    for (const auto &s : sweeps()) {
        ExperimentConfig c = s.config();
        Report rt = cmd_roundtrip(c);
        const auto &sum = rt.summary;
        size_t n_inst = sum["instances"];
        size_t trips = sum["round_trips"];
        r.round_trips += trips;
        r.case1 += sum["case1"].get<size_t>();
        r.case2 += sum["case2"].get<size_t>();
        if (trips != n_inst || n_inst != instance_count(s.M, s.n)) {
            r.roundtrip = false;
            r.failures += " roundtrip:" + s.label();
        }
        if (!sum["injective"].get<bool>() || !sum["reaches_input_length"].get<bool>()) {
            r.pigeonhole = false;
            r.failures += " pigeonhole:" + s.label();
        }
        if (!sum["length_formula"].get<bool>() || !sum["implication"].get<bool>() || !sum["item_map"].get<bool>()) {
            r.formula = false;
            r.failures += " formula:" + s.label();
        }
        Report lm = cmd_lemmas(c);
        r.lemma_rows += lm.rows.size();
        if (lm.summary["lemmas"].contains("substituted.distance")) {
            r.substituted += lm.summary["lemmas"]["substituted.distance"]["pass"].get<size_t>();
        }
        if (!lm.passed) {
            r.lemmas = false;
            r.failures += " lemmas:" + s.label();
        }
    }
    return r;
}

bool ac5(std::ostringstream &why) {
    ErrorParams params = ErrorParams::defaults();
    std::vector<std::pair<std::string, size_t>> subjects{
        {"full-query", 0}, {"advised", 0}, {"advised", 1}, {"shortcut", 1}, {"zero-query", 0}};
    bool ok = true;
    size_t trips = 0, case2 = 0;
    for (const auto &[name, k] : subjects) {
        AdvisedComputer s = make_subject(name, 1, 4, k);
        SingleBlockContext ctx = SingleBlockContext::for_computer(s.computer, params);
        bool exact = max_error(s.computer, s.advice, ctx.p(), enumerate_instances(1, 4), blocks(1)) == 0;
        for (const auto &inst : enumerate_instances(1, 4)) {
            Encoding e = encode_single(ctx, s.computer, s.advice, inst);
            if (e.case_tag == 2) {
                case2++;
                ok &= e.size() == 3;
            }
            // Decoding is only guaranteed for correct subjects.
            if (exact) {
                bool back = decode_single(ctx, s.computer, e.bits).instance == inst;
                ok &= back;
                trips += back;
            }
        }
    }
    ok &= trips == 4 * 16 && case2 > 0;
    why << " " << trips << " round-trips, " << case2 << " Case 2 encodings of length 3";
    return ok;
}

bool ac6(std::ostringstream &why) {
    bool ok = true;
    for (size_t k : {0, 1}) {
        AdvisedComputer a = build_advised(1, 3, k);
        ZetaReport z = zeta(a.computer, partition_by_advice(a.advice, 3), 0);
        bool tight = z.zeta == 0 && z.implied_bound_holds() && z.T == z.b - 1 &&
                     std::abs(adversary_bound(8, k, 0) - static_cast<double>(z.T)) <= 1e-9;
        ok &= tight;
        why << " k=" << k << ": zeta=" << to_string(z.zeta) << " T=" << z.T << " bound="
            << adversary_bound(8, k, 0) << ";";
    }
    size_t checked = 0;
    for (size_t n = 1; n <= 3; n++) {
        for (size_t k = 0; k <= n; k++) {
            for (const auto &name : builtin_subjects()) {
                std::optional<AdvisedComputer> s;
                try {
                    s = make_subject(name, 1, n, k);
                } catch (const std::invalid_argument &) {
                    continue;
                }
                AdvicePartition part = partition_by_advice(s->advice, n);
                if (part.b() < 2) {
                    continue;
                }
                ok &= zeta(s->computer, part, Rational(1, 3)).structural_holds();
                checked++;
            }
        }
    }
    why << " structural bound on " << checked << " subject/parameter pairs";
    return ok;
}

}  // namespace

int main() {
    bool all = true;
    auto report = [&](const char *id, const std::function<bool(std::ostringstream &)> &check) {
        std::ostringstream why;
        bool ok = false;
        try {
            ok = check(why);
        } catch (const std::exception &e) {
            why << " exception: " << e.what();
        }
        all = all && ok;
        std::cout << id << " " << (ok ? "PASS" : "FAIL") << ":" << why.str() << "\n";
    };

    report("AC1", ac1);
    SweepResults sw = run_sweeps();
    report("AC2", [&](std::ostringstream &why) {
        why << " " << sw.round_trips << " round-trips over " << sweeps().size() << " sweeps, Case 1 " << sw.case1
            << ", Case 2 " << sw.case2 << sw.failures;
        return sw.roundtrip && sw.case1 > 0 && sw.case2 > 0;
    });
    report("AC3", [&](std::ostringstream &why) {
        why << " every sweep injective and reaches M*n";
        return sw.pigeonhole;
    });
    report("AC4", [&](std::ostringstream &why) {
        why << " " << sw.lemma_rows << " audit rows, " << sw.substituted << " substituted-state checks";
        return sw.lemmas && sw.substituted > 0;
    });
    report("AC5", ac5);
    report("AC6", ac6);
    report("AC7", [&](std::ostringstream &why) {
        why << " length equals item sum on every encoding; implication checked";
        return sw.formula;
    });
    std::cout << (all ? "ALL PASS" : "SOME FAILED") << "\n";
    return all ? 0 : 1;
}
