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

#include "qtt/harness/commands.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "qtt/adversary.h"
#include "qtt/compression/pigeonhole.h"
#include "qtt/harness/subjects.h"

namespace qtt {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

std::string steps_label(const StepInstance &s) {
    std::string out;
    for (uint64_t v : s.steps()) {
        out += (out.empty() ? "" : " ") + std::to_string(v);
    }
    return out;
}

const char *yes_no(bool b) {
    return b ? "pass" : "FAIL";
}

size_t answer_width(const ExperimentConfig &config) {
    return config.single() ? config.k + 1 : config.p;
}

AdvisedComputer load_subject(const ExperimentConfig &config) {
    try {
        return make_subject(config.subject, config.M, config.n, config.k);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

std::vector<StepInstance> sweep(const ExperimentConfig &config) {
    if (config.budget == 0) {
        return {};
    }
    return enumerate_instances(config.M, config.n, config.budget);
}

ordered_json base_summary(const char *command, const ExperimentConfig &config, const NonadaptiveComputer &c) {
    ordered_json s;
    s["command"] = command;
    s["subject"] = config.subject;
    s["scheme"] = config.scheme;
    s["M"] = config.M;
    s["n"] = config.n;
    s["p"] = answer_width(config);
    s["k"] = config.k;
    s["l"] = config.l;
    s["T"] = c.T();
    s["epsilon"] = to_string(config.epsilon);
    s["c"] = to_string(config.c);
    s["threshold"] = to_string(config.params().threshold());
    return s;
}

std::string distribution_label(const Distribution &dist, size_t width) {
    std::string out;
    for (const auto &[outcome, prob] : dist) {
        if (!out.empty()) {
            out += " ";
        }
        out += bits_to_string(outcome, width) + ":" + to_string(prob);
    }
    return out;
}

// Whether m is the positive root of the round-count quadratic, rounded down.
bool rounds_are_floored_root(const Rational &t, size_t bad, size_t m) {
    auto q = [&](size_t x) -> Rational {
        Rational r = static_cast<unsigned long>(x);
        return t * r * r - (t - 1) * r - Rational(static_cast<unsigned long>(bad));
    };
    return q(m) <= 0 && q(m + 1) > 0;
}

struct LemmaRows {
    Report &report;
    const std::string &label;

    void add(const std::string &lemma, const std::string &item, const std::string &value, const std::string &bound,
             bool ok) {
        report.rows.push_back({label, lemma, item, value, bound, yes_no(ok)});
        report.passed = report.passed && ok;
    }
};

void audit_profile(LemmaRows &out, const GoodBadProfile &prof, size_t T, const Rational &C) {
    Rational t = Rational(static_cast<unsigned long>(T)) / C;
    for (const auto &b : prof.blocks) {
        if (!b.good) {
            continue;
        }
        std::string item = "block " + std::to_string(b.block);
        out.add("good.rank", item, std::to_string(b.rank), "<" + to_string(t),
                Rational(static_cast<unsigned long>(b.rank)) < t);
        out.add("good.heavy", item, std::to_string(b.heavy_prefixes.size()), "<" + to_string(t),
                Rational(static_cast<unsigned long>(b.heavy_prefixes.size())) < t);
        out.add("good.total_weight", item, to_string(b.prefix_weight_sum), "<=" + std::to_string(T),
                b.prefix_weight_sum <= static_cast<unsigned long>(T));
    }
}

void audit_round(LemmaRows &out, const std::string &item, const SparseState &substituted, const SparseState &truth,
                 const Rational &C) {
    Rational d = distance_sq(substituted, truth);
    out.add("substituted.distance", item, to_string(d), "<=" + to_string(4 * C), d <= 4 * C);
}

Report lemmas_multi(const ExperimentConfig &config, const AdvisedComputer &subject) {
    const NonadaptiveComputer &c = subject.computer;
    ErrorParams params = config.params();
    const Rational &C = params.threshold();
    EncodingContext ctx = EncodingContext::for_computer(c, config.p, params, config.l);
    EncodingContext case2 = ctx;
    case2.l = ctx.M;
    Rational t = Rational(static_cast<unsigned long>(c.T())) / C;

    Report report;
    report.columns = {"instance", "lemma", "item", "value", "bound", "status"};
    for (const auto &inst : sweep(config)) {
        std::string label = steps_label(inst);
        LemmaRows out{report, label};
        GoodBadProfile prof = profile(c, subject.advice, inst, ctx.p, params);
        audit_profile(out, prof, c.T(), C);

        size_t bad = ctx.M - prof.good_count();
        LwssResult sel = lwss(c, inst, prof, ctx);
        size_t m = sel.schedule.rounds;
        if (c.T() > 0 && bad > 0) {
            out.add("lwss.rounds", "m", std::to_string(m), "floored root", rounds_are_floored_root(t, bad, m));
            Rational lhs = C * Rational(static_cast<unsigned long>(bad));
            Rational rhs = Rational(static_cast<unsigned long>(c.T())) * static_cast<unsigned long>((m + 1) * (m + 1));
            out.add("lwss.root", "m", std::to_string(m), "C(M-l')<=T(m+1)^2", lhs <= rhs);
        }
        std::vector<size_t> sorted = sel.selected;
        std::sort(sorted.begin(), sorted.end());
        bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sel.selected.size() == m;
        if (m > 0) {
            out.add("lwss.distinct", "W", std::to_string(sel.selected.size()), std::to_string(m), distinct);
        }
        for (size_t a = 0; a < m; a++) {
            for (size_t b = a + 1; b < m; b++) {
                const Rational &w = sel.cross_weights[a].at(sel.selected[b]);
                out.add("lwss.cross", std::to_string(sel.selected[a]) + "->" + std::to_string(sel.selected[b]),
                        to_string(w), "<" + to_string(sel.schedule.threshold), w < sel.schedule.threshold);
            }
        }
        for (size_t i = 1; i <= m; i++) {
            Rational floor_bound = Rational(static_cast<unsigned long>(bad)) -
                                   t * Rational(static_cast<unsigned long>(m * (i - 1)));
            size_t size = sel.survivor_sizes[i - 1];
            out.add("lwss.survivors", "round " + std::to_string(i), std::to_string(size),
                    ">=" + to_string(floor_bound), Rational(static_cast<unsigned long>(size)) >= floor_bound);
        }

        if (bad == 0) {
            continue;
        }
        try {
            Encoding enc = encode(case2, c, inst, prof);
            DecodeResult dec = decode(case2, c, enc.bits);
            for (const auto &round : dec.rounds) {
                SparseState truth = apply_oracle(c.prequery(round.block, prof.advice), inst);
                audit_round(out, "block " + std::to_string(round.block), round.substituted, truth, C);
            }
        } catch (const std::exception &e) {
            out.add("substituted.distance", "decode", e.what(), "", false);
        }
    }
    return report;
}

Report lemmas_single(const ExperimentConfig &config, const AdvisedComputer &subject) {
    const NonadaptiveComputer &c = subject.computer;
    ErrorParams params = config.params();
    const Rational &C = params.threshold();
    SingleBlockContext ctx = SingleBlockContext::for_computer(c, params);

    Report report;
    report.columns = {"instance", "lemma", "item", "value", "bound", "status"};
    for (const auto &inst : sweep(config)) {
        std::string label = steps_label(inst);
        LemmaRows out{report, label};
        GoodBadProfile prof = profile(c, subject.advice, inst, ctx.p(), params);
        audit_profile(out, prof, c.T(), C);
        if (prof.block(1).good) {
            continue;
        }
        try {
            Encoding enc = encode_single(ctx, c, subject.advice, inst);
            DecodeResult dec = decode_single(ctx, c, enc.bits);
            SparseState truth = apply_oracle(c.prequery(1, prof.advice), inst);
            audit_round(out, "block 1", dec.rounds.at(0).substituted, truth, C);
        } catch (const std::exception &e) {
            out.add("substituted.distance", "decode", e.what(), "", false);
        }
    }
    return report;
}

}  // namespace

std::string Report::to_csv() const {
    std::ostringstream out;
    for (size_t i = 0; i < columns.size(); i++) {
        out << (i ? "," : "") << csv_field(columns[i]);
    }
    out << "\n";
    for (const auto &row : rows) {
        for (size_t i = 0; i < row.size(); i++) {
            out << (i ? "," : "") << csv_field(row[i]);
        }
        out << "\n";
    }
    return out.str();
}

void Report::write(const std::string &path) const {
    std::ofstream csv(path);
    std::ofstream json(path + ".summary.json");
    if (!csv || !json) {
        throw ConfigError("cannot write report to '" + path + "'");
    }
    csv << to_csv();
    json << summary.dump(2) << "\n";
}

Report cmd_simulate(const ExperimentConfig &config) {
    config.validate();
    AdvisedComputer subject = load_subject(config);
    const NonadaptiveComputer &c = subject.computer;
    size_t p = answer_width(config);
    std::vector<StepInstance> instances;
    if (config.instance) {
        try {
            instances.push_back(StepInstance::parse(*config.instance));
        } catch (const std::exception &e) {
            throw ConfigError(std::string("bad instance: ") + e.what());
        }
        if (instances[0].M() != config.M || instances[0].n() != config.n) {
            throw ConfigError("instance shape does not match M and n");
        }
    } else {
        instances = sweep(config);
    }

    Report report;
    report.columns = {"instance", "block", "distribution", "error"};
    Rational worst = 0;
    for (const auto &inst : instances) {
        BitString advice = subject.advice(inst);
        for (size_t i = 1; i <= config.M; i++) {
            Distribution dist = run(c, i, advice, inst);
            Rational err = error_probability(c, subject.advice, p, inst, i);
            worst = std::max(worst, err);
            report.rows.push_back(
                {steps_label(inst), std::to_string(i), distribution_label(dist, c.output_width()), to_string(err)});
        }
    }
    report.passed = worst <= config.epsilon;
    report.summary = base_summary("simulate", config, c);
    report.summary["instances"] = instances.size();
    report.summary["max_error"] = to_string(worst);
    report.summary["epsilon_correct"] = report.passed;
    report.summary["passed"] = report.passed;
    return report;
}

Report cmd_roundtrip(const ExperimentConfig &config) {
    config.validate();
    AdvisedComputer subject = load_subject(config);
    const NonadaptiveComputer &c = subject.computer;
    ErrorParams params = config.params();
    std::vector<StepInstance> instances = sweep(config);
    size_t input_length = config.M * config.n;

    Report report;
    report.columns = {"instance", "case", "good", "lwss_rounds", "length", "predicted", "hypothesis", "round_trip",
                      "detail"};
    size_t round_trips = 0;
    bool formula_ok = true;
    bool implication_ok = true;
    bool items_ok = true;
    PigeonholeReport census;

    if (config.single()) {
        SingleBlockContext ctx = SingleBlockContext::for_computer(c, params);
        for (const auto &inst : instances) {
            Encoding enc = encode_single(ctx, c, subject.advice, inst);
            size_t predicted = enc.case_tag == 1 ? ctx.case1_length() : ctx.case2_length();
            std::string detail;
            bool ok = false;
            try {
                ok = decode_single(ctx, c, enc.bits).instance == inst;
            } catch (const std::exception &e) {
                detail = e.what();
            }
            bool hyp = Rational(static_cast<unsigned long>(c.T())) < single_block_bound(ctx.n, ctx.k, params);
            formula_ok = formula_ok && enc.size() == predicted;
            implication_ok = implication_ok && (!hyp || enc.size() < input_length);
            round_trips += ok ? 1 : 0;
            report.rows.push_back({steps_label(inst), std::to_string(enc.case_tag), enc.case_tag == 1 ? "1" : "0", "0",
                                   std::to_string(enc.size()), std::to_string(predicted), hyp ? "met" : "not met",
                                   yes_no(ok), detail});
        }
        if (!instances.empty()) {
            census = verify_pigeonhole_single(ctx, c, subject.advice);
        }
    } else {
        EncodingContext ctx = EncodingContext::for_computer(c, config.p, params, config.l);
        for (const auto &inst : instances) {
            GoodBadProfile prof = profile(c, subject.advice, inst, ctx.p, params);
            Encoding enc = encode(ctx, c, inst, prof);
            size_t good = prof.good_count();
            size_t rounds = enc.case_tag == 2 ? default_lwss_schedule(ctx, good).rounds : 0;
            size_t predicted = predicted_length(ctx, good, rounds);
            std::string detail;
            bool ok = false;
            try {
                ok = decode(ctx, c, enc.bits).instance == inst;
                Encoding parsed = parse_encoding(ctx, enc.bits);
                for (size_t i = 0; i < enc.items.size(); i++) {
                    const auto &a = enc.items[i];
                    const auto &b = parsed.items.at(i);
                    items_ok = items_ok && a.name == b.name && a.offset == b.offset && a.length == b.length;
                }
            } catch (const std::exception &e) {
                detail = e.what();
            }
            std::string hyp = "n/a";
            if (c.T() >= 1) {
                InequalityReport ineq = check_inequalities(ctx, good, c.T());
                hyp = ineq.hypothesis ? "met" : "not met";
                implication_ok = implication_ok && ineq.implication_holds() &&
                                 (!ineq.hypothesis || enc.size() < input_length);
            }
            formula_ok = formula_ok && enc.size() == predicted;
            round_trips += ok ? 1 : 0;
            report.rows.push_back({steps_label(inst), std::to_string(enc.case_tag), std::to_string(good),
                                   std::to_string(rounds), std::to_string(enc.size()), std::to_string(predicted), hyp,
                                   yes_no(ok), detail});
        }
        if (!instances.empty()) {
            census = verify_pigeonhole(ctx, c, subject.advice, config.budget);
        }
    }

    bool all_round_trip = round_trips == instances.size();
    bool pigeonhole_ok = instances.empty() || census.passed();
    report.passed = all_round_trip && formula_ok && implication_ok && items_ok && pigeonhole_ok;
    report.summary = base_summary("roundtrip", config, c);
    report.summary["instances"] = instances.size();
    report.summary["round_trips"] = round_trips;
    report.summary["case1"] = census.case1;
    report.summary["case2"] = census.case2;
    report.summary["injective"] = census.injective();
    report.summary["input_length"] = input_length;
    report.summary["min_length"] = census.min_length;
    report.summary["max_length"] = census.max_length;
    report.summary["reaches_input_length"] = census.reaches_input_length();
    report.summary["length_formula"] = formula_ok;
    report.summary["item_map"] = items_ok;
    report.summary["implication"] = implication_ok;
    report.summary["passed"] = report.passed;
    return report;
}

Report cmd_bounds(const ExperimentConfig &config) {
    config.validate();
    AdvisedComputer subject = load_subject(config);
    const NonadaptiveComputer &c = subject.computer;
    ErrorParams params = config.params();
    uint64_t N = uint64_t{1} << config.n;
    Rational T = static_cast<unsigned long>(c.T());

    Report report;
    report.columns = {"quantity", "value", "detail"};
    auto row = [&](const std::string &q, const std::string &v, const std::string &d) {
        report.rows.push_back({q, v, d});
    };
    auto check = [&](const std::string &q, const std::string &v, const std::string &d, bool ok) {
        row(q, v, d + (ok ? "; holds" : "; VIOLATED"));
        report.passed = report.passed && ok;
    };

    row("subject.T", std::to_string(c.T()), config.subject);
    row("upper.full_query", std::to_string(build_full_query(config.M, config.n).computer.T()), "N-1");
    if (config.k / config.M <= config.n) {
        row("upper.advised", std::to_string(build_advised(config.M, config.n, config.k).computer.T()),
            "N/2^floor(k/M)-1");
    }

    std::vector<StepInstance> instances = sweep(config);
    std::optional<Rational> worst;
    if (!instances.empty()) {
        std::vector<size_t> blocks;
        for (size_t i = 1; i <= config.M; i++) {
            blocks.push_back(i);
        }
        worst = max_error(c, subject.advice, answer_width(config), instances, blocks);
        row("subject.max_error", to_string(*worst), "over " + std::to_string(instances.size()) + " instances");
    }
    bool correct = worst && *worst <= config.epsilon;

    if (config.M == 1) {
        if (config.k + 1 <= config.n) {
            Rational bound = single_block_bound(config.n, config.k, params);
            if (correct) {
                check("lower.single_block", to_string(bound), "threshold*N/2^(2k+2)", T >= bound);
            } else {
                row("lower.single_block", to_string(bound), "threshold*N/2^(2k+2)");
            }
        }
        double adv = adversary_bound(N, config.k, config.epsilon);
        std::ostringstream v;
        v.precision(12);
        v << adv;
        if (correct) {
            check("lower.inner_product", v.str(), "(1-2sqrt(eps(1-eps)))(N/2^k-1), tolerance 1e-9",
                  static_cast<double>(c.T()) >= adv - 1e-9);
        } else {
            row("lower.inner_product", v.str(), "(1-2sqrt(eps(1-eps)))(N/2^k-1), tolerance 1e-9");
        }
        AdvicePartition part = partition_by_advice(subject.advice, config.n);
        if (part.b() >= 2) {
            ZetaReport z = zeta(c, part, config.epsilon);
            check("zeta", to_string(z.zeta), "class size " + std::to_string(z.b) + ", >= (b-1)-T",
                  z.structural_holds());
            if (correct) {
                check("zeta.pairs", std::to_string(z.overlaps.size()), "|I(t,t+1)| <= 2sqrt(eps(1-eps))",
                      z.pair_bounds_hold());
                check("zeta.implied", std::to_string(c.T()), "T >= (1-2sqrt(eps(1-eps)))(b-1)",
                      z.implied_bound_holds());
            }
        }
    }

    if (!config.single()) {
        std::optional<PowerBound> best;
        for (size_t l = 1; l <= config.M; l++) {
            EncodingContext ctx{config.M, config.n, config.p, config.k, c.T(), params, l};
            PowerBound b1 = c_uv(ctx, l);
            PowerBound b2 = c_uv(ctx, l - 1);
            row("c_uv.case1.l=" + std::to_string(l), b1.to_string(), "good count >= l");
            row("c_uv.case2.l=" + std::to_string(l), b2.to_string(), "good count < l");
            if (!instances.empty()) {
                std::optional<PowerBound> low;
                for (const auto &inst : instances) {
                    size_t good = profile(c, subject.advice, inst, config.p, params).good_count();
                    PowerBound b = good >= l ? b1 : b2;
                    if (!low || b < *low) {
                        low = b;
                    }
                }
                if (!best || *best < *low) {
                    best = low;
                }
            }
        }
        if (best) {
            if (correct) {
                check("lower.multi_block", best->to_string(), "max over l of min over s of c_uv", !best->exceeds(T));
            } else {
                row("lower.multi_block", best->to_string(), "max over l of min over s of c_uv");
            }
        }
    }

    report.summary = base_summary("bounds", config, c);
    report.summary["epsilon_correct"] = correct;
    report.summary["passed"] = report.passed;
    return report;
}

Report cmd_lemmas(const ExperimentConfig &config) {
    config.validate();
    AdvisedComputer subject = load_subject(config);
    Report report = config.single() ? lemmas_single(config, subject) : lemmas_multi(config, subject);
    std::map<std::string, std::pair<size_t, size_t>> tally;
    for (const auto &r : report.rows) {
        auto &[pass, fail] = tally[r[1]];
        (r[5] == "pass" ? pass : fail)++;
    }
    report.summary = base_summary("lemmas", config, subject.computer);
    report.summary["rows"] = report.rows.size();
    ordered_json counts = ordered_json::object();
    for (const auto &[lemma, pf] : tally) {
        counts[lemma] = {{"pass", pf.first}, {"fail", pf.second}};
    }
    report.summary["lemmas"] = counts;
    report.summary["passed"] = report.passed;
    return report;
}

}  // namespace qtt
