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


#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <sys/wait.h>
#include <unistd.h>

#include "qtt/harness/commands.h"
#include "qtt/harness/config.h"
#include "qtt/harness/subjects.h"

using namespace qtt;

namespace {

ExperimentConfig cfg(const std::string &text) {
    return parse_config(text);
}

int qttc(const std::string &args) {
    std::string cmd = std::string(QTTC_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("qtt_" + std::to_string(::getpid()) + "_" + name)).string();
}

}  // namespace

TEST(config, defaults) {
    ExperimentConfig c;
    EXPECT_EQ(c.M, 1u);
    EXPECT_EQ(c.epsilon, Rational(1, 3));
    EXPECT_EQ(c.params().threshold(), Rational(1, 256));
    EXPECT_EQ(c.subject, "full-query");
    EXPECT_EQ(c.budget, 4096u);
    EXPECT_NO_THROW(c.validate());
}

TEST(config, parse) {
    ExperimentConfig c = cfg("# sweep\nM = 2\nn=3 # width\n\np = 1\nk=2\nl = 2\nepsilon = 1/4\nc = 1/2\n"
                             "subject = advised\nbudget = 64\nscheme = multi\ninstance = M=2 n=3 steps=3,7\n");
    EXPECT_EQ(c.M, 2u);
    EXPECT_EQ(c.n, 3u);
    EXPECT_EQ(c.k, 2u);
    EXPECT_EQ(c.l, 2u);
    EXPECT_EQ(c.epsilon, Rational(1, 4));
    EXPECT_EQ(c.c, Rational(1, 2));
    EXPECT_EQ(c.subject, "advised");
    EXPECT_EQ(c.budget, 64u);
    EXPECT_EQ(c.instance, "M=2 n=3 steps=3,7");
    EXPECT_NO_THROW(c.validate());
}

TEST(config, errors) {
    EXPECT_THROW(cfg("bogus = 1"), ConfigError);
    EXPECT_THROW(cfg("M = -1"), ConfigError);
    EXPECT_THROW(cfg("M = two"), ConfigError);
    EXPECT_THROW(cfg("M 2"), ConfigError);
    EXPECT_THROW(cfg("epsilon = x"), ConfigError);
    EXPECT_THROW(cfg("M=1\nn=2\nk=3").validate(), ConfigError);
    EXPECT_THROW(cfg("M=3\nn=2").validate(), ConfigError);
    EXPECT_THROW(cfg("n=2\np=3").validate(), ConfigError);
    EXPECT_THROW(cfg("M=2\nn=2\nl=3").validate(), ConfigError);
    EXPECT_THROW(cfg("scheme=other").validate(), ConfigError);
    EXPECT_THROW(cfg("scheme=single\nM=2\nn=2").validate(), ConfigError);
    EXPECT_THROW(cfg("scheme=single\nn=2\nk=2").validate(), ConfigError);
    EXPECT_THROW(cfg("epsilon=1/2").validate(), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/qtt.cfg"), ConfigError);
}

TEST(subjects, builtins) {
    auto names = builtin_subjects();
    for (const char *n : {"full-query", "advised", "zero-query", "shortcut", "leaky"}) {
        EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
    }
    EXPECT_EQ(make_subject("advised", 1, 4, 1).computer.T(), 7u);
    EXPECT_EQ(build_shortcut(2, 2, 2).computer.T(), 3u);
    EXPECT_EQ(build_leaky(2, 2).computer.T(), 1u);
    EXPECT_EQ(build_leaky(2, 2).advice.k(), 4u);
    EXPECT_THROW(make_subject("nope", 1, 2, 0), std::invalid_argument);
    EXPECT_THROW(make_subject("full-query", 1, 2, 1), std::invalid_argument);
    EXPECT_THROW(make_subject("leaky", 1, 2, 1), std::invalid_argument);
}

TEST(subjects, exact_on_their_sweeps) {
    std::vector<AdvisedComputer> subjects{build_shortcut(2, 2, 2), build_shortcut(2, 2, 1), build_leaky(2, 2),
                                          build_shortcut(1, 4, 1)};
    for (const auto &s : subjects) {
        auto all = enumerate_instances(s.computer.M(), s.computer.n());
        std::vector<size_t> blocks;
        for (size_t i = 1; i <= s.computer.M(); i++) {
            blocks.push_back(i);
        }
        EXPECT_EQ(max_error(s.computer, s.advice, s.computer.n(), all, blocks), 0);
    }
}

TEST(commands, simulate) {
    ExperimentConfig c = cfg("M=1\nn=2\ninstance = M=1 n=2 steps=3");
    Report r = cmd_simulate(c);
    EXPECT_TRUE(r.passed);
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_NE(r.to_csv().find("10:1"), std::string::npos);
    EXPECT_EQ(r.summary["max_error"], "0");

    Report adv = cmd_simulate(cfg("M=1\nn=2\nk=2\nsubject=advised"));
    EXPECT_TRUE(adv.passed);
    EXPECT_EQ(adv.summary["T"], 0);

    EXPECT_FALSE(cmd_simulate(cfg("M=1\nn=2\nsubject=zero-query")).passed);
    EXPECT_THROW(cmd_simulate(cfg("M=1\nn=2\nk=3\nsubject=advised")), ConfigError);
}

TEST(commands, roundtrip) {
    Report r = cmd_roundtrip(cfg("M=2\nn=3"));
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.summary["round_trips"], 64);
    EXPECT_EQ(r.summary["injective"], true);
    EXPECT_GE(r.summary["max_length"].get<size_t>(), 6u);

    Report s = cmd_roundtrip(cfg("M=1\nn=4\nk=1\nsubject=advised\nscheme=single"));
    EXPECT_TRUE(s.passed);
    EXPECT_EQ(s.summary["round_trips"], 16);

    EXPECT_THROW(cmd_roundtrip(cfg("M=2\nn=3\nbudget=10")), BudgetExceeded);
}

TEST(commands, bounds) {
    Report r = cmd_bounds(cfg("M=1\nn=3\nepsilon=0\nc=1/2"));
    EXPECT_TRUE(r.passed);
    std::string csv = r.to_csv();
    EXPECT_NE(csv.find("upper.full_query,7"), std::string::npos);
    EXPECT_NE(csv.find("lower.inner_product,7"), std::string::npos);
    Report a = cmd_bounds(cfg("M=1\nn=4\nk=1\nsubject=advised"));
    EXPECT_NE(a.to_csv().find("upper.advised,7"), std::string::npos);
}

TEST(commands, lemmas) {
    Report r = cmd_lemmas(cfg("M=2\nn=3"));
    EXPECT_TRUE(r.passed);
    EXPECT_GT(r.summary["lemmas"]["good.rank"]["pass"].get<size_t>(), 0u);
    EXPECT_EQ(r.summary["lemmas"]["good.rank"]["fail"], 0);

    Report lk = cmd_lemmas(cfg("M=2\nn=2\nk=4\nsubject=leaky"));
    EXPECT_TRUE(lk.passed);
    EXPECT_EQ(lk.summary["lemmas"]["substituted.distance"]["pass"], 16);

    Report empty = cmd_lemmas(cfg("M=2\nn=3\nbudget=0"));
    EXPECT_TRUE(empty.passed);
    EXPECT_TRUE(empty.rows.empty());
}

TEST(commands, reports_are_deterministic) {
    ExperimentConfig c = cfg("M=2\nn=2\nk=2\nl=2\nsubject=shortcut");
    EXPECT_EQ(cmd_roundtrip(c).to_csv(), cmd_roundtrip(c).to_csv());
    EXPECT_EQ(cmd_lemmas(c).summary.dump(), cmd_lemmas(c).summary.dump());
}

TEST(commands, report_write) {
    Report r = cmd_simulate(cfg("M=1\nn=1"));
    std::string path = temp_path("sim.csv");
    r.write(path);
    std::ifstream csv(path), json(path + ".summary.json");
    ASSERT_TRUE(csv && json);
    auto doc = nlohmann::json::parse(json);
    EXPECT_EQ(doc["passed"], true);
    std::filesystem::remove(path);
    std::filesystem::remove(path + ".summary.json");
}

TEST(cli, exit_codes) {
    std::string cfg_path = temp_path("ok.cfg");
    std::ofstream(cfg_path) << "M = 2\nn = 2\n";
    EXPECT_EQ(qttc("roundtrip --config " + cfg_path), 0);
    EXPECT_EQ(qttc("lemmas --config " + cfg_path + " --subject leaky"), 2);
    EXPECT_EQ(qttc("simulate --config " + cfg_path + " --subject zero-query"), 1);
    EXPECT_EQ(qttc("roundtrip --config " + cfg_path + " --budget 3"), 2);
    EXPECT_EQ(qttc("roundtrip --config " + cfg_path + " --budget 0"), 0);
    EXPECT_EQ(qttc("bounds --config /nonexistent.cfg"), 2);
    EXPECT_EQ(qttc("frobnicate"), 2);
    EXPECT_EQ(qttc(""), 2);
    EXPECT_EQ(qttc("simulate --instance \"M=1 n=1 steps=2\""), 0);
    std::filesystem::remove(cfg_path);
}
