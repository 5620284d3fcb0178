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

#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "qtt/harness/commands.h"
#include "qtt/ordered_search.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string config_path;
    std::string out_path;
    std::string subject;
    std::optional<uint64_t> budget;
    std::string instance;
};

void add_common(CLI::App *cmd, Options &opt) {
    cmd->add_option("--config", opt.config_path, "key = value config file");
    cmd->add_option("--out", opt.out_path, "write CSV rows here and the summary to PATH.summary.json");
    cmd->add_option("--subject", opt.subject, "built-in subject name or computer document path");
    cmd->add_option("--budget", opt.budget, "maximum number of instances to sweep (0: empty sweep)");
}

qtt::StepInstance parse_instance(const std::string &literal) {
    try {
        return qtt::StepInstance::parse(literal);
    } catch (const std::exception &e) {
        throw qtt::ConfigError(std::string("bad --instance: ") + e.what());
    }
}

int run(const std::string &command, const Options &opt) {
    qtt::ExperimentConfig config = opt.config_path.empty() ? qtt::ExperimentConfig{} : qtt::load_config(opt.config_path);
    if (!opt.subject.empty()) {
        config.subject = opt.subject;
    }
    if (opt.budget) {
        config.budget = *opt.budget;
    }
    if (!opt.instance.empty()) {
        qtt::StepInstance inst = parse_instance(opt.instance);
        config.M = inst.M();
        config.n = inst.n();
        config.instance = opt.instance;
    }

    qtt::Report report;
    if (command == "simulate") {
        report = qtt::cmd_simulate(config);
    } else if (command == "roundtrip") {
        report = qtt::cmd_roundtrip(config);
    } else if (command == "bounds") {
        report = qtt::cmd_bounds(config);
    } else {
        report = qtt::cmd_lemmas(config);
    }

    if (opt.out_path.empty()) {
        std::cout << report.to_csv() << report.summary.dump(2) << "\n";
    } else {
        report.write(opt.out_path);
        std::cout << report.summary.dump(2) << "\n";
    }
    return report.passed ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact simulator and compression checks for nonadaptive ordered search"};
    app.require_subcommand(1);
    Options opt;
    const std::pair<const char *, const char *> commands[] = {
        {"simulate", "output distributions and error of the subject"},
        {"roundtrip", "encode, decode and pigeonhole census over the sweep"},
        {"bounds", "upper bounds next to the lower bounds for the parameters"},
        {"lemmas", "exhaustive audit of the encoding lemmas"},
    };
    for (const auto &[name, help] : commands) {
        CLI::App *cmd = app.add_subcommand(name, help);
        add_common(cmd, opt);
        if (std::string(name) == "simulate") {
            cmd->add_option("--instance", opt.instance, "a single instance, e.g. \"M=1 n=2 steps=3\"; sets M and n");
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opt);
    } catch (const qtt::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qtt::BudgetExceeded &e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
