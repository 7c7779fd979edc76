// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
//
// CLI entry point: evaluates metrics, parameter sweeps, validation suites,
// and the canned figure datasets as CSV.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "saginqos/runner.hpp"

namespace {

struct CommonOptions {
    std::string config;
    std::string out;
    std::uint64_t seed = 0;
    bool seed_set = false;
    long long trials = 0;
    double tol = 0.0;
    int threads = 0;
};

saginqos::Scenario load_scenario(const CommonOptions& opt) {
    saginqos::Scenario sc = opt.config.empty() ? saginqos::Scenario::defaults()
                                               : saginqos::Scenario::from_file(opt.config);
    if (const char* env = std::getenv("SAGINQOS_SEED"); env && !opt.seed_set) {
        sc.set("mc.seed", std::string(env));
    }
    if (opt.seed_set) sc.set("mc.seed", static_cast<double>(opt.seed));
    if (opt.trials > 0) sc.set("mc.trials", static_cast<double>(opt.trials));
    if (opt.tol > 0.0) sc.set("run.tol", opt.tol);
    sc.validate();
    return sc;
}

void write_table(const saginqos::ResultTable& table, const std::string& out) {
    if (out.empty() || out == "-") {
        table.write_csv(std::cout);
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw saginqos::UsageError("cannot open output file: " + out);
    table.write_csv(f);
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--config", opt.config, "scenario config file (flat key = value lines)");
    cmd->add_option("--out", opt.out, "output CSV path (default: stdout)");
    cmd->add_option("--seed", opt.seed, "override mc.seed")->each([&](const std::string&) {
        opt.seed_set = true;
    });
    cmd->add_option("--trials", opt.trials, "override mc.trials");
    cmd->add_option("--tol", opt.tol, "override run.tol");
    cmd->add_option("--threads", opt.threads, "worker threads (default: SAGINQOS_THREADS or all)");
}

int resolve_threads(const CommonOptions& opt) {
    return opt.threads > 0 ? opt.threads : saginqos::default_thread_count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"statistical multi-QoS metrics over a satellite/UAV/ground network model"};
    app.require_subcommand(1);

    CommonOptions eval_opt, sweep_opt, val_opt, fig_opt;
    std::string metric, suite = "all", figure = "all";

    auto* eval = app.add_subcommand("eval", "evaluate one metric at the configured point");
    eval->add_option("metric", metric, "metric id")->required();
    add_common(eval, eval_opt);

    auto* sweep = app.add_subcommand("sweep", "evaluate a metric over the config's sweep axis");
    sweep->add_option("metric", metric, "metric id")->required();
    add_common(sweep, sweep_opt);

    auto* validate = app.add_subcommand("validate", "run oracle validation suites");
    validate->add_option("suite", suite, "suite id or 'all'");
    add_common(validate, val_opt);

    auto* figures = app.add_subcommand("figures", "emit canned figure datasets");
    figures->add_option("figure", figure, "fig2..fig9 or 'all'");
    add_common(figures, fig_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed() || sweep->parsed()) {
            const CommonOptions& opt = eval->parsed() ? eval_opt : sweep_opt;
            const auto sc = load_scenario(opt);
            if (sweep->parsed() && sc.get("sweep.parameter").empty()) {
                throw saginqos::UsageError("sweep requires sweep.parameter in the config");
            }
            write_table(saginqos::run_metric(sc, metric, resolve_threads(opt)), opt.out);
            return 0;
        }
        if (validate->parsed()) {
            const auto sc = load_scenario(val_opt);
            const auto& ids = saginqos::validation_ids();
            std::vector<std::string> run_ids =
                suite == "all" ? ids : std::vector<std::string>{suite};
            bool all_pass = true;
            for (const auto& id : run_ids) {
                const auto table = saginqos::run_validation(sc, id, resolve_threads(val_opt));
                all_pass = all_pass && table.meta().at("all_pass") == "1";
                if (val_opt.out.empty() || val_opt.out == "-") {
                    table.write_csv(std::cout);
                } else {
                    std::ofstream f(run_ids.size() == 1
                                        ? val_opt.out
                                        : val_opt.out + "/" + id + ".csv",
                                    std::ios::binary);
                    if (!f) throw saginqos::UsageError("cannot open output: " + val_opt.out);
                    table.write_csv(f);
                }
            }
            return all_pass ? 0 : 1;
        }
        if (figures->parsed()) {
            std::uint64_t seed = saginqos::Scenario::defaults().seed();
            if (const char* env = std::getenv("SAGINQOS_SEED")) seed = std::strtoull(env, nullptr, 10);
            if (fig_opt.seed_set) seed = fig_opt.seed;
            const auto& ids = saginqos::figure_ids();
            std::vector<std::string> run_ids =
                figure == "all" ? ids : std::vector<std::string>{figure};
            for (const auto& id : run_ids) {
                const auto result = saginqos::run_figure(id, seed, resolve_threads(fig_opt));
                if (fig_opt.out.empty() || fig_opt.out == "-") {
                    result.table.write_csv(std::cout);
                } else {
                    std::filesystem::create_directories(fig_opt.out);
                    std::ofstream f(fig_opt.out + "/" + id + ".csv", std::ios::binary);
                    if (!f) throw saginqos::UsageError("cannot open output dir: " + fig_opt.out);
                    result.table.write_csv(f);
                }
            }
            return 0;
        }
    } catch (const saginqos::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const saginqos::ScenarioError& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
