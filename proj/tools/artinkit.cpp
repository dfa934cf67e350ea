#include <chrono>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artin/report.hpp"

using namespace artin;

int main(int argc, char** argv) {
    CLI::App app{"finite verification toolkit: groups, characters, splitting data, L-factors"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string command;

    CLI::App* group = app.add_subcommand("group", "group-structure checks");
    group->require_subcommand(1);
    CLI::App* group_verify =
        group->add_subcommand("verify", "orders, low-index subgroups, fixed points");
    group_verify->callback([&] { command = "group verify"; });

    CLI::App* rep = app.add_subcommand("rep", "representation-theory checks");
    rep->require_subcommand(1);
    CLI::App* rep_verify =
        rep->add_subcommand("verify", "character table, exterior squares, scans");
    rep_verify->callback([&] { command = "rep verify"; });

    CLI::App* field = app.add_subcommand("field", "number-field splitting data");
    field->require_subcommand(1);
    CLI::App* frobenius =
        field->add_subcommand("frobenius", "per-prime candidate classes and histogram");
    frobenius->callback([&] { command = "field frobenius"; });

    CLI::App* lfun = app.add_subcommand("lfunction", "local factors and partial products");
    lfun->require_subcommand(1);
    CLI::App* lfun_check = lfun->add_subcommand("check", "exact factor identities");
    lfun_check->callback([&] { command = "lfunction check"; });
    CLI::App* lfun_eval = lfun->add_subcommand("eval", "partial Euler product at s");
    lfun_eval->callback([&] { command = "lfunction eval"; });

    for (CLI::App* sc : {group_verify, rep_verify, frobenius, lfun_check, lfun_eval}) {
        sc->add_option("--json", cfg.json_path, "also write the report to this file");
        sc->add_option("--seed", cfg.seed, "echoed into the report");
    }
    for (CLI::App* sc : {frobenius, lfun_eval})
        sc->add_option("--bound", cfg.bound, "prime bound (default 1000)");
    frobenius->add_option("--subfields", cfg.subfields,
                          "comma-separated fields to observe: E,EA,EB,EC,K,M (default E,EA)")
        ->delimiter(',');
    lfun_eval->add_option("--s", cfg.s_re, "real part of s (default 2)");
    lfun_eval->add_option("--s-im", cfg.s_im, "imaginary part of s (default 0)");
    lfun_eval->add_option("--precision", cfg.precision, "working precision in bits (default 64)");
    lfun_eval->add_option("--character", cfg.character,
                          "trivial | zeta_E | natural | row:<k> (default natural)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        validate_config(cfg, command);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    if (cfg.cache_path.empty()) {
        std::filesystem::path dir =
            cfg.json_path.empty() ? std::filesystem::path{} : std::filesystem::path(cfg.json_path).parent_path();
        if (dir.empty()) dir = ".";
        cfg.cache_path = (dir / "tower_cache.json").string();
    }

    auto start = std::chrono::steady_clock::now();
    try {
        CommandResult res;
        if (command == "group verify") {
            res = group_checks();
        } else if (command == "rep verify") {
            res = rep_checks();
        } else if (command == "field frobenius") {
            std::vector<NumberField> fields;
            try {
                fields = load_or_build_tower(cfg.cache_path);
            } catch (const std::exception& e) {
                std::cerr << "tower construction failed: " << e.what() << "\n";
                return 2;
            }
            res = frobenius_checks(cfg, fields, &std::cout);
        } else if (command == "lfunction check") {
            res = lfunction_checks();
        } else {
            std::vector<NumberField> fields;
            const std::vector<NumberField>* fp = nullptr;
            if (eval_needs_tower(cfg.character)) {
                try {
                    fields = load_or_build_tower(cfg.cache_path);
                } catch (const std::exception& e) {
                    std::cerr << "tower construction failed: " << e.what() << "\n";
                    return 2;
                }
                fp = &fields;
            }
            res = lfunction_eval(cfg, fp);
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        return emit(assemble(command, cfg, std::move(res), ms), cfg.json_path, std::cout);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
}
