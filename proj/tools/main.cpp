#include "cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    using hopforbit::cli::Command;
    CLI::App app{"hopforbit: orbits, cores and simple modules of commutative-by-finite Hopf algebras"};
    app.set_version_flag("--version", std::string(hopforbit::cli::version));
    Command cmd;
    std::string in_path, out_path = "-";
    app.add_option("subcommand", cmd.subcommand, "family | core | orbit | simples | chain | verify | sweep")
        ->required()
        ->check(CLI::IsMember({"family", "core", "orbit", "simples", "chain", "verify", "sweep"}));
    app.add_option("--in", in_path, "input JSON (optional for verify)");
    app.add_option("--out", out_path, "output file, '-' for stdout");
    app.add_option("--degree-bound", cmd.degree_bound, "override the invariant-degree escalation bound")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--jobs", cmd.jobs, "worker threads for per-point fan-out")->check(CLI::PositiveNumber);
    app.add_option("--seed", cmd.seed, "seed for sampled points and randomized suites");
    app.add_flag("--timing", cmd.timing, "add wall-clock timing to the report");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::string input;
    if (!in_path.empty()) {
        std::ifstream f(in_path);
        if (!f) {
            std::cerr << "hopforbit: cannot read " << in_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << f.rdbuf();
        input = ss.str();
    } else if (cmd.subcommand != "verify") {
        std::cerr << "hopforbit: --in is required for " << cmd.subcommand << "\n";
        return 2;
    }

    auto outcome = hopforbit::cli::run(cmd, input);
    if (out_path == "-") {
        std::cout << outcome.output;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "hopforbit: cannot write " << out_path << "\n";
            return 2;
        }
        f << outcome.output;
    }
    if (!outcome.error.empty()) std::cerr << "hopforbit: " << outcome.error << "\n";
    return outcome.exit_code;
}
