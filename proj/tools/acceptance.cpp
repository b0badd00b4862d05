// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include "suite.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria 1-9"};
    hopforbit::suite::Options opt;
    bool verbose = false;
    app.add_option("--seed", opt.seed, "seed for the randomized criteria");
    app.add_option("--only", opt.only, "run only these criteria");
    app.add_flag("-v,--verbose", verbose, "print notes for passing criteria too");
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    hopforbit::suite::run_all(opt, [&](const hopforbit::suite::CriterionResult& r) {
        std::printf("%s criterion %d (%s): %zu cases, %zu failures, %.1fs\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.title.c_str(), r.cases, r.failures, r.seconds);
        if (!r.pass || verbose)
            for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    });
    return all ? 0 : 1;
}
