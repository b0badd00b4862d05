#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>

namespace hopforbit::cli {

using json = nlohmann::json;

inline constexpr const char* version = "0.1.0";

struct Command {
    std::string subcommand;  // family, core, orbit, simples, chain, verify, sweep
    int degree_bound = 0;    // 0 = the spec's own default
    int jobs = 1;
    std::uint64_t seed = 1;
    bool timing = false;
};

struct Outcome {
    int exit_code = 0;
    std::string output;  // JSON report, or CSV for sweep
    std::string error;   // one line for stderr, empty on success
};

/// Runs one subcommand on the given input text. Never throws: errors map to
/// exit codes 2 (schema/domain), 3 (mathematical), 4 (certificate failure).
Outcome run(const Command& cmd, const std::string& input);

int exit_code_for(const std::exception& e);

}  // namespace hopforbit::cli
