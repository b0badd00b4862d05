#pragma once
// The acceptance suites. Each criterion is a self-contained run that counts
// cases and failures; the first few failures are kept verbatim.

#include "hopforbit/cbf.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hopforbit::suite {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    size_t cases = 0;
    size_t failures = 0;
    std::vector<std::string> notes;  // first failures, plus summary facts
    double seconds = 0;
};

struct Options {
    std::uint64_t seed = 1;
    std::vector<int> only;  // empty = all nine
};

constexpr int criterion_count = 9;

CriterionResult run_criterion(int id, const Options& opt);
std::vector<CriterionResult> run_all(const Options& opt,
                                     const std::function<void(const CriterionResult&)>& on_done = {});

/// One family of the construction suite with its expected Krull dimension
/// and the sample points for the dimension-bound chain.
struct FamilyCase {
    std::string label;
    std::function<CleftData()> data;
    int krull_dim = 0;
    std::vector<std::vector<std::string>> points;  // user coordinates, parsed as scalars
};
std::vector<FamilyCase> family_cases();

Scalar parse_scalar(const FieldDescriptor& f, const std::string& text);
Point parse_point(const PolyRing& R, const std::vector<std::string>& coords);

}  // namespace hopforbit::suite
