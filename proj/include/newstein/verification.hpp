#pragma once

#include <string>
#include <vector>

namespace newstein {

struct VerifyOptions {
    unsigned seed = 20240611;
    int workers = 0;
};

// One acceptance criterion. `expected` is the claimed value, `computed` what this
// library finds; `command` reproduces the computation with the CLI.
struct CriterionResult {
    int id = 0;
    std::string key;
    std::string title;
    std::string expected;
    std::string computed;
    std::string method;
    bool pass = false;
    bool conditional = false;
    std::string detail;
    std::string command;
    double seconds = 0;

    std::string status() const;  // "match", "mismatch" or "conditional"
};

constexpr int criterion_count = 16;

// Throws std::out_of_range for ids outside 1..16.
CriterionResult run_criterion(int id, const VerifyOptions& opt = {});
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opt = {});

}  // namespace newstein
