#pragma once

// Verification suites and the cross-validation driver used by the CLI.

#include "gridsub/enumeration.hpp"
#include "gridsub/flips.hpp"
#include "gridsub/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gridsub {

struct Check {
    std::string label;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    Json data = Json::object();

    bool passed() const;
    Json to_json() const;
};

struct SuiteOptions {
    int n_max = 6;
    EnumerationOptions enumeration{};
    BfsOptions bfs{};
};

/// schroeder, delannoy-conjecture, tables, oracle-equivalence, descent.
std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

struct CrossValidationRow {
    int n = 0;
    std::vector<CountReport> bimonotone;
    std::vector<CountReport> all;
    BigCount delannoy_prediction;
    bool delannoy_consistent = false;
};

struct CrossValidateOptions {
    int enumeration_max_n = 6;
    EnumerationOptions enumeration{};
};

/// Counts the 2 x n grid for 2 <= n <= n_max by every applicable method and
/// throws ValidationError naming the first pair of methods that disagree.
/// The Delannoy comparison is recorded but never enforced.
std::vector<CrossValidationRow> cross_validate(int n_max, const CrossValidateOptions& options = {});

}  // namespace gridsub
