#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lsinf {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// One line per criterion: "criterion <id> PASS|FAIL <title> (<seconds> s): <detail>".
std::string format_result(const CriterionResult& r);

// Runs criteria 1-10 in order; quick shrinks the grids and random samples.
// Each result is passed to report as soon as it is known.
std::vector<CriterionResult> run_acceptance(bool quick, const std::function<void(const CriterionResult&)>& report = {});

} // namespace lsinf
