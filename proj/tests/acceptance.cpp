#include "lsinf/acceptance.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    int failed = 0;
    lsinf::run_acceptance(quick, [&failed](const lsinf::CriterionResult& r) {
        std::cout << lsinf::format_result(r) << std::endl;
        failed += !r.pass;
    });
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
    return failed == 0 ? 0 : 1;
}
