#pragma once

#include "lsinf/weight.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace lsinf {

struct DecompResult {
    std::map<Weight, std::int64_t> entries; // representative -> multiplicity >= 1
    std::string source;                     // producing computation
    int rank = -1;                          // finite rank used, -1 when none

    void add(const Weight& w, std::int64_t k) {
        if (k == 0) return;
        entries[w] += k;
        if (entries[w] == 0) entries.erase(w);
    }
    std::int64_t at(const Weight& w) const {
        auto it = entries.find(w);
        return it == entries.end() ? 0 : it->second;
    }
    std::int64_t total() const {
        std::int64_t s = 0;
        for (const auto& [w, k] : entries) s += k;
        return s;
    }
};

} // namespace lsinf
