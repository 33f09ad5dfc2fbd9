#include "lsinf/config.hpp"

#include <cstdlib>
#include <string>

namespace lsinf {

std::size_t size_cap() {
    if (const char* s = std::getenv("LSINF_SIZE_CAP")) {
        try {
            const long long v = std::stoll(s);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (...) {
        }
    }
    return 1000000;
}

} // namespace lsinf
