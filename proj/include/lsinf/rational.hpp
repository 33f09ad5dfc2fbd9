#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace lsinf {

using Rat = boost::rational<std::int64_t>;

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace lsinf
