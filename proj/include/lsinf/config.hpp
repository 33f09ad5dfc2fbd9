#pragma once

#include <cstddef>

namespace lsinf {

// Upper bound on orbit and crystal sizes; LSINF_SIZE_CAP overrides the default 10^6.
std::size_t size_cap();

} // namespace lsinf
