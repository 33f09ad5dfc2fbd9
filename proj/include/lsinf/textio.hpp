#pragma once

#include "lsinf/crystal.hpp"
#include "lsinf/decomp_result.hpp"
#include "lsinf/lspath.hpp"
#include "lsinf/partition.hpp"
#include "lsinf/weight.hpp"

#include <cstdint>
#include <string>

namespace lsinf {

// Partition: "3,2,1"; the empty string is the empty partition.
std::string format_partition(const Partition& rho);
Partition parse_partition(const std::string& s);

// Weight: "c0,...,ck;tail" with entries n or odd/2.
std::string format_half2(int x2);
std::string format_weight(const Weight& w);
Weight parse_weight(TypeTag tag, const std::string& s);
TypeTag parse_type(const std::string& s);

Rat parse_rat(const std::string& s);

// Path: "(w1|...|ws ; a0,...,as)".
std::string format_path(const LSPath& pi);
LSPath parse_path(TypeTag tag, const std::string& s);
std::string format_tensor(const TensorElt& b);

// "(2):1 (1,1):1" style for level zero, "weight:k" otherwise.
std::string format_decomp(const DecompResult& r);
std::string decomp_json(const DecompResult& r);

std::uint64_t content_hash(const std::string& s);
std::string crystal_dot(const CrystalGraph<LSPath>& g);
std::string crystal_json(const CrystalGraph<LSPath>& g);

} // namespace lsinf
