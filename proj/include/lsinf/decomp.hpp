#pragma once

#include "lsinf/crystal.hpp"
#include "lsinf/decomp_result.hpp"
#include "lsinf/weight.hpp"

namespace lsinf {

// Both inputs of level zero; multiplicities are Littlewood-Richardson coefficients.
DecompResult decompose_ee(const Weight& lambda, const Weight& mu);

// The element xi of W lambda placed on [q, q+p-1] in increasing order.
Weight ed_xi(const Weight& lambda, const Weight& mu);
// lambda of level zero, mu dominant: a single component B(xi + mu).
DecompResult decompose_ed(const Weight& lambda, const Weight& mu);

// Smallest rank m > p + (N+1) q for a dominant lambda and a level-zero mu.
int de_rank(const Weight& lambda, const Weight& mu);
// lambda dominant, mu of level zero; entries are [m]-dominant weights at m = de_rank + rank_bump.
DecompResult decompose_de(const Weight& lambda, const Weight& mu, int rank_bump = 0);

// Inserts one coordinate equal to the level at the first slot above it; P^[m] -> P^[m+1].
Weight theta(const Weight& nu, int m);

// Smallest admissible rank for two dominant weights.
int dd_rank(const Weight& lambda, const Weight& mu);
// Both dominant; counts lambda-dominant paths of B_[n](mu). Only the components whose
// weight is constant past n are reported, since the full decomposition may be infinite.
DecompResult decompose_dd(const Weight& lambda, const Weight& mu, int n = -1);

// Any two weights of nonnegative level, assembled from the four cases above.
DecompResult decompose_general(const Weight& lambda, const Weight& mu, int dd_n = -1);

// Replaces every representative by canonical_rep, merging equal orbits.
DecompResult canonicalized(const DecompResult& r);

} // namespace lsinf
