#pragma once

#include "lsinf/partition.hpp"
#include "lsinf/weight.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lsinf {

// R_ell: 2ell+3 (B), 2ell+4 (C), 2ell+2 (D).
int r_constant(TypeTag tag, int ell);

// b_1, ..., b_count of the conjugate of rho: b_j = t(rho)^(j-1) - (j-1).
std::vector<int> b_sequence(const Partition& rho, int count);

struct FlippedPartition {
    Partition rho;
    int sign = 1;
};

// rho^{J,ell} and its sign; J is a set of indices >= 1.
FlippedPartition rho_flip(TypeTag tag, const Partition& rho, const std::vector<int>& J, int ell);

// Sum over omega_1, omega_2, omega_3 of LR^{rho1}_{w1,w2} LR^{rho2}_{w2,w3} LR^{kappa}_{w3,w1}.
std::int64_t triple_lr(const Partition& rho1, const Partition& rho2, const Partition& kappa);

struct XlrTerm {
    std::vector<int> J;
    Partition flipped;
    int sign = 1;
    std::int64_t lr = 0;
};

// Signed triple-LR sum with the type constant of tag; trace receives every nonzero term.
std::int64_t xlr(TypeTag tag, const Partition& rho1, const Partition& rho2, const Partition& rho, int ell,
                 std::vector<XlrTerm>* trace = nullptr);

// Multiplicity of V(nu) in V(lambda) x V(mu) for the rank-ell Levi subalgebra.
std::int64_t kt_multiplicity(const Weight& lambda, const Weight& mu, const Weight& nu, int ell);

// Both sides of the stability identity, without checking its hypotheses.
std::pair<std::int64_t, std::int64_t> stability_sides(TypeTag tag, const Partition& rho1, const Partition& rho2,
                                                      const Partition& rho, int L, int n);
// Checks the hypotheses (PreconditionViolated names the failing clause) and compares the sides.
bool stability_check(TypeTag tag, const Partition& rho1, const Partition& rho2, const Partition& rho, int L, int n);

} // namespace lsinf
