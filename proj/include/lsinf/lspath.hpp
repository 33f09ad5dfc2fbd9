#pragma once

#include "lsinf/weight.hpp"
#include "lsinf/weyl.hpp"

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace lsinf {

// (nu_1, ..., nu_s ; a_0, ..., a_s): direction nu_u on [a_{u-1}, a_u].
class LSPath {
public:
    LSPath() = default;
    // Merges equal neighbours and drops empty segments; throws on malformed breaks.
    LSPath(std::vector<Weight> dirs, std::vector<Rat> breaks);

    TypeTag tag() const { return dirs_.front().tag(); }
    const std::vector<Weight>& dirs() const { return dirs_; }
    const std::vector<Rat>& breaks() const { return breaks_; }
    int segments() const { return static_cast<int>(dirs_.size()); }

    auto operator<=>(const LSPath&) const = default;
    bool operator==(const LSPath&) const = default;

private:
    std::vector<Weight> dirs_;
    std::vector<Rat> breaks_;
};

LSPath straight_path(const Weight& nu);
RationalWeight value_at(const LSPath& pi, const Rat& t);
Weight weight_of(const LSPath& pi);

// <pi(a_u), h_i> for u = 0..s.
std::vector<Rat> heights(const LSPath& pi, int i);

std::optional<LSPath> root_e(int i, const LSPath& pi);
std::optional<LSPath> root_f(int i, const LSPath& pi);

// (epsilon_i, phi_i) by applying e_i and f_i until they vanish.
std::pair<int, int> eps_phi(int i, const LSPath& pi);
// The same pair read off the height function: (-m, H(1) - m).
std::pair<int, int> string_lengths(int i, const LSPath& pi);

LSPath weyl_s(int i, const LSPath& pi);

bool validate_ls_path(const LSPath& pi, const OrbitOrder& order);
bool validate_ls_path(const LSPath& pi, const Weight& lambda, int n);

} // namespace lsinf
