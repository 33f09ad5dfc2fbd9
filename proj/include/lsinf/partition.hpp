#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace lsinf {

// Weakly decreasing positive parts; the zero tail is implicit.
class Partition {
public:
    Partition() = default;
    // Accepts trailing zeros; throws PreconditionViolated on increasing or negative input.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    // k-th part (0-based); zero past the length.
    int operator[](int k) const { return k < length() ? parts_[k] : 0; }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct SkewShape {
    Partition outer;
    Partition inner;
};

Partition conjugate(const Partition& rho);
Partition iota_insert(int L, const Partition& rho);
bool contains(const Partition& outer, const Partition& inner);

// Throws PreconditionViolated when inner is not inside outer.
bool is_vertical_strip(const SkewShape& s);
bool is_horizontal_strip(const SkewShape& s);

// Number of LR tableaux of shape omega/rho and content kappa.
std::int64_t lr_coefficient(const Partition& rho, const Partition& kappa, const Partition& omega);

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
// All partitions of the given size contained in outer.
std::vector<Partition> partitions_inside(const Partition& outer, int size);
// All partitions kappa with outer/kappa a vertical strip.
std::vector<Partition> vertical_strip_removals(const Partition& outer);

} // namespace lsinf
