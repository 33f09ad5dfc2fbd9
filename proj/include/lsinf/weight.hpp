#pragma once

#include "lsinf/partition.hpp"
#include "lsinf/rational.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace lsinf {

enum class TypeTag { B, C, D };

char type_letter(TypeTag t);

// An exact half-integer stored as twice its value.
struct HalfInt {
    int doubled = 0;
    Rat value() const { return Rat(doubled, 2); }
    bool integral() const { return doubled % 2 == 0; }
    auto operator<=>(const HalfInt&) const = default;
};

// Eventually constant coordinate sequence lambda^(0), lambda^(1), ... in the
// epsilon basis. Coordinates are stored doubled; tail is the level.
class Weight {
public:
    Weight() = default;
    Weight(TypeTag tag, std::vector<int> head2, int tail2);
    static Weight zero(TypeTag tag) { return Weight(tag, {}, 0); }
    // Integer coordinates (not doubled).
    static Weight from_ints(TypeTag tag, const std::vector<int>& head, int tail = 0);
    // e_j
    static Weight epsilon(TypeTag tag, int j, int coeff = 1);

    TypeTag tag() const { return tag_; }
    const std::vector<int>& head2() const { return head2_; }
    int tail2() const { return tail2_; }
    // Doubled coordinate j.
    int c2(int j) const { return j < static_cast<int>(head2_.size()) ? head2_[j] : tail2_; }
    Rat coord(int j) const { return Rat(c2(j), 2); }
    // Number of stored head entries; every index >= this holds the tail.
    int head_size() const { return static_cast<int>(head2_.size()); }
    bool half_integral() const { return tail2_ % 2 != 0; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(int k) const;

    // Doubled coordinates 0..n as a plain vector.
    std::vector<int> window2(int n) const;
    Weight with_coord2(int j, int v2) const;

    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;

private:
    void normalize();
    TypeTag tag_ = TypeTag::C;
    std::vector<int> head2_;
    int tail2_ = 0;
};

// Coordinates in Q; used for values pi(t) of a path.
class RationalWeight {
public:
    RationalWeight() = default;
    RationalWeight(TypeTag tag, std::vector<Rat> head, Rat tail);
    explicit RationalWeight(const Weight& w);

    TypeTag tag() const { return tag_; }
    const std::vector<Rat>& head() const { return head_; }
    const Rat& tail() const { return tail_; }
    Rat coord(int j) const { return j < static_cast<int>(head_.size()) ? head_[j] : tail_; }

    RationalWeight& add_scaled(const Weight& w, const Rat& s);
    // Converts back when every coordinate is a half-integer.
    bool is_half_integral() const;
    Weight to_weight() const;

    bool operator==(const RationalWeight&) const = default;

private:
    void normalize();
    TypeTag tag_ = TypeTag::C;
    std::vector<Rat> head_;
    Rat tail_{0};
};

Weight fundamental_weight(TypeTag tag, int i);
Weight simple_root(TypeTag tag, int i);
Rat level(const Weight& w);
// Indices with nonzero coordinate; throws InfiniteSupport when the level is not zero.
std::vector<int> support(const Weight& w);

int pairing_h2(const Weight& w, int i); // 2 * <w, h_i>
Rat pairing_h(const Weight& w, int i);
Rat pairing_h(const RationalWeight& w, int i);

// |x| for type D, x for types B and C; on doubled values.
int floor_abs2(TypeTag tag, int x2);

Partition dagger(const Weight& w);
Weight from_partition(TypeTag tag, const Partition& rho);
Partition to_partition(const Weight& w);

bool is_dominant(const Weight& w, int n);
// The [n]-dominant element of the W_[n]-orbit and the reflections applied, in order.
std::pair<Weight, std::vector<int>> j_dominant_rep(const Weight& w, int n);

struct Split {
    Weight nu;     // canonical element of the orbit, nu = zero_part + plus_part
    Weight zero_part;
    Weight plus_part;
    int q = 0;     // number of sub-level head entries
    int p = 0;     // number of entries above the level
};
Split split_plus_zero(const Weight& w);
// Fixed representative of the infinite-rank W-orbit of w (level >= 0).
Weight canonical_rep(const Weight& w);

bool in_ldom(const Weight& w, int ell);
// (w^(ell), ..., w^(1), floor_abs(w^(0))) doubled.
std::vector<int> phi_ell2(const Weight& w, int ell);
// Integral-level version; throws NotInLdom or PreconditionViolated.
Partition phi_ell(const Weight& w, int ell);

long long compute_N(const Weight& w);

} // namespace lsinf
