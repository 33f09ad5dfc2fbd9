#include "lsinf/weight.hpp"

#include "lsinf/error.hpp"
#include "lsinf/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace lsinf {

char type_letter(TypeTag t) {
    switch (t) {
    case TypeTag::B: return 'B';
    case TypeTag::C: return 'C';
    case TypeTag::D: return 'D';
    }
    return '?';
}

Weight::Weight(TypeTag tag, std::vector<int> head2, int tail2)
    : tag_(tag), head2_(std::move(head2)), tail2_(tail2) {
    const int parity = std::abs(tail2_) % 2;
    for (int x : head2_)
        require(std::abs(x) % 2 == parity, "weight coordinates must share one parity class");
    normalize();
}

Weight Weight::from_ints(TypeTag tag, const std::vector<int>& head, int tail) {
    std::vector<int> h2(head.size());
    std::transform(head.begin(), head.end(), h2.begin(), [](int x) { return 2 * x; });
    return Weight(tag, std::move(h2), 2 * tail);
}

Weight Weight::epsilon(TypeTag tag, int j, int coeff) {
    std::vector<int> h2(j + 1, 0);
    h2[j] = 2 * coeff;
    return Weight(tag, std::move(h2), 0);
}

void Weight::normalize() {
    while (!head2_.empty() && head2_.back() == tail2_) head2_.pop_back();
}

Weight Weight::operator+(const Weight& o) const {
    const int n = std::max(head_size(), o.head_size());
    std::vector<int> h(n);
    for (int j = 0; j < n; ++j) h[j] = c2(j) + o.c2(j);
    return Weight(tag_, std::move(h), tail2_ + o.tail2_);
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::scaled(int k) const {
    std::vector<int> h(head2_);
    for (int& x : h) x *= k;
    return Weight(tag_, std::move(h), tail2_ * k);
}

std::vector<int> Weight::window2(int n) const {
    std::vector<int> v(n + 1);
    for (int j = 0; j <= n; ++j) v[j] = c2(j);
    return v;
}

Weight Weight::with_coord2(int j, int v2) const {
    std::vector<int> h(std::max(head_size(), j + 1));
    for (int k = 0; k < static_cast<int>(h.size()); ++k) h[k] = c2(k);
    h[j] = v2;
    return Weight(tag_, std::move(h), tail2_);
}

RationalWeight::RationalWeight(TypeTag tag, std::vector<Rat> head, Rat tail)
    : tag_(tag), head_(std::move(head)), tail_(tail) {
    normalize();
}

RationalWeight::RationalWeight(const Weight& w) : tag_(w.tag()), tail_(w.coord(w.head_size())) {
    head_.reserve(w.head_size());
    for (int j = 0; j < w.head_size(); ++j) head_.push_back(w.coord(j));
}

void RationalWeight::normalize() {
    while (!head_.empty() && head_.back() == tail_) head_.pop_back();
}

RationalWeight& RationalWeight::add_scaled(const Weight& w, const Rat& s) {
    const int n = std::max(static_cast<int>(head_.size()), w.head_size());
    std::vector<Rat> h(n);
    for (int j = 0; j < n; ++j) h[j] = coord(j) + s * w.coord(j);
    head_ = std::move(h);
    tail_ += s * w.coord(w.head_size());
    normalize();
    return *this;
}

bool RationalWeight::is_half_integral() const {
    auto ok = [](const Rat& r) { return (r * 2).denominator() == 1; };
    return ok(tail_) && std::all_of(head_.begin(), head_.end(), ok);
}

Weight RationalWeight::to_weight() const {
    if (!is_half_integral()) throw Error("NonIntegralWeight", "path value is not a half-integral weight");
    std::vector<int> h2;
    h2.reserve(head_.size());
    for (const Rat& r : head_) h2.push_back(static_cast<int>((r * 2).numerator()));
    const Rat t2 = tail_ * 2;
    try {
        return Weight(tag_, std::move(h2), static_cast<int>(t2.numerator()));
    } catch (const PreconditionViolated&) {
        throw Error("NonIntegralWeight", "path value mixes integral and half-integral coordinates");
    }
}

Weight fundamental_weight(TypeTag tag, int i) {
    require(i >= 0, "fundamental weight index must be nonnegative");
    if (i == 0 && tag != TypeTag::C) return Weight(tag, {}, 1);
    if (i == 1 && tag == TypeTag::D) return Weight(tag, {-1}, 1);
    return Weight(tag, std::vector<int>(i, 0), 2);
}

Weight simple_root(TypeTag tag, int i) {
    require(i >= 0, "simple root index must be nonnegative");
    if (i == 0) {
        switch (tag) {
        case TypeTag::B: return Weight(tag, {2}, 0);
        case TypeTag::C: return Weight(tag, {4}, 0);
        case TypeTag::D: return Weight(tag, {2, 2}, 0);
        }
    }
    std::vector<int> h(i + 1, 0);
    h[i - 1] = -2;
    h[i] = 2;
    return Weight(tag, std::move(h), 0);
}

Rat level(const Weight& w) { return Rat(w.tail2(), 2); }

std::vector<int> support(const Weight& w) {
    if (w.tail2() != 0) throw Error("InfiniteSupport", "support of a weight of nonzero level is infinite");
    std::vector<int> s;
    for (int j = 0; j < w.head_size(); ++j)
        if (w.c2(j) != 0) s.push_back(j);
    return s;
}

int pairing_h2(const Weight& w, int i) {
    if (i >= 1) return w.c2(i) - w.c2(i - 1);
    switch (w.tag()) {
    case TypeTag::B: return 2 * w.c2(0);
    case TypeTag::C: return w.c2(0);
    case TypeTag::D: return w.c2(0) + w.c2(1);
    }
    return 0;
}

Rat pairing_h(const Weight& w, int i) { return Rat(pairing_h2(w, i), 2); }

Rat pairing_h(const RationalWeight& w, int i) {
    if (i >= 1) return w.coord(i) - w.coord(i - 1);
    switch (w.tag()) {
    case TypeTag::B: return w.coord(0) * 2;
    case TypeTag::C: return w.coord(0);
    case TypeTag::D: return w.coord(0) + w.coord(1);
    }
    return Rat(0);
}

int floor_abs2(TypeTag tag, int x2) { return tag == TypeTag::D ? std::abs(x2) : x2; }

Partition dagger(const Weight& w) {
    if (w.tail2() != 0) throw Error("NonzeroLevel", "dagger needs a level-zero weight");
    std::vector<int> v;
    for (int x : w.head2()) v.push_back(std::abs(x) / 2);
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
}

Weight from_partition(TypeTag tag, const Partition& rho) { return Weight::from_ints(tag, rho.parts(), 0); }

Partition to_partition(const Weight& w) {
    if (w.tail2() != 0) throw Error("NotInEW", "weight has nonzero level");
    std::vector<int> v;
    for (int j = 0; j < w.head_size(); ++j) {
        if (w.c2(j) < 0 || (j > 0 && w.c2(j) > w.c2(j - 1)))
            throw Error("NotInEW", "coordinates are not a weakly decreasing nonnegative sequence");
        v.push_back(w.c2(j) / 2);
    }
    return Partition(std::move(v));
}

bool is_dominant(const Weight& w, int n) {
    for (int i = 0; i <= n; ++i)
        if (pairing_h2(w, i) < 0) return false;
    return true;
}

std::pair<Weight, std::vector<int>> j_dominant_rep(const Weight& w, int n) {
    require(n >= 0, "rank must be nonnegative");
    Weight cur = w;
    std::vector<int> word;
    for (;;) {
        int i = 0;
        while (i <= n && pairing_h2(cur, i) >= 0) ++i;
        if (i > n) break;
        cur = reflect_simple(i, cur);
        word.push_back(i);
    }
    return {cur, word};
}

Split split_plus_zero(const Weight& w) {
    const TypeTag tag = w.tag();
    const int L2 = w.tail2();
    if (L2 < 0) throw Error("NegativeLevel", "split needs a weight of nonnegative level");
    std::vector<int> sub, above;
    int negatives = 0;
    for (int x : w.head2()) {
        if (x < 0) ++negatives;
        const int a = std::abs(x);
        if (a < L2) sub.push_back(a);
        else if (a > L2) above.push_back(a);
    }
    std::sort(sub.begin(), sub.end());
    std::sort(above.begin(), above.end());
    // D only flips signs in pairs; an odd count leaves one sign on the smallest slot.
    if (tag == TypeTag::D && L2 > 0 && negatives % 2 == 1 && (sub.empty() || sub[0] != 0)) {
        if (sub.empty()) sub.push_back(-L2);
        else sub[0] = -sub[0];
    }
    Split s;
    s.q = static_cast<int>(sub.size());
    s.p = static_cast<int>(above.size());
    std::vector<int> nu(sub);
    nu.insert(nu.end(), above.begin(), above.end());
    s.nu = Weight(tag, nu, L2);
    s.plus_part = Weight(tag, sub, L2);
    std::vector<int> z(s.q, 0);
    for (int a : above) z.push_back(a - L2);
    s.zero_part = Weight(tag, std::move(z), 0);
    return s;
}

Weight canonical_rep(const Weight& w) {
    if (w.tail2() < 0) throw Error("NegativeLevel", "canonical representative needs level >= 0");
    if (w.tail2() == 0) return from_partition(w.tag(), dagger(w));
    return split_plus_zero(w).nu;
}

bool in_ldom(const Weight& w, int ell) { return w.head_size() <= ell + 1 && is_dominant(w, ell); }

std::vector<int> phi_ell2(const Weight& w, int ell) {
    if (!in_ldom(w, ell)) throw Error("NotInLdom", "weight is not [ell]-dominant with constant tail past ell");
    std::vector<int> v;
    for (int j = ell; j >= 1; --j) v.push_back(w.c2(j));
    v.push_back(floor_abs2(w.tag(), w.c2(0)));
    return v;
}

Partition phi_ell(const Weight& w, int ell) {
    require(!w.half_integral(), "phi_ell as a partition needs an integral level");
    std::vector<int> v = phi_ell2(w, ell);
    for (int& x : v) x /= 2;
    return Partition(std::move(v));
}

long long compute_N(const Weight& w) {
    std::vector<int> x;
    for (int j = 0; j <= w.head_size() + 1; ++j) x.push_back(w.c2(j));
    long long N = 1;
    auto take = [&N](int v2) {
        // v2 is twice a pairing value; pairings of weights are integers.
        if (v2 != 0) N = std::lcm(N, static_cast<long long>(std::abs(v2) / 2));
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            take(x[i] - x[j]);
            take(x[i] + x[j]);
        }
        if (w.tag() == TypeTag::B) take(2 * x[i]);
        if (w.tag() == TypeTag::C) take(x[i]);
    }
    return N;
}

} // namespace lsinf
