#include "lsinf/lspath.hpp"

#include "lsinf/error.hpp"

#include <algorithm>

namespace lsinf {

LSPath::LSPath(std::vector<Weight> dirs, std::vector<Rat> breaks) {
    require(!dirs.empty(), "a path needs at least one segment");
    require(breaks.size() == dirs.size() + 1, "a path with s segments needs s+1 break points");
    require(breaks.front() == Rat(0) && breaks.back() == Rat(1), "break points must run from 0 to 1");
    for (std::size_t u = 1; u < breaks.size(); ++u)
        require(breaks[u - 1] <= breaks[u], "break points must be increasing");
    breaks_.push_back(Rat(0));
    for (std::size_t u = 0; u < dirs.size(); ++u) {
        if (breaks[u + 1] == breaks[u]) continue;
        if (!dirs_.empty() && dirs_.back() == dirs[u]) {
            breaks_.back() = breaks[u + 1];
        } else {
            dirs_.push_back(dirs[u]);
            breaks_.push_back(breaks[u + 1]);
        }
    }
}

LSPath straight_path(const Weight& nu) { return LSPath({nu}, {Rat(0), Rat(1)}); }

RationalWeight value_at(const LSPath& pi, const Rat& t) {
    require(t >= Rat(0) && t <= Rat(1), "path parameter must lie in [0, 1]");
    RationalWeight v(pi.tag(), {}, Rat(0));
    const auto& a = pi.breaks();
    for (int u = 0; u < pi.segments(); ++u) {
        if (t <= a[u]) break;
        v.add_scaled(pi.dirs()[u], std::min(t, a[u + 1]) - a[u]);
    }
    return v;
}

Weight weight_of(const LSPath& pi) { return value_at(pi, Rat(1)).to_weight(); }

std::vector<Rat> heights(const LSPath& pi, int i) {
    std::vector<Rat> H{Rat(0)};
    const auto& a = pi.breaks();
    for (int u = 0; u < pi.segments(); ++u) H.push_back(H.back() + (a[u + 1] - a[u]) * pairing_h(pi.dirs()[u], i));
    return H;
}

namespace {

// Splits at t and reflects every segment of [t0, t1] by r_i.
LSPath reflect_window(const LSPath& pi, int i, const Rat& t0, const Rat& t1) {
    std::vector<Weight> dirs;
    std::vector<Rat> br{Rat(0)};
    const auto& a = pi.breaks();
    for (int u = 0; u < pi.segments(); ++u) {
        std::vector<Rat> cuts{a[u]};
        if (t0 > a[u] && t0 < a[u + 1]) cuts.push_back(t0);
        if (t1 > a[u] && t1 < a[u + 1] && t1 != t0) cuts.push_back(t1);
        cuts.push_back(a[u + 1]);
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            const bool inside = cuts[k] >= t0 && cuts[k + 1] <= t1;
            dirs.push_back(inside ? reflect_simple(i, pi.dirs()[u]) : pi.dirs()[u]);
            br.push_back(cuts[k + 1]);
        }
    }
    return LSPath(std::move(dirs), std::move(br));
}

} // namespace

std::optional<LSPath> root_e(int i, const LSPath& pi) {
    const std::vector<Rat> H = heights(pi, i);
    const Rat m = *std::min_element(H.begin(), H.end());
    if (m > Rat(-1)) return std::nullopt;
    const auto& a = pi.breaks();
    int u1 = 0;
    while (H[u1] != m) ++u1;
    Rat t0(0);
    for (int u = u1; u >= 1; --u) {
        if (H[u - 1] >= m + 1) {
            t0 = a[u - 1] + (m + 1 - H[u - 1]) / pairing_h(pi.dirs()[u - 1], i);
            break;
        }
    }
    return reflect_window(pi, i, t0, a[u1]);
}

std::optional<LSPath> root_f(int i, const LSPath& pi) {
    const std::vector<Rat> H = heights(pi, i);
    const Rat m = *std::min_element(H.begin(), H.end());
    if (H.back() - m < Rat(1)) return std::nullopt;
    const auto& a = pi.breaks();
    int u0 = static_cast<int>(H.size()) - 1;
    while (H[u0] != m) --u0;
    Rat t1(1);
    for (int u = u0 + 1; u < static_cast<int>(H.size()); ++u) {
        if (H[u] >= m + 1) {
            t1 = a[u - 1] + (m + 1 - H[u - 1]) / pairing_h(pi.dirs()[u - 1], i);
            break;
        }
    }
    return reflect_window(pi, i, a[u0], t1);
}

std::pair<int, int> eps_phi(int i, const LSPath& pi) {
    int e = 0, f = 0;
    for (auto b = root_e(i, pi); b; b = root_e(i, *b)) ++e;
    for (auto b = root_f(i, pi); b; b = root_f(i, *b)) ++f;
    return {e, f};
}

std::pair<int, int> string_lengths(int i, const LSPath& pi) {
    const std::vector<Rat> H = heights(pi, i);
    const Rat m = *std::min_element(H.begin(), H.end());
    require(is_integer(m) && is_integer(H.back()), "height function of an LS path must take integral extremes");
    return {static_cast<int>(-m.numerator()), static_cast<int>((H.back() - m).numerator())};
}

LSPath weyl_s(int i, const LSPath& pi) {
    const Rat k = pairing_h(weight_of(pi), i);
    LSPath cur = pi;
    for (std::int64_t s = 0; s < (k >= Rat(0) ? k : -k).numerator(); ++s) {
        auto nx = k >= Rat(0) ? root_f(i, cur) : root_e(i, cur);
        require(nx.has_value(), "Weyl group action left the crystal");
        cur = *nx;
    }
    return cur;
}

bool validate_ls_path(const LSPath& pi, const OrbitOrder& order) {
    for (const Weight& d : pi.dirs())
        if (!order.contains(d)) throw Error("NotInOrbit", "path direction is not in the W_[n]-orbit");
    for (int u = 0; u + 1 < pi.segments(); ++u) {
        const Weight& hi = pi.dirs()[u];
        const Weight& lo = pi.dirs()[u + 1];
        if (!order.greater(hi, lo)) return false;
        if (!order.has_a_chain(hi, lo, pi.breaks()[u + 1])) return false;
    }
    return true;
}

bool validate_ls_path(const LSPath& pi, const Weight& lambda, int n) {
    return validate_ls_path(pi, OrbitOrder(lambda, n));
}

} // namespace lsinf
