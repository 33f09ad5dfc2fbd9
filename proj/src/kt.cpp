#include "lsinf/kt.hpp"

#include "lsinf/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace lsinf {

namespace {

void require_length(const Partition& rho, int ell, const char* name) {
    if (rho.length() > ell + 1)
        throw Error("LengthExceeded", std::string(name) + " has more than ell+1 parts");
}

std::int64_t cached_lr(const Partition& a, const Partition& b, const Partition& c) {
    static std::mutex mu;
    static std::map<std::tuple<Partition, Partition, Partition>, std::int64_t> cache;
    const auto key = a < b ? std::tuple{a, b, c} : std::tuple{b, a, c};
    {
        std::lock_guard<std::mutex> g(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const std::int64_t v = lr_coefficient(a, b, c);
    std::lock_guard<std::mutex> g(mu);
    cache.emplace(key, v);
    return v;
}

Partition meet(const Partition& a, const Partition& b) {
    std::vector<int> v;
    for (int k = 0; k < std::min(a.length(), b.length()); ++k) v.push_back(std::min(a[k], b[k]));
    return Partition(std::move(v));
}

std::int64_t exact_div(std::int64_t x, std::int64_t d, const char* what) {
    if (x % d != 0) throw Error("NonIntegral", std::string(what) + " is not divisible as the formula requires");
    return x / d;
}

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

Partition minus_column(const Partition& rho, int ell) {
    require(rho.length() == ell + 1, "removing a full column needs exactly ell+1 parts");
    std::vector<int> v = rho.parts();
    for (int& x : v) --x;
    return Partition(std::move(v));
}

Weight bar(const Weight& w) { return w.with_coord2(0, -w.c2(0)); }

} // namespace

int r_constant(TypeTag tag, int ell) {
    require(ell >= 3, "the rank ell must be at least 3");
    switch (tag) {
    case TypeTag::B: return 2 * ell + 3;
    case TypeTag::C: return 2 * ell + 4;
    case TypeTag::D: return 2 * ell + 2;
    }
    return 0;
}

std::vector<int> b_sequence(const Partition& rho, int count) {
    const Partition t = conjugate(rho);
    std::vector<int> b;
    for (int j = 1; j <= count; ++j) b.push_back(t[j - 1] - (j - 1));
    return b;
}

FlippedPartition rho_flip(TypeTag tag, const Partition& rho, const std::vector<int>& J, int ell) {
    require_length(rho, ell, "rho");
    const int R = r_constant(tag, ell);
    std::set<int> js(J.begin(), J.end());
    require(js.empty() || *js.begin() >= 1, "flip indices start at 1");
    const int maxj = js.empty() ? 0 : *js.rbegin();
    const int count = std::max(maxj, rho[0]) + ell + 2;
    std::vector<int> b = b_sequence(rho, count);
    for (int j : js) b[j - 1] = R - b[j - 1];
    std::vector<int> order(count);
    for (int k = 0; k < count; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&b](int x, int y) { return b[x] > b[y]; });
    for (int k = 0; k + 1 < count; ++k)
        if (b[order[k]] == b[order[k + 1]]) throw CollisionError("flipped b-sequence has a repeated value");
    int inversions = 0;
    for (int x = 0; x < count; ++x)
        for (int y = x + 1; y < count; ++y)
            if (order[x] > order[y]) ++inversions;
    std::vector<int> cols;
    for (int k = 0; k < count; ++k) cols.push_back(b[order[k]] + k);
    FlippedPartition out;
    out.rho = conjugate(Partition(std::move(cols)));
    out.sign = parity_sign(inversions);
    if (tag == TypeTag::C) out.sign *= parity_sign(static_cast<int>(js.size()));
    return out;
}

std::int64_t triple_lr(const Partition& rho1, const Partition& rho2, const Partition& kappa) {
    const int s = rho1.size() + rho2.size() - kappa.size();
    if (s < 0 || s % 2 != 0) return 0;
    const int w2 = s / 2;
    std::int64_t total = 0;
    const Partition m3 = meet(rho2, kappa);
    for (const Partition& o2 : partitions_inside(meet(rho1, rho2), w2))
        for (const Partition& o1 : partitions_inside(meet(rho1, kappa), rho1.size() - w2)) {
            const std::int64_t a = cached_lr(o1, o2, rho1);
            if (a == 0) continue;
            for (const Partition& o3 : partitions_inside(m3, rho2.size() - w2)) {
                const std::int64_t bc = cached_lr(o2, o3, rho2);
                if (bc == 0) continue;
                total += a * bc * cached_lr(o3, o1, kappa);
            }
        }
    return total;
}

std::int64_t xlr(TypeTag tag, const Partition& rho1, const Partition& rho2, const Partition& rho, int ell,
                 std::vector<XlrTerm>* trace) {
    require_length(rho1, ell, "rho1");
    require_length(rho2, ell, "rho2");
    require_length(rho, ell, "rho");
    const int R = r_constant(tag, ell);
    const int budget = rho1.size() + rho2.size() - rho.size();
    if (budget < 0) return 0;
    // Flip costs R - 2 b_j strictly increase, so only a finite prefix fits the size budget.
    std::vector<int> cost;
    for (int j = 1;; ++j) {
        const int c = R - 2 * b_sequence(rho, j).back();
        if (c > budget) break;
        cost.push_back(c);
    }
    std::int64_t total = 0;
    std::vector<int> J;
    auto visit = [&](auto&& self, int from, int spent) -> void {
        const FlippedPartition fp = rho_flip(tag, rho, J, ell);
        const std::int64_t v = triple_lr(rho1, rho2, fp.rho);
        if (v != 0) {
            total += fp.sign * v;
            if (trace) trace->push_back({J, fp.rho, fp.sign, v});
        }
        for (int j = from; j < static_cast<int>(cost.size()); ++j) {
            if (spent + cost[j] > budget) break;
            J.push_back(j + 1);
            self(self, j + 1, spent + cost[j]);
            J.pop_back();
        }
    };
    visit(visit, 0, 0);
    return total;
}

std::int64_t kt_multiplicity(const Weight& lambda, const Weight& mu, const Weight& nu, int ell) {
    const TypeTag tag = lambda.tag();
    require(mu.tag() == tag && nu.tag() == tag, "weights of different types");
    require(nu.tail2() == lambda.tail2() + mu.tail2(), "level of nu must be the sum of the input levels");
    for (const Weight* w : {&lambda, &mu, &nu})
        if (!in_ldom(*w, ell)) throw Error("NotInLdom", "weight is not [ell]-dominant with constant tail past ell");
    const bool lh = lambda.half_integral(), mh = mu.half_integral();
    if (lh && mh) throw UnsupportedCase("both levels are half-integral");
    if (!lh && mh) return kt_multiplicity(mu, lambda, nu, ell);

    if (tag == TypeTag::C) return xlr(TypeTag::C, phi_ell(lambda, ell), phi_ell(mu, ell), phi_ell(nu, ell), ell);

    const Weight lam0 = fundamental_weight(tag, 0);
    if (tag == TypeTag::B) {
        if (!lh) return xlr(TypeTag::B, phi_ell(lambda, ell), phi_ell(mu, ell), phi_ell(nu, ell), ell);
        const Partition r1 = phi_ell(lambda - lam0, ell), r = phi_ell(nu - lam0, ell);
        std::int64_t s = 0;
        for (const Partition& r2 : vertical_strip_removals(phi_ell(mu, ell))) s += xlr(TypeTag::C, r1, r2, r, ell);
        return s;
    }

    // Type D: the automorphism flipping the sign of coordinate 0 normalizes lambda^(0) >= 0.
    if (lambda.c2(0) < 0) return kt_multiplicity(bar(lambda), bar(mu), bar(nu), ell);
    if (lh) {
        if (mu.c2(0) != 0) throw UnsupportedCase("spin lambda with mu^(0) != 0");
        const Weight nus = nu.c2(0) > 0 ? nu : bar(nu);
        const Partition r1 = phi_ell(lambda - lam0, ell), r = phi_ell(nus - lam0, ell);
        const Partition pm = phi_ell(mu, ell);
        std::int64_t Y = 0, Z = 0;
        for (const Partition& r2 : vertical_strip_removals(pm)) {
            const std::int64_t v = xlr(TypeTag::B, r1, r2, r, ell);
            Y += parity_sign(r1.size() + r2.size() + r.size()) * v;
            Z += parity_sign(pm.size() - r2.size()) * v;
        }
        return exact_div(nu.c2(0) > 0 ? Y + Z : Y - Z, 2, "spin multiplicity");
    }
    if (lambda.c2(0) == 0 && mu.c2(0) != 0) return kt_multiplicity(mu, lambda, nu, ell);
    if (lambda.c2(0) != 0 && mu.c2(0) != 0) throw UnsupportedCase("lambda^(0) and mu^(0) both nonzero");
    const Partition pl = phi_ell(lambda, ell), pm = phi_ell(mu, ell), pn = phi_ell(nu, ell);
    const std::int64_t dlr = xlr(TypeTag::D, pl, pm, pn, ell);
    if (lambda.c2(0) == 0) return nu.c2(0) == 0 ? dlr : exact_div(dlr, 2, "DLR sum");
    if (nu.c2(0) == 0) return exact_div(dlr, 2, "DLR sum");
    const Partition a1 = minus_column(pl, ell), a = minus_column(pn, ell);
    std::int64_t X = 0;
    for (const Partition& om : vertical_strip_removals(pm))
        for (const Partition& r2 : vertical_strip_removals(om))
            X += parity_sign(om.size() - r2.size()) * xlr(TypeTag::C, a1, r2, a, ell);
    const int sgn = nu.c2(0) > 0 ? 1 : -1;
    return exact_div(dlr + 2 * sgn * X, 4, "D multiplicity");
}

std::pair<std::int64_t, std::int64_t> stability_sides(TypeTag tag, const Partition& rho1, const Partition& rho2,
                                                      const Partition& rho, int L, int n) {
    return {xlr(tag, rho1, rho2, rho, n), xlr(tag, iota_insert(L, rho1), rho2, iota_insert(L, rho), n + 1)};
}

bool stability_check(TypeTag tag, const Partition& rho1, const Partition& rho2, const Partition& rho, int L, int n) {
    require(n >= 3, "n must be at least 3");
    require(L >= 0, "L must be nonnegative");
    if (rho1.length() > n + 1 || rho2.length() > n + 1 || rho.length() > n + 1)
        throw PreconditionViolated("condition (i): every length must be at most n+1");
    if (rho1[0] != L) throw PreconditionViolated("condition (ii): the first part of rho1 must equal L");
    auto count_L = [&](const Partition& p) {
        int y = 0;
        for (int k = 0; k <= n; ++k) y += p[k] == L;
        return y;
    };
    if (count_L(rho1) <= rho2.size()) throw PreconditionViolated("condition (iii): y1 must exceed |rho2|");
    if (count_L(rho) <= rho2.size()) throw PreconditionViolated("condition (iii): y must exceed |rho2|");
    const auto [lhs, rhs] = stability_sides(tag, rho1, rho2, rho, L, n);
    return lhs == rhs;
}

} // namespace lsinf
