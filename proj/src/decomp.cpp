#include "lsinf/decomp.hpp"

#include "lsinf/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace lsinf {

namespace {

void require_level_zero(const Weight& w, const char* name) {
    if (w.tail2() != 0) throw Error("NonzeroLevel", std::string(name) + " must have level zero");
}

void require_dominant(const Weight& w, const char* name) {
    require(w.tail2() >= 0 && is_dominant(w, w.head_size() + 1), std::string(name) + " must be dominant");
}

// Least j with w^(j) equal to the level.
int first_at_level(const Weight& w) {
    int j = 0;
    while (w.c2(j) != w.tail2()) ++j;
    return j;
}

} // namespace

DecompResult decompose_ee(const Weight& lambda, const Weight& mu) {
    require_level_zero(lambda, "lambda");
    require_level_zero(mu, "mu");
    const Partition a = dagger(lambda), b = dagger(mu);
    DecompResult r;
    r.source = "ee";
    for (const Partition& nu : partitions_of(a.size() + b.size()))
        r.add(from_partition(lambda.tag(), nu), lr_coefficient(a, b, nu));
    return r;
}

Weight ed_xi(const Weight& lambda, const Weight& mu) {
    require_level_zero(lambda, "lambda");
    require_dominant(mu, "mu");
    require(lambda.tag() == mu.tag(), "weights of different types");
    std::vector<int> vals;
    for (int x : lambda.head2())
        if (x != 0) vals.push_back(std::abs(x));
    std::sort(vals.begin(), vals.end());
    std::vector<int> head(first_at_level(mu), 0);
    head.insert(head.end(), vals.begin(), vals.end());
    return Weight(lambda.tag(), std::move(head), 0);
}

DecompResult decompose_ed(const Weight& lambda, const Weight& mu) {
    DecompResult r;
    r.source = "ed";
    r.add(canonical_rep(ed_xi(lambda, mu) + mu), 1);
    return r;
}

int de_rank(const Weight& lambda, const Weight& mu) {
    require_dominant(lambda, "lambda");
    require_level_zero(mu, "mu");
    require(lambda.tag() == mu.tag(), "weights of different types");
    const int p = first_at_level(lambda);
    const long long N = compute_N(mu);
    int abs_sum = 0;
    for (int x : mu.head2()) abs_sum += std::abs(x) / 2;
    const int q = std::max({1, mu.head_size(), abs_sum});
    return p + static_cast<int>(N + 1) * q + 1;
}

DecompResult decompose_de(const Weight& lambda, const Weight& mu, int rank_bump) {
    require(rank_bump >= 0, "rank bump must be nonnegative");
    const int m = de_rank(lambda, mu) + rank_bump;
    DecompResult r = decompose_brute(lambda, mu, m);
    r.source = "de";
    return r;
}

Weight theta(const Weight& nu, int m) {
    require(nu.head_size() <= m + 1, "weight must be constant past m");
    std::vector<int> head = nu.window2(m);
    int u1 = 0;
    while (u1 <= m && head[u1] <= nu.tail2()) ++u1;
    head.insert(head.begin() + u1, nu.tail2());
    return Weight(nu.tag(), std::move(head), nu.tail2());
}

int dd_rank(const Weight& lambda, const Weight& mu) {
    return std::max({3, lambda.head_size(), mu.head_size()});
}

DecompResult decompose_dd(const Weight& lambda, const Weight& mu, int n) {
    require_dominant(lambda, "lambda");
    require_dominant(mu, "mu");
    require(lambda.tag() == mu.tag(), "weights of different types");
    if (n < 0) n = dd_rank(lambda, mu);
    require(n >= dd_rank(lambda, mu), "rank too small for the inputs");
    DecompResult r;
    r.source = "dd";
    r.rank = n;
    for (const LSPath& eta : generate_crystal(mu, n).elements) {
        bool ok = true;
        for (const Rat& t : eta.breaks()) {
            RationalWeight v = value_at(eta, t);
            v.add_scaled(lambda, Rat(1));
            for (int i = 0; i <= n && ok; ++i) ok = pairing_h(v, i) >= Rat(0);
            if (!ok) break;
        }
        if (!ok) continue;
        const Weight nu = lambda + weight_of(eta);
        if (nu.head_size() <= n) r.add(nu, 1);
    }
    return r;
}

DecompResult decompose_general(const Weight& lambda, const Weight& mu, int dd_n) {
    require(lambda.tag() == mu.tag(), "weights of different types");
    require(lambda.tail2() >= 0 && mu.tail2() >= 0, "levels must be nonnegative");
    const Split sl = split_plus_zero(lambda), sm = split_plus_zero(mu);
    DecompResult r;
    r.source = "general";
    const DecompResult de = decompose_de(sl.plus_part, sm.zero_part);
    for (const auto& [xi, a] : de.entries) {
        const Split sx = split_plus_zero(xi);
        const DecompResult ee = decompose_ee(sl.zero_part, sx.zero_part);
        const DecompResult dd = decompose_dd(sx.plus_part, sm.plus_part, dd_n);
        r.rank = dd.rank;
        for (const auto& [zeta, b] : ee.entries)
            for (const auto& [chi, c] : dd.entries)
                r.add(decompose_ed(zeta, chi).entries.begin()->first, a * b * c);
    }
    return r;
}

DecompResult canonicalized(const DecompResult& r) {
    DecompResult out;
    out.source = r.source;
    out.rank = r.rank;
    for (const auto& [w, k] : r.entries) out.add(canonical_rep(w), k);
    return out;
}

} // namespace lsinf
