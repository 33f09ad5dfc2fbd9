#include "lsinf/acceptance.hpp"

#include "lsinf/crystal.hpp"
#include "lsinf/decomp.hpp"
#include "lsinf/kt.hpp"
#include "lsinf/textio.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace lsinf {

namespace {

const TypeTag kTypes[] = {TypeTag::B, TypeTag::C, TypeTag::D};

Weight W(TypeTag t, const std::string& s) { return parse_weight(t, s); }

// Counts checks and keeps the first few failures for the report line.
struct Tally {
    long checks = 0;
    long fails = 0;
    std::string failures;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (++fails <= 3) failures += (failures.empty() ? "" : "; ") + what;
    }
};

using Table = std::map<Partition, std::int64_t>;
using PairKey = std::pair<Partition, Partition>;

struct Context {
    bool quick = false;
    std::set<std::pair<Weight, int>> crystals; // (highest weight, rank) of crystals built in 1-8
    std::map<TypeTag, std::map<PairKey, Table>> brute_tables, ee_tables;
    bool ee_grid_done = false;
    void note(const Weight& w, int n) { crystals.emplace(j_dominant_rep(w, n).first, n); }
};

std::string tag_str(TypeTag t) { return std::string(1, type_letter(t)); }

// Criterion 1.
void crystal_golden(Context& cx, Tally& tl, std::string& detail) {
    const int n = 3;
    for (TypeTag t : kTypes) {
        const auto eps = [t](int j, int c) { return format_path(straight_path(Weight::epsilon(t, j, c))); };
        std::set<std::string> nodes;
        std::set<std::tuple<std::string, int, std::string>> edges;
        for (int j = 0; j <= n; ++j) {
            nodes.insert(eps(j, 1));
            nodes.insert(eps(j, -1));
        }
        for (int j = 1; j <= n; ++j) {
            edges.emplace(eps(j, 1), j, eps(j - 1, 1));
            edges.emplace(eps(j - 1, -1), j, eps(j, -1));
        }
        if (t == TypeTag::B) {
            const Weight e0 = Weight::epsilon(t, 0);
            const std::string p0 = format_path(LSPath({-e0, e0}, {Rat(0), Rat(1, 2), Rat(1)}));
            nodes.insert(p0);
            edges.emplace(eps(0, 1), 0, p0);
            edges.emplace(p0, 0, eps(0, -1));
        } else if (t == TypeTag::C) {
            edges.emplace(eps(0, 1), 0, eps(0, -1));
        } else {
            edges.emplace(eps(1, 1), 0, eps(0, -1));
            edges.emplace(eps(0, 1), 0, eps(1, -1));
        }
        const auto g = generate_crystal(Weight::epsilon(t, 0), n);
        cx.note(Weight::epsilon(t, 0), n);
        std::set<std::string> got_nodes;
        for (const LSPath& p : g.elements) got_nodes.insert(format_path(p));
        std::set<std::tuple<std::string, int, std::string>> got_edges;
        for (const auto& [s, i, d] : g.edges) got_edges.emplace(format_path(g.elements[s]), i, format_path(g.elements[d]));
        tl.expect(got_nodes == nodes, tag_str(t) + " node set");
        tl.expect(got_edges == edges, tag_str(t) + " edge set");
        tl.expect(g.elements.size() == g.index.size(), tag_str(t) + " duplicate nodes");
        detail += tag_str(t) + ":" + std::to_string(g.elements.size()) + " nodes/" + std::to_string(g.edges.size()) + " edges ";
    }
}

// [1,m]-minimal elements of B_[1,m](la) x B_[1,m](mu) with weight in E_W, by partition.
Table levi_minimal_counts(TypeTag t, const Partition& la, const Partition& mu, int m) {
    const LSPath start = straight_path(from_partition(t, la));
    std::set<LSPath> seen{start};
    std::deque<LSPath> todo{start};
    while (!todo.empty()) {
        const LSPath b = todo.front();
        todo.pop_front();
        for (int i = 1; i <= m; ++i)
            for (auto nx : {root_e(i, b), root_f(i, b)})
                if (nx && seen.insert(*nx).second) todo.push_back(*nx);
    }
    const LSPath right = straight_path(from_partition(t, mu));
    Table out;
    for (const LSPath& b : seen) {
        const TensorElt x{b, right};
        if (!is_minimal_in(x, 1, m)) continue;
        const Weight w = wt(x);
        bool partition_form = true;
        for (int j = 0; j <= m; ++j) partition_form &= w.c2(j) >= 0;
        if (partition_form) ++out[dagger(w)];
    }
    return out;
}

// Criteria 2 and 3 share one grid.
void ee_grid(Context& cx, Tally& tl, std::string& detail) {
    const int max_total = cx.quick ? 3 : 4;
    long pairs = 0;
    for (TypeTag t : kTypes) {
        for (int a = 0; a <= max_total; ++a)
            for (int b = 0; a + b <= max_total; ++b) {
                if (a + b == 0) continue;
                for (const Partition& la : partitions_of(a))
                    for (const Partition& mu : partitions_of(b)) {
                        const int m = a + b;
                        const Weight lw = from_partition(t, la), mw = from_partition(t, mu);
                        const std::string tag = tag_str(t) + " " + format_partition(la) + "x" + format_partition(mu);
                        const DecompResult brute = decompose_brute(lw, mw, m);
                        cx.note(lw, m);
                        cx.note(mw, m);
                        Table bt;
                        for (const auto& [nu, k] : brute.entries) {
                            tl.expect(nu.tail2() == 0, tag + " level of a brute component");
                            const Partition d = dagger(nu);
                            tl.expect(d.size() <= m, tag + " component larger than the inputs");
                            if (d.size() == m) bt[d] += k;
                        }
                        Table et, lt, ot;
                        for (const auto& [nu, k] : decompose_ee(lw, mw).entries) et[dagger(nu)] = k;
                        for (const Partition& nu : partitions_of(m)) {
                            if (const auto c = lr_coefficient(la, mu, nu)) lt[nu] = c;
                            if (const auto c = oracle::lr_jacobi_trudi(la, mu, nu)) ot[nu] = c;
                        }
                        tl.expect(bt == et, tag + " brute vs decompose_ee");
                        tl.expect(et == lt, tag + " decompose_ee vs LR");
                        tl.expect(lt == ot, tag + " LR vs Jacobi-Trudi");
                        tl.expect(levi_minimal_counts(t, la, mu, m) == lt, tag + " [1,m]-minimal count vs LR");
                        cx.brute_tables[t][{la, mu}] = bt;
                        cx.ee_tables[t][{la, mu}] = et;
                        ++pairs;
                    }
            }
    }
    cx.ee_grid_done = true;
    detail = std::to_string(pairs) + " (type, lambda, mu) instances";
}

// Criterion 3.
void type_independence(Context& cx, Tally& tl, std::string& detail) {
    if (!cx.ee_grid_done) {
        Tally scratch;
        std::string d;
        ee_grid(cx, scratch, d);
    }
    for (TypeTag t : {TypeTag::C, TypeTag::D}) {
        tl.expect(cx.brute_tables[t] == cx.brute_tables[TypeTag::B], "brute tables of B and " + tag_str(t) + " differ");
        tl.expect(cx.ee_tables[t] == cx.ee_tables[TypeTag::B], "decompose_ee tables of B and " + tag_str(t) + " differ");
    }
    tl.expect(!cx.brute_tables[TypeTag::B].empty(), "empty grid");
    detail = std::to_string(cx.brute_tables[TypeTag::B].size()) + " pairs compared across B, C, D";
}

// Criterion 4.
void ed_extremal(Context&, Tally& tl, std::string& detail) {
    struct Case {
        TypeTag t;
        const char* lam;
        Weight mu;
    };
    const auto F = [](TypeTag t, int i) { return fundamental_weight(t, i); };
    const std::vector<Case> cases = {
        {TypeTag::C, "1;0", F(TypeTag::C, 0)},          {TypeTag::C, "0,-2,1;0", F(TypeTag::C, 1)},
        {TypeTag::B, "0,1;0", F(TypeTag::B, 0)},        {TypeTag::B, "-1,1;0", F(TypeTag::B, 2)},
        {TypeTag::D, "1;0", F(TypeTag::D, 0)},          {TypeTag::D, "0,0,-2;0", F(TypeTag::D, 1)},
        {TypeTag::D, "1,-1,1;0", F(TypeTag::D, 2)},     {TypeTag::C, "3;0", F(TypeTag::C, 0).scaled(2)},
        {TypeTag::B, "1,0,2;0", F(TypeTag::B, 0).scaled(2)}, {TypeTag::D, "-1,-1;0", F(TypeTag::D, 0).scaled(2)},
    };
    for (const Case& c : cases) {
        const Weight lam = W(c.t, c.lam);
        const std::string tag = tag_str(c.t) + " " + c.lam + " x " + format_weight(c.mu);
        tl.expect(dagger(lam).size() <= 3, tag + " |lambda| > 3");
        const Weight xi = ed_xi(lam, c.mu);
        const DecompResult r = decompose_ed(lam, c.mu);
        tl.expect(r.entries.size() == 1 && r.at(canonical_rep(xi + c.mu)) == 1, tag + " decompose_ed entry");
        tl.expect(dagger(xi) == dagger(lam), tag + " xi not in the orbit of lambda");
        int top = 0;
        for (int j : support(xi)) top = std::max(top, j);
        const TensorElt b{straight_path(xi), straight_path(c.mu)};
        for (int n = top + 2; n <= top + 4; ++n) tl.expect(is_extremal_at_rank(b, n), tag + " not extremal at rank " + std::to_string(n));
    }
    detail = std::to_string(cases.size()) + " instances, 3 ranks each";
}

int first_at_level(const Weight& w) {
    int j = 0;
    while (w.c2(j) != w.tail2()) ++j;
    return j;
}

// Criterion 5.
void de_stability(Context& cx, Tally& tl, std::string& detail) {
    const std::vector<std::tuple<TypeTag, const char*, const char*>> cases = {
        {TypeTag::C, ";1", "1;0"},   {TypeTag::B, ";1/2", "1,1;0"}, {TypeTag::D, ";1/2", "1;0"},
        {TypeTag::C, "1;2", "2;0"},  {TypeTag::D, ";1", "0,-1,1;0"}, {TypeTag::B, "1/2;3/2", "2;0"},
    };
    std::string ranks;
    for (const auto& [t, ls, ms] : cases) {
        const Weight lam = W(t, ls), mu = W(t, ms);
        const std::string tag = tag_str(t) + " " + ls + " x " + ms;
        const int p = first_at_level(lam);
        tl.expect(p <= 1 && lam.tail2() <= 4 && dagger(mu).size() <= 2, tag + " outside the instance class");
        const int m = de_rank(lam, mu);
        const DecompResult a = decompose_de(lam, mu), b = decompose_de(lam, mu, 1);
        cx.note(mu, m);
        cx.note(mu, m + 1);
        const long long N = compute_N(mu);
        int abs_sum = 0;
        for (int x : mu.head2()) abs_sum += std::abs(x) / 2;
        const int q = std::max({1, mu.head_size(), abs_sum});
        DecompResult shifted;
        for (const auto& [nu, k] : a.entries) {
            int at_level = 0;
            for (int j = 0; j <= m; ++j) at_level += nu.c2(j) == nu.tail2();
            tl.expect(is_dominant(nu, m) && nu.head_size() <= m + 1 && nu.tail2() == lam.tail2() && at_level > m - p - N * q,
                      tag + " component outside P^[m]");
            shifted.add(theta(nu, m), k);
        }
        tl.expect(shifted.entries == b.entries, tag + " ranks m and m+1 disagree under Theta");
        tl.expect(!a.entries.empty(), tag + " empty decomposition");
        ranks += std::to_string(m) + " ";
    }
    detail = std::to_string(cases.size()) + " instances at m = " + ranks;
}

// Criterion 6.
void kt_cross(Context& cx, Tally& tl, std::string& detail) {
    struct Case {
        const char* branch;
        TypeTag t;
        const char* lam;
        const char* mu;
        int ell;
    };
    const std::vector<Case> cases = {
        {"KT01", TypeTag::C, ";1", "1;0", 3},         {"KT01", TypeTag::C, "0;1", "1,1;0", 3},
        {"KT01", TypeTag::C, "1;0", "1;0", 4},        {"KT02a", TypeTag::B, "1;0", "1;0", 3},
        {"KT02a", TypeTag::B, "0;1", "1;0", 3},       {"KT02b", TypeTag::B, ";1/2", "1;0", 3},
        {"KT02b", TypeTag::B, ";1/2", "1,1;0", 3},    {"KT02b", TypeTag::B, "1;0", "1/2;3/2", 3},
        {"KT03", TypeTag::D, "0;1", "1;0", 3},        {"KT03", TypeTag::D, "1;0", "1,1;0", 4},
        {"KT04", TypeTag::D, ";1", "1;0", 3},         {"KT04", TypeTag::D, "-1;1", "1,1;0", 3},
        {"KT04", TypeTag::D, "1;0", "1;1", 4},        {"KT05/06", TypeTag::D, ";1/2", "1;0", 3},
        {"KT05/06", TypeTag::D, "-1/2;1/2", "0;1", 3}, {"KT05/06", TypeTag::D, ";1/2", "1,1;0", 4},
    };
    long tuples = 0, nonzero = 0;
    std::map<std::string, int> per_branch;
    for (const Case& c : cases) {
        const Weight lam = j_dominant_rep(W(c.t, c.lam), c.ell).first, mu = j_dominant_rep(W(c.t, c.mu), c.ell).first;
        const DecompResult r = decompose_brute(lam, mu, c.ell);
        cx.note(lam, c.ell);
        cx.note(mu, c.ell);
        std::set<Weight> cand{lam + mu};
        for (const auto& [nu, k] : r.entries) {
            cand.insert(nu);
            if (c.t == TypeTag::D) cand.insert(nu.with_coord2(0, -nu.c2(0)));
        }
        for (const Weight& nu : cand) {
            if (!in_ldom(nu, c.ell)) continue;
            const std::string tag = std::string(c.branch) + " " + tag_str(c.t) + " " + c.lam + " x " + c.mu + " -> " + format_weight(nu);
            try {
                const std::int64_t k = kt_multiplicity(lam, mu, nu, c.ell);
                tl.expect(k >= 0, tag + " negative");
                tl.expect(k == r.at(nu), tag + " kt " + std::to_string(k) + " vs brute " + std::to_string(r.at(nu)));
                nonzero += k != 0;
            } catch (const Error& e) {
                tl.expect(false, tag + " " + e.what());
            }
            ++tuples;
        }
        ++per_branch[c.branch];
    }
    for (const char* b : {"KT01", "KT02a", "KT02b", "KT03", "KT04", "KT05/06"})
        tl.expect(per_branch[b] >= 1, std::string("no instance for ") + b);
    tl.expect(per_branch["KT02b"] >= 2 && per_branch["KT05/06"] >= 2, "fewer than two spin instances");
    tl.expect(tuples >= 20, "grid smaller than 20");
    detail = std::to_string(tuples) + " (type, lambda, mu, nu, ell) tuples, " + std::to_string(nonzero) + " nonzero";
}

// A random triple satisfying the hypotheses of the stability identity.
std::tuple<Partition, Partition, Partition> stability_triple(std::mt19937& g, int L, int n) {
    auto uni = [&g](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); };
    const int s2 = uni(0, std::min(2, n - 1));
    const std::vector<Partition> p2 = partitions_of(s2);
    const Partition rho2 = p2[uni(0, static_cast<int>(p2.size()) - 1)];
    std::vector<int> r1, r;
    if (L > 0) {
        r1.assign(uni(s2 + 1, std::min(n + 1, s2 + 2)), L);
        while (static_cast<int>(r1.size()) < n + 1 && uni(0, 2) == 0) r1.push_back(uni(1, L));
        if (uni(0, 2) == 0) r.push_back(L + uni(1, 2));
        const int y = uni(s2 + 1, std::min(n + 1 - static_cast<int>(r.size()), s2 + 2));
        r.insert(r.end(), y, L);
        while (static_cast<int>(r.size()) < n + 1 && uni(0, 2) == 0) r.push_back(uni(1, L));
    } else {
        const int len = uni(0, n - s2);
        for (int k = 0; k < len; ++k) r.push_back(uni(1, 3));
    }
    std::sort(r1.rbegin(), r1.rend());
    std::sort(r.rbegin(), r.rend());
    return {Partition(r1), rho2, Partition(r)};
}

// Criterion 7.
void stability(Context& cx, Tally& tl, std::string& detail) {
    std::mt19937 g(20240607);
    const int per_type = cx.quick ? 10 : 50;
    long nonzero = 0, total = 0;
    for (TypeTag t : kTypes) {
        for (int k = 0; k < per_type; ++k) {
            const int L = static_cast<int>(g() % 4), n = 3 + static_cast<int>(g() % 2);
            auto [rho1, rho2, rho] = stability_triple(g, L, n);
            // Every second sample is steered to a constituent of rho1 x rho2 so the sides are not trivially zero.
            if (k % 2 == 0 && L > 0) {
                std::vector<Partition> hits;
                for (const Partition& p : partitions_of(rho1.size() + rho2.size())) {
                    if (p.length() > n + 1 || !contains(p, rho1)) continue;
                    int y = 0;
                    for (int j = 0; j <= n; ++j) y += p[j] == L;
                    if (y > rho2.size() && lr_coefficient(rho1, rho2, p) != 0) hits.push_back(p);
                }
                if (!hits.empty()) rho = hits[g() % hits.size()];
            }
            const std::string tag = tag_str(t) + " L=" + std::to_string(L) + " n=" + std::to_string(n) + " " +
                                    format_partition(rho1) + "|" + format_partition(rho2) + "|" + format_partition(rho);
            try {
                const bool ok = stability_check(t, rho1, rho2, rho, L, n);
                tl.expect(ok, tag);
                nonzero += xlr(t, rho1, rho2, rho, n) != 0;
            } catch (const Error& e) {
                tl.expect(false, tag + " " + e.what());
            }
            ++total;
        }
    }
    detail = std::to_string(total) + " triples (" + std::to_string(per_type) + " per type), " + std::to_string(nonzero) +
             " with nonzero value";
}

// Criterion 8.
void dd_equiv(Context& cx, Tally& tl, std::string& detail) {
    const int n = 3;
    long compared = 0;
    for (TypeTag t : kTypes) {
        const std::vector<Weight> ws = {fundamental_weight(t, 0), fundamental_weight(t, 1),
                                        fundamental_weight(t, 0) + fundamental_weight(t, 1)};
        for (const Weight& lam : ws)
            for (const Weight& mu : ws) {
                const std::string tag = tag_str(t) + " " + format_weight(lam) + " x " + format_weight(mu);
                const DecompResult dd = decompose_dd(lam, mu, n);
                const DecompResult brute = decompose_brute(lam, mu, n);
                cx.note(mu, n);
                cx.note(lam, n);
                DecompResult stable;
                for (const auto& [nu, k] : brute.entries)
                    if (nu.head_size() <= n) stable.add(nu, k);
                tl.expect(dd.entries == stable.entries, tag);
                tl.expect(dd.at(lam + mu) == 1, tag + " Cartan component");
                ++compared;
            }
    }
    detail = std::to_string(compared) + " pairs at n = 3";
}

// Criterion 9.
void general_consistency(Context&, Tally& tl, std::string& detail) {
    const TypeTag B = TypeTag::B, C = TypeTag::C, D = TypeTag::D;
    const auto P = [](TypeTag t, std::initializer_list<int> p) { return from_partition(t, Partition(p)); };
    const auto F = [](TypeTag t, int i) { return fundamental_weight(t, i); };
    int cases = 0;
    for (const auto& [a, b] : std::vector<std::pair<Weight, Weight>>{
             {P(B, {1}), P(B, {1})}, {P(C, {2, 1}), P(C, {1})}, {P(D, {1, 1}), P(D, {2})}}) {
        tl.expect(decompose_general(a, b).entries == decompose_ee(a, b).entries, "ee " + format_weight(a));
        ++cases;
    }
    for (const auto& [a, b] : std::vector<std::pair<Weight, Weight>>{
             {P(C, {1}), F(C, 0)}, {P(B, {1, 1}), F(B, 1)}, {W(D, "0,-2;0"), F(D, 2)}}) {
        tl.expect(decompose_general(a, b).entries == decompose_ed(a, b).entries, "ed " + format_weight(a));
        ++cases;
    }
    for (const auto& [a, b] : std::vector<std::pair<Weight, Weight>>{
             {F(C, 0), P(C, {1})}, {F(B, 1), P(B, {1})}, {F(D, 0), P(D, {1, 1})}}) {
        tl.expect(decompose_general(a, b).entries == canonicalized(decompose_de(a, b)).entries, "de " + format_weight(a));
        ++cases;
    }
    for (const auto& [a, b] : std::vector<std::pair<Weight, Weight>>{
             {F(C, 0), F(C, 1)}, {F(B, 0), F(B, 0)}, {F(D, 1), F(D, 0) + F(D, 1)}}) {
        tl.expect(decompose_general(a, b).entries == decompose_dd(a, b).entries, "dd " + format_weight(a));
        ++cases;
    }
    detail = std::to_string(cases) + " instances over ee, ed, de, dd";
}

// Criterion 10.
void structural(Context& cx, Tally& tl, std::string& detail) {
    long elements = 0;
    for (const auto& [lam, n] : cx.crystals) {
        const std::string tag = tag_str(lam.tag()) + " " + format_weight(lam) + " n=" + std::to_string(n);
        const auto g = generate_crystal(lam, n);
        const OrbitOrder order(lam, n);
        int maximal = 0;
        for (const auto& [s, i, d] : g.edges) {
            const auto back = root_e(i, g.elements[d]);
            tl.expect(back && *back == g.elements[s], tag + " e does not invert f");
        }
        for (const LSPath& b : g.elements) {
            maximal += is_maximal(b, n);
            tl.expect(validate_ls_path(b, order), tag + " invalid LS path " + format_path(b));
            for (int i = 0; i <= n; ++i) {
                const auto [e, f] = string_lengths(i, b);
                tl.expect(std::pair(e, f) == eps_phi(i, b), tag + " string lengths");
                tl.expect(2 * (f - e) == pairing_h2(wt(b), i), tag + " phi - eps != <wt, h_i>");
                if (auto x = root_e(i, b)) {
                    const auto y = root_f(i, *x);
                    tl.expect(y && *y == b, tag + " f does not invert e");
                    tl.expect(g.index.count(*x) == 1, tag + " not closed under e");
                }
            }
        }
        tl.expect(maximal == 1, tag + " " + std::to_string(maximal) + " maximal elements");
        elements += static_cast<long>(g.elements.size());
    }
    detail = std::to_string(cx.crystals.size()) + " crystals, " + std::to_string(elements) + " elements";
}

} // namespace

std::string format_result(const CriterionResult& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    return "criterion " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") + " " + r.title + " (" + secs +
           " s): " + r.detail;
}

std::vector<CriterionResult> run_acceptance(bool quick, const std::function<void(const CriterionResult&)>& report) {
    Context cx;
    cx.quick = quick;
    struct Criterion {
        int id;
        const char* title;
        double budget;
        void (*run)(Context&, Tally&, std::string&);
    };
    const Criterion criteria[] = {
        {1, "crystal-graph golden tests", 1, crystal_golden},
        {2, "EE oracle equivalence", 60, ee_grid},
        {3, "type independence of EE tables", 60, type_independence},
        {4, "ED extremality witness", 120, ed_extremal},
        {5, "DE rank stability", 600, de_stability},
        {6, "KT cross-validation", 600, kt_cross},
        {7, "stability identity on random triples", 300, stability},
        {8, "DD equivalence", 600, dd_equiv},
        {9, "general-case consistency", 600, general_consistency},
        {10, "structural invariants", 600, structural},
    };
    std::vector<CriterionResult> out;
    for (const Criterion& s : criteria) {
        CriterionResult r;
        r.id = s.id;
        r.title = s.title;
        Tally tl;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            s.run(cx, tl, r.detail);
        } catch (const std::exception& e) {
            tl.expect(false, std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        tl.expect(r.seconds < s.budget, "over the time budget");
        r.pass = tl.fails == 0;
        r.detail += ", " + std::to_string(tl.checks) + " checks";
        if (!r.pass) r.detail += ", " + std::to_string(tl.fails) + " failed: " + tl.failures;
        if (report) report(r);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace lsinf
