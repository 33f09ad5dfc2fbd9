#include "main.hpp"

#include "lsinf/decomp.hpp"
#include "lsinf/textio.hpp"
#include "oracles.hpp"

using namespace lsinf;

namespace {

const TypeTag kTypes[] = {TypeTag::B, TypeTag::C, TypeTag::D};

Weight W(TypeTag t, const std::string& s) { return parse_weight(t, s); }

Weight P(TypeTag t, std::initializer_list<int> parts) { return from_partition(t, Partition(parts)); }

int level2_of_all(const DecompResult& r) {
    int L2 = -1;
    for (const auto& [w, k] : r.entries) {
        if (L2 < 0) L2 = w.tail2();
        if (w.tail2() != L2) return -2;
    }
    return L2;
}

} // namespace

TEST_CASE("decompose_ee") {
    for (TypeTag t : kTypes) {
        const auto r = decompose_ee(P(t, {1}), P(t, {1}));
        CHECK(format_decomp(r) == "(2):1 (1,1):1");
        CHECK(decompose_ee(P(t, {2, 1}), Weight::zero(t)).entries == decompose_ee(Weight::zero(t), P(t, {2, 1})).entries);
        CHECK(decompose_ee(P(t, {2, 1}), Weight::zero(t)).at(P(t, {2, 1})) == 1);
        CHECK(decompose_ee(P(t, {2, 1}), P(t, {2, 1})).at(P(t, {3, 2, 1})) == 2);
        // Inputs need not be in partition form.
        CHECK(decompose_ee(W(t, "0,-1;0"), W(t, "2;0")).entries == decompose_ee(P(t, {1}), P(t, {2})).entries);
    }
    CHECK_THROWS_AS(decompose_ee(fundamental_weight(TypeTag::C, 0), P(TypeTag::C, {1})), Error);
    // Totals and coefficients against the Jacobi-Trudi oracle.
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const Partition& la : partitions_of(a))
                for (const Partition& mu : partitions_of(b)) {
                    const auto r = decompose_ee(from_partition(TypeTag::B, la), from_partition(TypeTag::B, mu));
                    std::int64_t total = 0;
                    for (const Partition& nu : partitions_of(a + b)) {
                        const std::int64_t c = oracle::lr_jacobi_trudi(la, mu, nu);
                        CHECK(r.at(from_partition(TypeTag::B, nu)) == c);
                        total += c;
                    }
                    CHECK(r.total() == total);
                }
}

TEST_CASE("decompose_ed") {
    const TypeTag C = TypeTag::C;
    CHECK(format_decomp(decompose_ed(Weight::epsilon(C, 0), fundamental_weight(C, 0))) == "2;1:1");
    CHECK(ed_xi(W(C, "1,-1;0"), fundamental_weight(C, 2)) == W(C, "0,0,1,1;0"));
    CHECK(decompose_ed(W(C, "1,-1;0"), fundamental_weight(C, 2)).at(W(C, "0,0,2,2;1")) == 1);
    for (TypeTag t : kTypes) {
        const Weight mu = fundamental_weight(t, 1);
        CHECK(decompose_ed(Weight::zero(t), mu).at(canonical_rep(mu)) == 1);
        CHECK(decompose_ed(Weight::zero(t), mu).entries.size() == 1);
    }
    CHECK_THROWS_AS(decompose_ed(Weight::epsilon(C, 0), W(C, "1;0")), PreconditionViolated);
    // The witness pi_xi (x) pi_mu is extremal.
    for (TypeTag t : kTypes) {
        const Weight lam = W(t, "2,-1;0"), mu = fundamental_weight(t, 1);
        const Weight xi = ed_xi(lam, mu);
        int top = 0;
        for (int j : support(xi)) top = std::max(top, j);
        for (int n = top + 2; n <= top + 4; ++n)
            CHECK(is_extremal_at_rank(TensorElt{straight_path(xi), straight_path(mu)}, n));
    }
}

TEST_CASE("decompose_de and the rank shift") {
    const TypeTag C = TypeTag::C;
    CHECK(de_rank(fundamental_weight(C, 0), Weight::epsilon(C, 0)) == 3);
    for (TypeTag t : kTypes) {
        const Weight lam = fundamental_weight(t, 1);
        const auto r0 = decompose_de(lam, Weight::zero(t));
        CHECK(r0.entries.size() == 1);
        CHECK(r0.at(lam) == 1);
        const Weight mu = W(t, "0,1;0");
        const auto r1 = decompose_de(Weight::zero(t), mu);
        CHECK(r1.entries.size() == 1);
        CHECK(canonicalized(r1).at(from_partition(t, Partition{1})) == 1);
    }
    // Theta re-indexing.
    CHECK(theta(W(C, "0,0,0,2;1"), 3) == W(C, "0,0,0,1,2;1"));
    CHECK(theta(W(C, "0;1"), 3) == W(C, "0;1"));
    CHECK(theta(W(C, "0,3;2"), 4) == W(C, "0,2,3;2"));
    for (TypeTag t : kTypes) {
        const Weight lam = fundamental_weight(t, 0), mu = Weight::epsilon(t, 0);
        const int m = de_rank(lam, mu);
        const auto a = decompose_de(lam, mu), b = decompose_de(lam, mu, 1);
        CHECK(a.rank == m);
        CHECK(b.rank == m + 1);
        DecompResult shifted;
        for (const auto& [w, k] : a.entries) shifted.add(theta(w, m), k);
        CHECK(shifted.entries == b.entries);
        CHECK(level2_of_all(a) == lam.tail2());
    }
}

TEST_CASE("decompose_dd") {
    for (TypeTag t : kTypes) {
        const Weight lam = fundamental_weight(t, 0), mu = fundamental_weight(t, 1);
        CHECK(decompose_dd(lam, Weight::zero(t)).entries.size() == 1);
        CHECK(decompose_dd(lam, Weight::zero(t)).at(lam) == 1);
        const auto r = decompose_dd(lam, mu, 3);
        CHECK(r.at(lam + mu) == 1);
        CHECK(level2_of_all(r) == lam.tail2() + mu.tail2());
        const auto b = decompose_brute(lam, mu, 3);
        for (const auto& [nu, k] : b.entries)
            if (nu.head_size() <= 3) CHECK(r.at(nu) == k);
        for (const auto& [nu, k] : r.entries) CHECK(b.at(nu) == k);
    }
    const TypeTag C = TypeTag::C;
    const Weight L0 = fundamental_weight(C, 0);
    const auto r = decompose_dd(L0, L0, 3);
    const auto b = decompose_brute(L0, L0, 3);
    for (const auto& [nu, k] : r.entries) CHECK(b.at(nu) == k);
}

TEST_CASE("decompose_dd drops paths that leave the dominant chamber") {
    // An eta whose endpoint is dominant but whose path is not.
    bool found = false;
    for (TypeTag t : kTypes) {
        for (const char* ls : {"0;1", ";1", "0,0;1"})
            for (const char* ms : {";1", "0;1", "0,1;1"}) {
                const Weight lam = j_dominant_rep(W(t, ls), 2).first, mu = j_dominant_rep(W(t, ms), 2).first;
                const int n = std::max(2, std::max(lam.head_size(), mu.head_size()));
                std::map<Weight, int> endpoint_dominant;
                for (const LSPath& eta : generate_crystal(mu, n).elements) {
                    const Weight nu = lam + weight_of(eta);
                    if (is_dominant(nu, n)) ++endpoint_dominant[nu];
                }
                const auto brute = decompose_brute(lam, mu, n);
                for (const auto& [nu, c] : endpoint_dominant)
                    if (c > brute.at(nu)) found = true;
            }
    }
    CHECK(found);
}

TEST_CASE("decompose_general degenerates to the special cases") {
    for (TypeTag t : kTypes) {
        const Weight a = P(t, {2, 1}), b = P(t, {1});
        CHECK(decompose_general(a, b).entries == decompose_ee(a, b).entries);
        const Weight mu = fundamental_weight(t, 1);
        CHECK(decompose_general(b, mu).entries == decompose_ed(b, mu).entries);
        const Weight lam = fundamental_weight(t, 0);
        CHECK(decompose_general(lam, b).entries == canonicalized(decompose_de(lam, b)).entries);
        CHECK(decompose_general(lam, mu).entries == decompose_dd(lam, mu).entries);
    }
}

TEST_CASE("decompose_general against brute force on a mixed weight") {
    const TypeTag C = TypeTag::C;
    const Weight lam = fundamental_weight(C, 0) + Weight::epsilon(C, 0);
    const Weight mu = fundamental_weight(C, 0);
    const auto g = decompose_general(lam, mu);
    CHECK(!g.entries.empty());
    const auto b = decompose_brute(j_dominant_rep(lam, 5).first, mu, 5);
    for (const auto& [nu, k] : g.entries) {
        CHECK(nu.tail2() == lam.tail2() + mu.tail2());
        CHECK(b.at(j_dominant_rep(nu, 5).first) == k);
    }
}
