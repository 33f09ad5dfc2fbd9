#include "main.hpp"

#include "lsinf/crystal.hpp"
#include "lsinf/kt.hpp"
#include "lsinf/textio.hpp"

#include <random>

using namespace lsinf;

namespace {

const TypeTag kTypes[] = {TypeTag::B, TypeTag::C, TypeTag::D};

Weight W(TypeTag t, const std::string& s) { return parse_weight(t, s); }

Partition random_partition(std::mt19937& g, int max_len, int max_part) {
    std::uniform_int_distribution<int> len(0, max_len), part(1, max_part);
    std::vector<int> v(len(g));
    for (int& x : v) x = part(g);
    std::sort(v.rbegin(), v.rend());
    return Partition(v);
}

// Every brute-force multiplicity at rank ell, and zero on the sign-flipped weights.
void check_against_brute(TypeTag t, const std::string& ls, const std::string& ms, int ell) {
    const Weight lam = j_dominant_rep(W(t, ls), ell).first, mu = j_dominant_rep(W(t, ms), ell).first;
    const auto r = decompose_brute(lam, mu, ell);
    std::set<Weight> cand;
    for (const auto& [nu, k] : r.entries) {
        cand.insert(nu);
        if (t == TypeTag::D) cand.insert(nu.with_coord2(0, -nu.c2(0)));
    }
    for (const Weight& nu : cand) {
        INFO(type_letter(t) << " " << ls << " x " << ms << " -> " << format_weight(nu));
        CHECK(kt_multiplicity(lam, mu, nu, ell) == r.at(nu));
    }
}

} // namespace

TEST_CASE("r_constant") {
    CHECK(r_constant(TypeTag::B, 3) == 9);
    CHECK(r_constant(TypeTag::C, 3) == 10);
    CHECK(r_constant(TypeTag::D, 3) == 8);
    CHECK_THROWS_AS(r_constant(TypeTag::B, 2), PreconditionViolated);
}

TEST_CASE("b-sequence and flips") {
    CHECK(b_sequence(Partition{2, 1}, 4) == std::vector<int>{2, 0, -2, -3});
    for (TypeTag t : kTypes) {
        const FlippedPartition f = rho_flip(t, Partition{3, 1}, {}, 3);
        CHECK(f.rho == Partition{3, 1});
        CHECK(f.sign == 1);
    }
    // C, ell = 3, rho = empty, J = {1}: b = (0, -1, ...), flipped b_1 = 10.
    const FlippedPartition f = rho_flip(TypeTag::C, Partition{}, {1}, 3);
    CHECK(f.rho == conjugate(Partition{10}));
    CHECK(f.sign == -1);
    CHECK_THROWS_AS(rho_flip(TypeTag::C, Partition{1, 1, 1, 1, 1}, {}, 3), Error);
}

TEST_CASE("size law of flips") {
    std::mt19937 g(7);
    for (int trial = 0; trial < 200; ++trial) {
        const TypeTag t = kTypes[trial % 3];
        const int ell = 3 + trial % 2;
        const Partition rho = random_partition(g, ell + 1, 5);
        std::vector<int> J;
        for (int j = 1; j <= 6; ++j)
            if (g() % 3 == 0) J.push_back(j);
        const int R = r_constant(t, ell);
        const std::vector<int> b = b_sequence(rho, 6);
        int expect = rho.size();
        for (int j : J) expect += R - 2 * b[j - 1];
        try {
            CHECK(rho_flip(t, rho, J, ell).rho.size() == expect);
        } catch (const CollisionError&) {
            FAIL("unexpected collision");
        }
    }
}

TEST_CASE("index 1 flips freely in type D at full length") {
    const Partition rho{1, 1, 1, 1};
    for (const std::vector<int>& J : {std::vector<int>{}, {2}, {3}, {2, 3}, {2, 4}}) {
        std::vector<int> K = J;
        K.insert(K.begin(), 1);
        const auto a = rho_flip(TypeTag::D, rho, J, 3), b = rho_flip(TypeTag::D, rho, K, 3);
        CHECK(a.rho == b.rho);
        CHECK(a.sign == b.sign);
    }
}

TEST_CASE("xlr basics") {
    for (TypeTag t : kTypes) {
        CHECK(xlr(t, Partition{2, 1}, Partition{}, Partition{2, 1}, 3) == 1);
        CHECK(xlr(t, Partition{2, 1}, Partition{}, Partition{2}, 3) == 0);
        CHECK_THROWS_AS(xlr(t, Partition{1, 1, 1, 1, 1}, Partition{}, Partition{}, 3), Error);
    }
    std::vector<XlrTerm> trace;
    CHECK(xlr(TypeTag::C, Partition{1}, Partition{1}, Partition{}, 3, &trace) == 1);
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].J.empty());
    const auto r = decompose_brute(Weight::epsilon(TypeTag::C, 0), Weight::epsilon(TypeTag::C, 0), 3);
    CHECK(r.at(Weight::zero(TypeTag::C)) == 1);
}

TEST_CASE("kt_multiplicity equals brute force") {
    check_against_brute(TypeTag::C, ";1", "1;0", 3);
    check_against_brute(TypeTag::C, "1;0", "1;0", 3);
    check_against_brute(TypeTag::C, "0;1", "1,1;0", 3);
    check_against_brute(TypeTag::B, "1;0", "1;0", 3);
    check_against_brute(TypeTag::B, "0;1", "1;0", 3);
    check_against_brute(TypeTag::B, ";1/2", "1;0", 3);
    check_against_brute(TypeTag::B, ";1/2", "1,1;0", 3);
    check_against_brute(TypeTag::B, "1;0", ";1/2", 3);
    check_against_brute(TypeTag::D, "0;1", "1;0", 3);
    check_against_brute(TypeTag::D, ";1", "1;0", 3);
    check_against_brute(TypeTag::D, "-1;1", "1,1;0", 3);
    check_against_brute(TypeTag::D, "1;0", ";1", 3);
    check_against_brute(TypeTag::D, ";1/2", "1;0", 3);
    check_against_brute(TypeTag::D, "-1/2;1/2", "0;1", 3);
}

TEST_CASE("kt_multiplicity trivial factor and unsupported inputs") {
    for (TypeTag t : kTypes) {
        const Weight lam = j_dominant_rep(W(t, "0,1;1"), 3).first;
        CHECK(kt_multiplicity(lam, Weight::zero(t), lam, 3) == 1);
        CHECK(kt_multiplicity(lam, Weight::zero(t), j_dominant_rep(W(t, "0,0;1"), 3).first, 3) == 0);
    }
    const Weight s = fundamental_weight(TypeTag::B, 0);
    CHECK_THROWS_AS(kt_multiplicity(s, s, W(TypeTag::B, ";1"), 3), UnsupportedCase);
    const Weight d = fundamental_weight(TypeTag::D, 0);
    CHECK_THROWS_AS(kt_multiplicity(d, W(TypeTag::D, ";1"), W(TypeTag::D, ";3/2"), 3), UnsupportedCase);
    CHECK_THROWS_AS(kt_multiplicity(W(TypeTag::D, ";1"), W(TypeTag::D, ";1"), W(TypeTag::D, ";2"), 3),
                    UnsupportedCase);
    CHECK_THROWS_AS(kt_multiplicity(W(TypeTag::C, "1;0"), W(TypeTag::C, "1;0"), W(TypeTag::C, "2;0"), 3), Error);
}

TEST_CASE("stability_check") {
    for (TypeTag t : kTypes) {
        CHECK(stability_check(t, Partition{}, Partition{1}, Partition{1}, 0, 3));
        CHECK(stability_check(t, Partition{}, Partition{2}, Partition{1, 1}, 0, 4));
    }
    CHECK(stability_check(TypeTag::C, Partition{1, 1, 1}, Partition{1}, Partition{1, 1, 1, 1}, 1, 3));
    CHECK_THROWS_WITH_AS(stability_check(TypeTag::C, Partition{1, 1, 1}, Partition{1, 1, 1}, Partition{1, 1, 1, 1}, 1, 3),
                         doctest::Contains("(iii)"), PreconditionViolated);
    CHECK_THROWS_WITH_AS(stability_check(TypeTag::C, Partition{2, 1}, Partition{1}, Partition{1, 1}, 1, 3),
                         doctest::Contains("(ii)"), PreconditionViolated);
    CHECK_THROWS_WITH_AS(stability_check(TypeTag::C, Partition{1, 1, 1, 1, 1}, Partition{1}, Partition{1}, 1, 3),
                         doctest::Contains("(i)"), PreconditionViolated);
    // Both sides stay computable outside the hypotheses.
    const auto [lhs, rhs] = stability_sides(TypeTag::C, Partition{1, 1, 1}, Partition{1, 1, 1}, Partition{1, 1, 1, 1}, 1, 3);
    CHECK(lhs >= 0);
    CHECK(rhs >= 0);
}

TEST_CASE("flips commute with row insertion for small index sets") {
    std::mt19937 g(11);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const TypeTag t = kTypes[trial % 3];
        const int n = 3 + trial % 2;
        const int L = 1 + static_cast<int>(g() % 3);
        const int y = 1 + static_cast<int>(g() % n);
        std::vector<int> parts(y, L);
        while (static_cast<int>(parts.size()) < n && g() % 2) parts.push_back(1 + static_cast<int>(g() % L));
        std::sort(parts.rbegin(), parts.rend());
        const Partition rho(parts);
        const Partition kappa = iota_insert(L, rho);
        for (int mask = 0; mask < (1 << L); ++mask) {
            std::vector<int> J;
            for (int j = 1; j <= L; ++j)
                if (mask & (1 << (j - 1))) J.push_back(j);
            const auto a = rho_flip(t, rho, J, n), b = rho_flip(t, kappa, J, n + 1);
            CHECK(iota_insert(L, a.rho) == b.rho);
            CHECK(a.sign == b.sign);
            ++checked;
        }
    }
    CHECK(checked > 0);
}
