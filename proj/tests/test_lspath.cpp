#include "main.hpp"

#include "lsinf/crystal.hpp"
#include "lsinf/error.hpp"
#include "lsinf/lspath.hpp"
#include "lsinf/textio.hpp"

#include <random>

using namespace lsinf;

namespace {

const TypeTag kTypes[] = {TypeTag::B, TypeTag::C, TypeTag::D};

Weight W(TypeTag t, const std::string& s) { return parse_weight(t, s); }

LSPath pi0() {
    return LSPath({Weight::epsilon(TypeTag::B, 0, -1), Weight::epsilon(TypeTag::B, 0)}, {Rat(0), Rat(1, 2), Rat(1)});
}

} // namespace

TEST_CASE("straight paths and values") {
    const Weight e0 = Weight::epsilon(TypeTag::C, 0);
    CHECK(straight_path(e0).dirs() == std::vector<Weight>{e0});
    CHECK(weight_of(straight_path(e0)) == e0);
    CHECK(weight_of(straight_path(Weight::zero(TypeTag::C))) == Weight::zero(TypeTag::C));
    CHECK(weight_of(straight_path(fundamental_weight(TypeTag::B, 0))) == fundamental_weight(TypeTag::B, 0));
    CHECK(value_at(pi0(), Rat(0)) == RationalWeight(TypeTag::B, {}, Rat(0)));
    CHECK(value_at(pi0(), Rat(1, 2)) == RationalWeight(TypeTag::B, {Rat(-1, 2)}, Rat(0)));
    CHECK(value_at(pi0(), Rat(1)) == RationalWeight(TypeTag::B, {}, Rat(0)));
    CHECK(weight_of(pi0()) == Weight::zero(TypeTag::B));
    CHECK_THROWS_AS(value_at(pi0(), Rat(2)), PreconditionViolated);
    // a malformed path with a non-half-integral endpoint
    const LSPath bad({Weight::epsilon(TypeTag::C, 0, -1), Weight::epsilon(TypeTag::C, 0)}, {Rat(0), Rat(1, 3), Rat(1)});
    CHECK_THROWS_AS(weight_of(bad), Error);
}

TEST_CASE("path construction merges and rejects") {
    const Weight e0 = Weight::epsilon(TypeTag::C, 0);
    const LSPath p({e0, e0}, {Rat(0), Rat(1, 2), Rat(1)});
    CHECK(p.segments() == 1);
    CHECK(p == straight_path(e0));
    CHECK_THROWS_AS(LSPath({e0}, {Rat(0), Rat(1, 2)}), PreconditionViolated);
    CHECK(parse_path(TypeTag::B, format_path(pi0())) == pi0());
    CHECK(format_path(pi0()) == "(-1;0|1;0 ; 0,1/2,1)");
}

TEST_CASE("root operators on the crystal of e_0") {
    const Weight bE0 = Weight::epsilon(TypeTag::B, 0);
    CHECK(root_f(0, straight_path(bE0)) == pi0());
    CHECK(root_f(0, pi0()) == straight_path(-bE0));
    CHECK(root_e(0, pi0()) == straight_path(bE0));
    CHECK_FALSE(root_e(0, straight_path(bE0)).has_value());
    const Weight cE0 = Weight::epsilon(TypeTag::C, 0);
    CHECK(root_f(0, straight_path(cE0)) == straight_path(-cE0));
    CHECK(root_f(1, straight_path(Weight::epsilon(TypeTag::C, 1))) == straight_path(cE0));
    CHECK_FALSE(root_f(1, straight_path(cE0)).has_value());
    const Weight dE0 = Weight::epsilon(TypeTag::D, 0);
    CHECK(root_f(0, straight_path(dE0)) == straight_path(Weight::epsilon(TypeTag::D, 1, -1)));
}

TEST_CASE("eps and phi") {
    CHECK(eps_phi(0, straight_path(Weight::epsilon(TypeTag::C, 0))) == std::pair{0, 1});
    CHECK(eps_phi(0, pi0()) == std::pair{1, 1});
    for (TypeTag t : kTypes) {
        const Weight lam = W(t, "0,1,1,3;3");
        for (int i = 0; i <= 4; ++i)
            CHECK(eps_phi(i, straight_path(lam)) == std::pair{0, static_cast<int>(pairing_h(lam, i).numerator())});
    }
}

TEST_CASE("Weyl group action") {
    CHECK(weyl_s(0, straight_path(Weight::epsilon(TypeTag::C, 0))) == straight_path(Weight::epsilon(TypeTag::C, 0, -1)));
    CHECK(weyl_s(2, straight_path(Weight::epsilon(TypeTag::C, 0))) == straight_path(Weight::epsilon(TypeTag::C, 0)));
    std::mt19937 rng(8);
    for (TypeTag t : kTypes)
        for (const std::string& s : {"0,1,1,2;2", "1,1,2;0", "1/2,1/2,3/2;3/2"}) {
            if (t == TypeTag::C && s[1] == '/') continue;
            const Weight lam = W(t, s);
            for (int k = 0; k < 10; ++k) {
                LSPath p = straight_path(lam);
                Weight w = lam;
                for (int step = 0; step < 6; ++step) {
                    const int i = static_cast<int>(rng() % 4);
                    const LSPath q = weyl_s(i, p);
                    CHECK(weyl_s(i, q) == p);
                    p = q;
                    w = reflect_simple(i, w);
                    CHECK(p == straight_path(w));
                }
            }
        }
}

TEST_CASE("LS path validation") {
    const Weight e0 = Weight::epsilon(TypeTag::B, 0);
    for (int n : {1, 2}) CHECK(validate_ls_path(pi0(), e0, n));
    CHECK(validate_ls_path(straight_path(e0), e0, 2));
    const LSPath third({-e0, e0}, {Rat(0), Rat(1, 3), Rat(1)});
    CHECK_FALSE(validate_ls_path(third, e0, 2));
    const LSPath wrong_order({e0, -e0}, {Rat(0), Rat(1, 2), Rat(1)});
    CHECK_FALSE(validate_ls_path(wrong_order, e0, 2));
    CHECK_THROWS_AS(validate_ls_path(straight_path(Weight::epsilon(TypeTag::B, 0, 2)), e0, 2), Error);
}

TEST_CASE("generated crystals satisfy the path axioms") {
    const std::vector<std::pair<TypeTag, std::string>> shapes = {
        {TypeTag::B, "1;0"}, {TypeTag::C, "1;0"}, {TypeTag::D, "1;0"},   {TypeTag::B, ";1/2"},
        {TypeTag::C, ";1"},  {TypeTag::D, ";1/2"}, {TypeTag::D, "-1/2;1/2"}, {TypeTag::B, "2;0"},
        {TypeTag::C, "2;0"}, {TypeTag::C, "1,1;0"}, {TypeTag::D, "1,1;0"},  {TypeTag::B, "0;1"},
    };
    for (const auto& [t, s] : shapes)
        for (int n = 1; n <= 3; ++n) {
            const Weight lam = W(t, s);
            const auto g = generate_crystal(lam, n);
            const OrbitOrder order(lam, n);
            const long long N = compute_N(lam);
            for (const LSPath& p : g.elements) {
                CHECK(validate_ls_path(p, order));
                for (const Rat& a : p.breaks()) CHECK(is_integer(a * Rat(N)));
                const Weight w = weight_of(p);
                CHECK(w.tail2() == lam.tail2());
                for (int i = 0; i <= n; ++i) {
                    const auto [e, f] = eps_phi(i, p);
                    CHECK(std::pair{e, f} == string_lengths(i, p));
                    CHECK(f - e == pairing_h2(w, i) / 2);
                    if (auto q = root_f(i, p)) {
                        CHECK(root_e(i, *q) == p);
                        CHECK(weight_of(*q) == w - simple_root(t, i));
                    }
                    if (auto q = root_e(i, p)) {
                        CHECK(root_f(i, *q) == p);
                        CHECK(weight_of(*q) == w + simple_root(t, i));
                    }
                }
            }
        }
}
