#include "lsinf/crystal.hpp"

namespace lsinf {

std::optional<TensorElt> tensor_e(int i, const TensorElt& b) {
    const int phi1 = string_lengths(i, b.left).second;
    const int eps2 = string_lengths(i, b.right).first;
    if (phi1 >= eps2) {
        auto l = root_e(i, b.left);
        if (!l) return std::nullopt;
        return TensorElt{*l, b.right};
    }
    auto r = root_e(i, b.right);
    if (!r) return std::nullopt;
    return TensorElt{b.left, *r};
}

std::optional<TensorElt> tensor_f(int i, const TensorElt& b) {
    const int phi1 = string_lengths(i, b.left).second;
    const int eps2 = string_lengths(i, b.right).first;
    if (phi1 > eps2) {
        auto l = root_f(i, b.left);
        if (!l) return std::nullopt;
        return TensorElt{*l, b.right};
    }
    auto r = root_f(i, b.right);
    if (!r) return std::nullopt;
    return TensorElt{b.left, *r};
}

std::pair<int, int> eps_phi(int i, const TensorElt& b) {
    int e = 0, f = 0;
    for (auto x = tensor_e(i, b); x; x = tensor_e(i, *x)) ++e;
    for (auto x = tensor_f(i, b); x; x = tensor_f(i, *x)) ++f;
    return {e, f};
}

CrystalGraph<LSPath> generate_crystal(const Weight& lambda, int n) {
    return close_under_f(straight_path(j_dominant_rep(lambda, n).first), n);
}

CrystalGraph<TensorElt> generate_tensor_crystal(const Weight& lambda, const Weight& mu, int n) {
    const auto A = generate_crystal(lambda, n);
    const auto B = generate_crystal(mu, n);
    if (A.elements.size() * B.elements.size() > size_cap()) throw SizeCap("tensor product exceeds the size cap");
    CrystalGraph<TensorElt> g;
    for (const LSPath& a : A.elements)
        for (const LSPath& b : B.elements) {
            g.index.emplace(TensorElt{a, b}, static_cast<int>(g.elements.size()));
            g.elements.push_back({a, b});
        }
    for (std::size_t k = 0; k < g.elements.size(); ++k)
        for (int i = 0; i <= n; ++i)
            if (auto nx = tensor_f(i, g.elements[k])) g.edges.emplace_back(static_cast<int>(k), i, g.index.at(*nx));
    return g;
}

namespace {

// Any maximal b1 (x) b2 has b1 maximal, and B_[n](lambda) has exactly one maximal element,
// so it suffices to scan the right factor.
std::vector<TensorElt> maximal_over_right(const Weight& lambda, const Weight& mu, int n) {
    const LSPath top = straight_path(j_dominant_rep(lambda, n).first);
    std::vector<TensorElt> out;
    for (const LSPath& eta : generate_crystal(mu, n).elements) {
        TensorElt b{top, eta};
        if (is_maximal(b, n)) out.push_back(std::move(b));
    }
    return out;
}

} // namespace

DecompResult decompose_brute(const Weight& lambda, const Weight& mu, int n) {
    DecompResult r;
    r.source = "brute";
    r.rank = n;
    for (const TensorElt& b : maximal_over_right(lambda, mu, n)) r.add(wt(b), 1);
    return r;
}

std::vector<TensorElt> maximal_elements_of_weight(const Weight& lambda, const Weight& mu, int n, const Weight& nu) {
    std::vector<TensorElt> out;
    for (TensorElt& b : maximal_over_right(lambda, mu, n))
        if (wt(b) == nu) out.push_back(std::move(b));
    return out;
}

std::vector<TensorElt> maximal_elements_full(const Weight& lambda, const Weight& mu, int n) {
    const auto A = generate_crystal(lambda, n);
    const auto B = generate_crystal(mu, n);
    std::vector<TensorElt> out;
    for (const LSPath& a : A.elements)
        for (const LSPath& b : B.elements) {
            TensorElt t{a, b};
            if (is_maximal(t, n)) out.push_back(std::move(t));
        }
    return out;
}

} // namespace lsinf
