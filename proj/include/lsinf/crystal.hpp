#pragma once

#include "lsinf/config.hpp"
#include "lsinf/decomp_result.hpp"
#include "lsinf/error.hpp"
#include "lsinf/lspath.hpp"

#include <compare>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace lsinf {

struct TensorElt {
    LSPath left;
    LSPath right;
    auto operator<=>(const TensorElt&) const = default;
    bool operator==(const TensorElt&) const = default;
};

std::optional<TensorElt> tensor_e(int i, const TensorElt& b);
std::optional<TensorElt> tensor_f(int i, const TensorElt& b);

// Uniform element interface used by the generic algorithms below.
inline std::optional<LSPath> apply_e(int i, const LSPath& b) { return root_e(i, b); }
inline std::optional<LSPath> apply_f(int i, const LSPath& b) { return root_f(i, b); }
inline std::optional<TensorElt> apply_e(int i, const TensorElt& b) { return tensor_e(i, b); }
inline std::optional<TensorElt> apply_f(int i, const TensorElt& b) { return tensor_f(i, b); }
inline Weight wt(const LSPath& b) { return weight_of(b); }
inline Weight wt(const TensorElt& b) { return weight_of(b.left) + weight_of(b.right); }
std::pair<int, int> eps_phi(int i, const TensorElt& b);

template <class Elt>
Elt weyl_s_generic(int i, const Elt& b) {
    const int k2 = pairing_h2(wt(b), i);
    require(k2 % 2 == 0, "weight of a crystal element must pair integrally");
    const int k = k2 / 2;
    Elt cur = b;
    for (int s = 0; s < (k >= 0 ? k : -k); ++s) {
        auto nx = k >= 0 ? apply_f(i, cur) : apply_e(i, cur);
        require(nx.has_value(), "Weyl group action left the crystal");
        cur = *nx;
    }
    return cur;
}
inline TensorElt weyl_s(int i, const TensorElt& b) { return weyl_s_generic(i, b); }

template <class Elt>
struct CrystalGraph {
    std::vector<Elt> elements;               // element 0 is the generating maximal element
    std::vector<std::tuple<int, int, int>> edges; // (source, i, target) with f_i(source) = target
    std::map<Elt, int> index;
};

// Closure of {top} under f_i, i in [0, n], in breadth-first order.
template <class Elt>
CrystalGraph<Elt> close_under_f(const Elt& top, int n) {
    const std::size_t cap = size_cap();
    CrystalGraph<Elt> g;
    g.elements.push_back(top);
    g.index[top] = 0;
    for (std::size_t k = 0; k < g.elements.size(); ++k) {
        for (int i = 0; i <= n; ++i) {
            auto nx = apply_f(i, g.elements[k]);
            if (!nx) continue;
            auto [it, fresh] = g.index.emplace(*nx, static_cast<int>(g.elements.size()));
            if (fresh) {
                if (g.elements.size() >= cap) throw SizeCap("crystal exceeds the size cap");
                g.elements.push_back(*nx);
            }
            g.edges.emplace_back(static_cast<int>(k), i, it->second);
        }
    }
    return g;
}

// B_[n](lambda), generated from pi_{lambda_[n]}.
CrystalGraph<LSPath> generate_crystal(const Weight& lambda, int n);
// The full tensor product B_[n](lambda) x B_[n](mu) with its f-edges.
CrystalGraph<TensorElt> generate_tensor_crystal(const Weight& lambda, const Weight& mu, int n);

template <class Elt>
bool is_maximal(const Elt& b, int n) {
    for (int i = 0; i <= n; ++i)
        if (apply_e(i, b)) return false;
    return true;
}

template <class Elt>
bool is_minimal(const Elt& b, int n) {
    for (int i = 0; i <= n; ++i)
        if (apply_f(i, b)) return false;
    return true;
}

// Index-window versions for Levi subalgebras [lo, hi].
template <class Elt>
bool is_maximal_in(const Elt& b, int lo, int hi) {
    for (int i = lo; i <= hi; ++i)
        if (apply_e(i, b)) return false;
    return true;
}

template <class Elt>
bool is_minimal_in(const Elt& b, int lo, int hi) {
    for (int i = lo; i <= hi; ++i)
        if (apply_f(i, b)) return false;
    return true;
}

template <class Elt>
bool is_extremal_at_rank(const Elt& b, int n) {
    const std::size_t cap = size_cap();
    std::set<Elt> seen{b};
    std::deque<Elt> todo{b};
    while (!todo.empty()) {
        const Elt c = todo.front();
        todo.pop_front();
        const Weight w = wt(c);
        for (int i = 0; i <= n; ++i) {
            const int k = pairing_h2(w, i);
            if (k >= 0 && apply_e(i, c)) return false;
            if (k <= 0 && apply_f(i, c)) return false;
            Elt s = weyl_s_generic(i, c);
            if (seen.insert(s).second) {
                if (seen.size() > cap) throw SizeCap("Weyl orbit of the element exceeds the size cap");
                todo.push_back(std::move(s));
            }
        }
    }
    return true;
}

DecompResult decompose_brute(const Weight& lambda, const Weight& mu, int n);
std::vector<TensorElt> maximal_elements_of_weight(const Weight& lambda, const Weight& mu, int n, const Weight& nu);
// All maximal elements of the full product, found without assuming the left factor is pi_lambda.
std::vector<TensorElt> maximal_elements_full(const Weight& lambda, const Weight& mu, int n);

// The connected component of top (closed under f) is isomorphic to target via top -> target.elements[0].
template <class Elt>
bool component_isomorphic(const Elt& top, int n, const CrystalGraph<LSPath>& target) {
    std::map<Elt, int> to;
    std::vector<Elt> order{top};
    to[top] = 0;
    std::vector<char> hit(target.elements.size(), 0);
    hit[0] = 1;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Elt x = order[k];
        const int tx = to.at(x);
        const LSPath& y = target.elements[tx];
        for (int i = 0; i <= n; ++i) {
            auto fx = apply_f(i, x);
            auto fy = root_f(i, y);
            if (fx.has_value() != fy.has_value()) return false;
            if (apply_e(i, x).has_value() != root_e(i, y).has_value()) return false;
            if (!fx) continue;
            const int ty = target.index.at(*fy);
            auto it = to.find(*fx);
            if (it == to.end()) {
                if (hit[ty]) return false;
                hit[ty] = 1;
                to[*fx] = ty;
                order.push_back(*fx);
            } else if (it->second != ty) {
                return false;
            }
        }
    }
    if (order.size() != target.elements.size()) return false;
    // e-edges must agree once the whole map is known.
    for (const auto& [x, tx] : to)
        for (int i = 0; i <= n; ++i) {
            auto ex = apply_e(i, x);
            if (!ex) continue;
            auto ey = root_e(i, target.elements[tx]);
            if (!ey || !to.count(*ex) || to.at(*ex) != target.index.at(*ey)) return false;
        }
    return true;
}

} // namespace lsinf
