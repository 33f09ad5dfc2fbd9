#include "lsinf/weyl.hpp"

#include "lsinf/config.hpp"
#include "lsinf/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace lsinf {

Weight reflect_simple(int i, const Weight& w) {
    require(i >= 0, "reflection index must be nonnegative");
    if (i == 0 && w.tag() == TypeTag::D) {
        const int x0 = w.c2(0), x1 = w.c2(1);
        return w.with_coord2(0, -x1).with_coord2(1, -x0);
    }
    if (i == 0) return w.with_coord2(0, -w.c2(0));
    const int a = w.c2(i - 1), b = w.c2(i);
    return w.with_coord2(i - 1, b).with_coord2(i, a);
}

RationalWeight reflect_simple(int i, const RationalWeight& w) {
    require(i >= 0, "reflection index must be nonnegative");
    const int n = std::max(static_cast<int>(w.head().size()), i + 1);
    std::vector<Rat> h(n);
    for (int j = 0; j < n; ++j) h[j] = w.coord(j);
    if (i == 0 && w.tag() == TypeTag::D) {
        const Rat x0 = w.coord(0), x1 = w.coord(1);
        h[0] = -x1;
        h[1] = -x0;
    } else if (i == 0) {
        h[0] = -h[0];
    } else {
        std::swap(h[i - 1], h[i]);
    }
    return RationalWeight(w.tag(), std::move(h), w.tail());
}

std::vector<Root> positive_roots(TypeTag tag, int n) {
    require(n >= 0, "rank must be nonnegative");
    std::vector<Root> out;
    for (int j = 0; j <= n; ++j) {
        if (tag == TypeTag::B) out.push_back({Root::Kind::Short, j});
        if (tag == TypeTag::C) out.push_back({Root::Kind::Long, j});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j) {
            out.push_back({Root::Kind::Diff, j, i});
            out.push_back({Root::Kind::Sum, j, i});
        }
    return out;
}

int pairing_root2(const Weight& w, const Root& b) {
    switch (b.kind) {
    case Root::Kind::Short: return 2 * w.c2(b.j);
    case Root::Kind::Long: return w.c2(b.j);
    case Root::Kind::Diff: return w.c2(b.i) - w.c2(b.j);
    case Root::Kind::Sum: return w.c2(b.i) + w.c2(b.j);
    }
    return 0;
}

Rat pairing_root(const Weight& w, const Root& b) { return Rat(pairing_root2(w, b), 2); }

Rat pairing_root(const RationalWeight& w, const Root& b) {
    switch (b.kind) {
    case Root::Kind::Short: return w.coord(b.j) * 2;
    case Root::Kind::Long: return w.coord(b.j);
    case Root::Kind::Diff: return w.coord(b.i) - w.coord(b.j);
    case Root::Kind::Sum: return w.coord(b.i) + w.coord(b.j);
    }
    return Rat(0);
}

Weight reflect_root(const Weight& w, const Root& b) {
    switch (b.kind) {
    case Root::Kind::Short:
    case Root::Kind::Long: return w.with_coord2(b.j, -w.c2(b.j));
    case Root::Kind::Diff: return w.with_coord2(b.j, w.c2(b.i)).with_coord2(b.i, w.c2(b.j));
    case Root::Kind::Sum: return w.with_coord2(b.j, -w.c2(b.i)).with_coord2(b.i, -w.c2(b.j));
    }
    return w;
}

Weight root_weight(TypeTag tag, const Root& b) {
    switch (b.kind) {
    case Root::Kind::Short: return Weight::epsilon(tag, b.j);
    case Root::Kind::Long: return Weight::epsilon(tag, b.j, 2);
    case Root::Kind::Diff: return Weight::epsilon(tag, b.i) - Weight::epsilon(tag, b.j);
    case Root::Kind::Sum: return Weight::epsilon(tag, b.i) + Weight::epsilon(tag, b.j);
    }
    return Weight::zero(tag);
}

std::vector<Weight> orbit(const Weight& w, int n) {
    require(n >= 0, "rank must be nonnegative");
    const std::size_t cap = size_cap();
    std::set<Weight> seen{w};
    std::deque<Weight> todo{w};
    while (!todo.empty()) {
        const Weight cur = todo.front();
        todo.pop_front();
        for (int i = 0; i <= n; ++i) {
            Weight nx = reflect_simple(i, cur);
            if (seen.insert(nx).second) {
                if (seen.size() > cap) throw Error("OrbitTooLarge", "orbit exceeds the size cap");
                todo.push_back(std::move(nx));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

OrbitOrder::OrbitOrder(const Weight& lambda, int n) : n_(n), elems_(orbit(lambda, n)) {
    const int V = static_cast<int>(elems_.size());
    for (int k = 0; k < V; ++k) index_[elems_[k]] = k;
    out_.resize(V);
    const auto roots = positive_roots(lambda.tag(), n);
    for (int k = 0; k < V; ++k)
        for (const Root& b : roots) {
            const int p = pairing_root2(elems_[k], b);
            if (p < 0) out_[k].push_back({index_.at(reflect_root(elems_[k], b)), p});
        }
    // Longest paths in the DAG, memoized per source.
    dist_.assign(V, {});
    std::function<const std::vector<int>&(int)> longest = [&](int u) -> const std::vector<int>& {
        if (!dist_[u].empty()) return dist_[u];
        std::vector<int> d(V, -1);
        d[u] = 0;
        for (const Edge& e : out_[u]) {
            const std::vector<int>& sub = longest(e.to);
            for (int v = 0; v < V; ++v)
                if (sub[v] >= 0) d[v] = std::max(d[v], sub[v] + 1);
        }
        dist_[u] = std::move(d);
        return dist_[u];
    };
    for (int k = 0; k < V; ++k) longest(k);
}

int OrbitOrder::idx(const Weight& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw Error("NotInOrbit", "weight is not in the W_[n]-orbit");
    return it->second;
}

bool OrbitOrder::greater(const Weight& mu, const Weight& nu) const { return dist(mu, nu) >= 1; }

int OrbitOrder::dist(const Weight& mu, const Weight& nu) const { return dist_[idx(mu)][idx(nu)]; }

bool OrbitOrder::has_a_chain(const Weight& mu, const Weight& nu, const Rat& a) const {
    const int s = idx(mu), t = idx(nu);
    if (s == t) return false;
    std::vector<char> seen(elems_.size(), 0);
    std::deque<int> todo{s};
    seen[s] = 1;
    while (!todo.empty()) {
        const int u = todo.front();
        todo.pop_front();
        for (const Edge& e : out_[u]) {
            if (dist_[u][e.to] != 1 || seen[e.to]) continue;
            if (!is_integer(a * Rat(e.pair2, 2))) continue;
            if (e.to == t) return true;
            seen[e.to] = 1;
            todo.push_back(e.to);
        }
    }
    return false;
}

} // namespace lsinf
