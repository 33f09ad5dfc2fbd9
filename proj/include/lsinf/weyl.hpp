#pragma once

#include "lsinf/weight.hpp"

#include <map>
#include <vector>

namespace lsinf {

Weight reflect_simple(int i, const Weight& w);
RationalWeight reflect_simple(int i, const RationalWeight& w);

struct Root {
    // Short: e_j (B).  Long: 2e_j (C).  Diff: -e_j + e_i.  Sum: e_j + e_i.  Always j < i for Diff/Sum.
    enum class Kind { Short, Long, Diff, Sum };
    Kind kind;
    int j;
    int i = -1;
    auto operator<=>(const Root&) const = default;
};

std::vector<Root> positive_roots(TypeTag tag, int n);
// 2 * <w, beta^vee>
int pairing_root2(const Weight& w, const Root& beta);
Rat pairing_root(const Weight& w, const Root& beta);
Rat pairing_root(const RationalWeight& w, const Root& beta);
Weight reflect_root(const Weight& w, const Root& beta);
// beta as a weight
Weight root_weight(TypeTag tag, const Root& beta);

// W_[n] w, sorted.
std::vector<Weight> orbit(const Weight& w, int n);

// The Bruhat-type order on W_[n] lambda: mu > nu when a chain of reflections in
// positive roots with negative pairing leads from mu to nu.
class OrbitOrder {
public:
    OrbitOrder(const Weight& lambda, int n);

    int rank() const { return n_; }
    const std::vector<Weight>& elements() const { return elems_; }
    bool contains(const Weight& w) const { return index_.count(w) != 0; }
    bool greater(const Weight& mu, const Weight& nu) const;
    // Longest chain length from mu down to nu; 0 when mu == nu, -1 when not comparable.
    int dist(const Weight& mu, const Weight& nu) const;
    // An a-chain from mu to nu exists.
    bool has_a_chain(const Weight& mu, const Weight& nu, const Rat& a) const;

private:
    struct Edge {
        int to;
        int pair2; // 2 * <source, beta^vee>, negative
    };
    int idx(const Weight& w) const;
    int n_;
    std::vector<Weight> elems_;
    std::map<Weight, int> index_;
    std::vector<std::vector<Edge>> out_;
    std::vector<std::vector<int>> dist_;
};

} // namespace lsinf
