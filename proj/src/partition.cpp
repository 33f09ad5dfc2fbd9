#include "lsinf/partition.hpp"

#include "lsinf/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace lsinf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        require(parts_[k] > 0, "partition parts must be nonnegative");
        require(k == 0 || parts_[k - 1] >= parts_[k], "partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition conjugate(const Partition& rho) {
    std::vector<int> out(rho.empty() ? 0 : rho[0]);
    for (int j = 0; j < static_cast<int>(out.size()); ++j) {
        int c = 0;
        while (c < rho.length() && rho[c] > j) ++c;
        out[j] = c;
    }
    return Partition(std::move(out));
}

Partition iota_insert(int L, const Partition& rho) {
    require(L >= 0, "iota_insert needs L >= 0");
    if (L == 0) return rho;
    std::vector<int> p = rho.parts();
    p.insert(std::upper_bound(p.begin(), p.end(), L, std::greater<int>()), L);
    return Partition(std::move(p));
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int k = 0; k < inner.length(); ++k)
        if (inner[k] > outer[k]) return false;
    return true;
}

bool is_horizontal_strip(const SkewShape& s) {
    require(contains(s.outer, s.inner), "malformed skew shape");
    for (int k = 0; k + 1 < s.outer.length(); ++k)
        if (s.outer[k + 1] > s.inner[k]) return false;
    return true;
}

bool is_vertical_strip(const SkewShape& s) {
    require(contains(s.outer, s.inner), "malformed skew shape");
    return is_horizontal_strip({conjugate(s.outer), conjugate(s.inner)});
}

namespace {

struct LrSearch {
    const Partition& inner;
    const Partition& outer;
    std::vector<int> content;
    std::vector<std::vector<int>> fill; // fill[r][c - inner[r]]
    std::vector<int> used;
    std::int64_t count = 0;

    int above(int r, int c) const {
        if (r == 0 || c < inner[r - 1]) return 0;
        return fill[r - 1][c - inner[r - 1]];
    }

    void cell(int r, int c) {
        if (r == outer.length()) {
            ++count;
            return;
        }
        if (c < inner[r]) {
            cell(r + 1, outer[r + 1] - 1);
            return;
        }
        // Reading right to left, entries are weakly decreasing along a row.
        int hi = (c + 1 < outer[r]) ? fill[r][c + 1 - inner[r]] : static_cast<int>(content.size());
        int lo = above(r, c) + 1;
        for (int k = lo; k <= hi; ++k) {
            if (used[k - 1] >= content[k - 1]) continue;
            if (k > 1 && used[k - 1] + 1 > used[k - 2]) continue;
            ++used[k - 1];
            fill[r][c - inner[r]] = k;
            cell(r, c - 1);
            --used[k - 1];
        }
        fill[r][c - inner[r]] = 0;
    }
};

} // namespace

std::int64_t lr_coefficient(const Partition& rho, const Partition& kappa, const Partition& omega) {
    if (omega.size() != rho.size() + kappa.size()) return 0;
    if (!contains(omega, rho) || !contains(omega, kappa)) return 0;
    if (kappa.empty()) return 1;
    LrSearch s{rho, omega, kappa.parts(), {}, std::vector<int>(kappa.length(), 0)};
    s.fill.resize(omega.length());
    for (int r = 0; r < omega.length(); ++r) s.fill[r].assign(omega[r] - rho[r], 0);
    s.cell(0, omega[0] - 1);
    return s.count;
}

std::vector<Partition> partitions_inside(const Partition& outer, int size) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (row >= outer.length()) return;
        int cap = std::min(outer[row], left);
        if (row > 0) cap = std::min(cap, cur[row - 1]);
        for (int v = cap; v >= 1; --v) {
            cur.push_back(v);
            rec(row + 1, left - v);
            cur.pop_back();
        }
    };
    rec(0, size);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    require(n >= 0, "partitions_of needs n >= 0");
    return partitions_inside(Partition(std::vector<int>(n, n > 0 ? n : 0)), n);
}

std::vector<Partition> vertical_strip_removals(const Partition& outer) {
    std::vector<Partition> out;
    const Partition t = conjugate(outer);
    std::vector<int> cur(t.length());
    std::function<void(int)> rec = [&](int j) {
        if (j == t.length()) {
            out.push_back(conjugate(Partition(cur)));
            return;
        }
        // Column j may lose at most the boxes that keep columns decreasing and the strip horizontal.
        int lo = (j + 1 < t.length()) ? t[j + 1] : 0;
        int hi = t[j];
        if (j > 0) hi = std::min(hi, cur[j - 1]);
        for (int v = hi; v >= lo; --v) {
            cur[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace lsinf
