#pragma once

// Standard paths in the poset N: a standard path of length n is a saturated
// chain () = P_0 < P_1 < ... < P_n with weight(P_i) = i.
//
// This module is the project's ground truth: exhaustive enumeration, the
// path <-> tableau bijection, and exact endpoint/statistics counting. The
// depth-first walker generates moves directly (without the covers() set
// machinery) so the two counting routes stay independent.

#include "npaths/composition.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace npaths {

using StandardPath = std::vector<Composition>;

inline bool is_standard_path(const StandardPath& path) {
    if (path.empty() || !path.front().empty()) return false;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (path[i + 1].weight() != static_cast<int>(i) + 1) return false;
        auto cs = covers(Poset::N, path[i]);
        if (!std::binary_search(cs.begin(), cs.end(), path[i + 1])) return false;
    }
    return true;
}

inline std::string path_str(const StandardPath& path) {
    std::ostringstream os;
    for (size_t i = 0; i < path.size(); ++i) {
        if (i) os << " -> ";
        os << path[i].str();
    }
    return os.str();
}

// All standard paths of length n, depth-first with children in composition
// order, so the listing is reproducible.
inline std::vector<StandardPath> enumerate_paths(int n) {
    if (n < 0) throw std::invalid_argument("path length must be >= 0");
    std::vector<StandardPath> out;
    StandardPath chain{Composition{}};
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(chain.size()) == n + 1) {
            out.push_back(chain);
            return;
        }
        for (const Composition& q : covers(Poset::N, chain.back())) {
            chain.push_back(q);
            self(self);
            chain.pop_back();
        }
    };
    rec(rec);
    return out;
}

// Streaming depth-first walk over all standard paths of length <= max_len:
// visit(parts, len) fires once per path, at its endpoint, with the endpoint's
// parts. Moves are generated in place (increment each part; insert 1 on the
// left; insert 1 on the right unless the composition is all ones, where the
// two insertions coincide).
template <class Fn>
void walk_standard_paths(int max_len, Fn&& visit) {
    std::vector<int> parts;
    int non_ones = 0;
    auto rec = [&](auto&& self, int len) -> void {
        visit(parts, len);
        if (len == max_len) return;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] == 1) ++non_ones;
            ++parts[i];
            self(self, len + 1);
            --parts[i];
            if (parts[i] == 1) --non_ones;
        }
        parts.insert(parts.begin(), 1);
        self(self, len + 1);
        parts.erase(parts.begin());
        if (non_ones > 0) {  // all-ones (and empty): right insert duplicates left
            parts.push_back(1);
            self(self, len + 1);
            parts.pop_back();
        }
    };
    rec(rec, 0);
}

using EndpointCounts = std::map<Composition, Int>;
using StatsCounts = std::map<std::pair<int, int>, Int>;

namespace detail {

// weight-n composition <-> bit mask of its internal boundaries in 1..n-1
inline uint32_t boundary_mask(const std::vector<int>& parts) {
    uint32_t mask = 0;
    int cum = 0;
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        cum += parts[i];
        mask |= uint32_t{1} << (cum - 1);
    }
    return mask;
}

inline Composition composition_from_mask(int n, uint32_t mask) {
    std::vector<int> parts;
    int prev = 0;
    for (int b = 1; b < n; ++b) {
        if (mask & (uint32_t{1} << (b - 1))) {
            parts.push_back(b - prev);
            prev = b;
        }
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(parts);
}

}  // namespace detail

// Exhaustive per-endpoint counts for every length 0..n_max in one sweep.
// This is the brute-force oracle the recurrences are checked against.
inline std::vector<EndpointCounts> brute_force_endpoint_levels(int n_max) {
    if (n_max < 0 || n_max > 20) throw std::invalid_argument("brute force bound out of range");
    std::vector<std::vector<long long>> tally(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) tally[static_cast<size_t>(n)].assign(n == 0 ? 1 : (size_t{1} << (n - 1)), 0);
    walk_standard_paths(n_max, [&](const std::vector<int>& parts, int len) {
        ++tally[static_cast<size_t>(len)][detail::boundary_mask(parts)];
    });
    std::vector<EndpointCounts> levels(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        for (size_t mask = 0; mask < tally[static_cast<size_t>(n)].size(); ++mask)
            levels[static_cast<size_t>(n)][detail::composition_from_mask(n, static_cast<uint32_t>(mask))] =
                tally[static_cast<size_t>(n)][mask];
    return levels;
}

inline EndpointCounts brute_force_endpoint_counts(int n) { return brute_force_endpoint_levels(n).back(); }

// Dynamic program over the deduplicated cover edges:
//   count(()) = 1,  count(P) = sum over Q with P in covers(Q) of count(Q).
// The all-ones insertion collision never double-counts because covers() is a
// set. height_bound = 0 means unbounded; a positive bound restricts the
// whole walk, which is safe because parts never shrink along a path.
inline std::vector<EndpointCounts> endpoint_count_levels(int n_max, int height_bound = 0) {
    if (n_max < 0) throw std::invalid_argument("length must be >= 0");
    std::vector<EndpointCounts> levels(static_cast<size_t>(n_max) + 1);
    levels[0][Composition{}] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& [q, c] : levels[static_cast<size_t>(n - 1)])
            for (const Composition& r : covers(Poset::N, q)) {
                if (height_bound > 0 && r.height() > height_bound) continue;
                levels[static_cast<size_t>(n)][r] += c;
            }
    return levels;
}

inline EndpointCounts count_by_endpoint(int n, int height_bound = 0) {
    return endpoint_count_levels(n, height_bound).back();
}

// Aggregate by (i, j) = (#parts of size 1, #parts of size >= 2).
inline StatsCounts count_by_stats(int n, int height_bound = 0) {
    StatsCounts out;
    for (const auto& [p, c] : count_by_endpoint(n, height_bound)) out[{p.ones_count(), p.big_count()}] += c;
    return out;
}

// ------------------------------------------------------------------ tableaux

// Columns of labels, bottom to top; the labels of a size-n tableau are a
// permutation of 1..n and every column increases upward.
struct Tableau {
    std::vector<std::vector<int>> columns;

    int size() const {
        int n = 0;
        for (const auto& c : columns) n += static_cast<int>(c.size());
        return n;
    }
    Composition shape() const {
        std::vector<int> parts;
        parts.reserve(columns.size());
        for (const auto& c : columns) parts.push_back(static_cast<int>(c.size()));
        return Composition(parts);
    }
    std::vector<int> bottom_row() const {
        std::vector<int> row;
        row.reserve(columns.size());
        for (const auto& c : columns) row.push_back(c.front());
        return row;
    }

    void validate() const {
        int n = size();
        std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
        for (const auto& col : columns) {
            if (col.empty()) throw std::invalid_argument("tableau has an empty column");
            for (size_t i = 0; i < col.size(); ++i) {
                int label = col[i];
                if (label < 1 || label > n || seen[static_cast<size_t>(label)])
                    throw std::invalid_argument("tableau labels must be a permutation of 1..n");
                seen[static_cast<size_t>(label)] = true;
                if (i > 0 && col[i] <= col[i - 1])
                    throw std::invalid_argument("tableau columns must increase bottom to top");
            }
        }
    }

    bool operator==(const Tableau&) const = default;

    std::string str() const {
        std::ostringstream os;
        for (const auto& col : columns) {
            os << "[";
            for (size_t i = 0; i < col.size(); ++i) {
                if (i) os << " ";
                os << col[i];
            }
            os << "]";
        }
        return os.str();
    }
};

struct TableauError : std::runtime_error {
    enum class Kind { IllegalPeel, NonCanonical };

    TableauError(Kind k, int l, const std::string& msg) : std::runtime_error(msg), kind(k), label(l) {}

    Kind kind;
    int label;
};

// Label the cells of the endpoint diagram in the order they appear along the
// path. When both P_{m-1} and P_m are all ones the new column counts as a
// left insertion.
inline Tableau path_to_tableau(const StandardPath& path) {
    if (path.empty() || !path.front().empty()) throw std::invalid_argument("standard paths start at ()");
    Tableau t;
    for (size_t m = 1; m < path.size(); ++m) {
        const std::vector<int>& prev = path[m - 1].parts();
        const std::vector<int>& cur = path[m].parts();
        int label = static_cast<int>(m);
        if (cur.size() == prev.size() + 1) {
            bool left = cur.front() == 1 && std::equal(prev.begin(), prev.end(), cur.begin() + 1);
            bool right = cur.back() == 1 && std::equal(prev.begin(), prev.end(), cur.begin());
            if (left)  // covers the all-ones tie, where left wins by convention
                t.columns.insert(t.columns.begin(), {label});
            else if (right)
                t.columns.push_back({label});
            else
                throw std::invalid_argument("not a cover step at index " + std::to_string(m));
        } else if (cur.size() == prev.size()) {
            size_t i = 0;
            while (i < cur.size() && cur[i] == prev[i]) ++i;
            if (i == cur.size() || cur[i] != prev[i] + 1 ||
                !std::equal(prev.begin() + static_cast<long>(i) + 1, prev.end(), cur.begin() + static_cast<long>(i) + 1))
                throw std::invalid_argument("not a cover step at index " + std::to_string(m));
            t.columns[i].push_back(label);
        } else {
            throw std::invalid_argument("weights must increase by one along a standard path");
        }
    }
    return t;
}

// Inverse construction: peel labels n, n-1, ..., 1. Label m must sit on top
// of a column of height >= 2 (undo an increment) or be a height-1 column at
// the far left or far right (undo an insertion); anything else throws
// IllegalPeel. A successful peel is re-labelled through path_to_tableau and
// must reproduce the input exactly, otherwise the tableau violates the
// left-insertion convention and NonCanonical is thrown.
inline StandardPath tableau_to_path(const Tableau& tableau) {
    tableau.validate();
    int n = tableau.size();
    std::vector<std::vector<int>> cols = tableau.columns;
    StandardPath path(static_cast<size_t>(n) + 1);
    auto shape_of = [&]() {
        std::vector<int> parts;
        parts.reserve(cols.size());
        for (const auto& c : cols) parts.push_back(static_cast<int>(c.size()));
        return Composition(parts);
    };
    path[static_cast<size_t>(n)] = shape_of();
    for (int m = n; m >= 1; --m) {
        size_t ci = cols.size();
        for (size_t i = 0; i < cols.size(); ++i)
            if (cols[i].back() == m) {
                ci = i;
                break;
            }
        if (ci == cols.size())
            throw TableauError(TableauError::Kind::IllegalPeel, m,
                               "label " + std::to_string(m) + " is not on top of any column");
        if (cols[ci].size() >= 2)
            cols[ci].pop_back();
        else if (ci == 0 || ci + 1 == cols.size())
            cols.erase(cols.begin() + static_cast<long>(ci));
        else
            throw TableauError(TableauError::Kind::IllegalPeel, m,
                               "label " + std::to_string(m) + " sits in a height-1 middle column: " +
                                   "no insertion away from the ends exists in this poset");
        path[static_cast<size_t>(m) - 1] = shape_of();
    }
    if (path_to_tableau(path) != tableau)
        throw TableauError(TableauError::Kind::NonCanonical, 0,
                           "tableau is not the canonical labelling of its peel (all-ones steps label leftward)");
    return path;
}

// Necessary (not sufficient) membership test: whenever the labels 1..k all
// lie on the bottom row in contiguous columns, they must read k, k-1, ..., 1.
inline bool check_necessary_condition(const Tableau& tableau) {
    tableau.validate();
    std::vector<int> bottom = tableau.bottom_row();
    int w = static_cast<int>(bottom.size());
    std::vector<int> pos(static_cast<size_t>(tableau.size()) + 1, -1);
    for (int i = 0; i < w; ++i) pos[static_cast<size_t>(bottom[static_cast<size_t>(i)])] = i;
    for (int k = 1; k <= w; ++k) {
        int lo = w, hi = -1;
        bool all_on_bottom = true;
        for (int v = 1; v <= k; ++v) {
            if (static_cast<size_t>(v) >= pos.size() || pos[static_cast<size_t>(v)] < 0) {
                all_on_bottom = false;
                break;
            }
            lo = std::min(lo, pos[static_cast<size_t>(v)]);
            hi = std::max(hi, pos[static_cast<size_t>(v)]);
        }
        if (!all_on_bottom || hi - lo + 1 != k) continue;
        for (int v = 1; v <= k; ++v)
            if (bottom[static_cast<size_t>(lo + (k - v))] != v) return false;
    }
    return true;
}

}  // namespace npaths
