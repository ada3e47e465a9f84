#pragma once

// Compositions (finite sequences of positive integers) and the cover
// relations of the two posets built on them:
//
//   N     covers add 1 to a part, or insert a part of size 1 at the far
//         left or far right only;
//   Gamma additionally allows inserting a part of size 1 anywhere.
//
// Compositions order by (weight, lexicographic parts), which fixes every
// enumeration and output order in the project.

#include "npaths/numbers.hpp"

#include <algorithm>
#include <compare>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace npaths {

class Composition {
  public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int width() const { return length(); }
    bool empty() const { return parts_.empty(); }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }
    int height() const { return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end()); }

    bool all_ones() const {
        return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
    }
    int ones_count() const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1)); }
    int big_count() const { return length() - ones_count(); }

    Composition mirror() const { return Composition(std::vector<int>(parts_.rbegin(), parts_.rend())); }

    std::strong_ordering operator<=>(const Composition& o) const {
        if (auto c = weight() <=> o.weight(); c != 0) return c;
        return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end());
    }
    bool operator==(const Composition& o) const { return parts_ == o.parts_; }

    // "()" for the empty composition; digit string when all parts are <= 9,
    // dash-separated otherwise ("112" vs "1-10-2").
    std::string str() const {
        if (parts_.empty()) return "()";
        std::ostringstream os;
        bool digits = height() <= 9;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (!digits && i > 0) os << "-";
            os << parts_[i];
        }
        return os.str();
    }

  private:
    void validate() const {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }

    std::vector<int> parts_;
};

enum class Poset { N, Gamma };

// The deduplicated cover set of p, sorted. In N this has length(p)+2
// elements, except length(p)+1 for a nonempty all-ones p (the two
// insertions coincide) and 1 for the empty composition.
inline std::vector<Composition> covers(Poset poset, const Composition& p) {
    std::set<Composition> out;
    const std::vector<int>& v = p.parts();
    {
        std::vector<int> w;
        w.reserve(v.size() + 1);
        w.push_back(1);
        w.insert(w.end(), v.begin(), v.end());
        out.insert(Composition(w));
    }
    {
        std::vector<int> w = v;
        w.push_back(1);
        out.insert(Composition(w));
    }
    for (size_t i = 0; i < v.size(); ++i) {
        std::vector<int> w = v;
        ++w[i];
        out.insert(Composition(w));
    }
    if (poset == Poset::Gamma) {
        for (size_t i = 1; i < v.size(); ++i) {
            std::vector<int> w;
            w.reserve(v.size() + 1);
            w.insert(w.end(), v.begin(), v.begin() + static_cast<long>(i));
            w.push_back(1);
            w.insert(w.end(), v.begin() + static_cast<long>(i), v.end());
            out.insert(Composition(w));
        }
    }
    return {out.begin(), out.end()};
}

// a <= b in the chosen poset: graded breadth-first search upward from a.
inline bool leq(Poset poset, const Composition& a, const Composition& b) {
    if (a == b) return true;
    if (a.weight() >= b.weight()) return false;
    std::set<Composition> frontier{a};
    for (int w = a.weight(); w < b.weight(); ++w) {
        std::set<Composition> next;
        for (const Composition& p : frontier)
            for (const Composition& q : covers(poset, p)) next.insert(q);
        frontier = std::move(next);
    }
    return frontier.count(b) > 0;
}

// The word x_{p_1} x_{p_2} ... x_{p_k}; the map is an order isomorphism onto
// a poset of words, so it is injective by construction.
struct Word {
    std::vector<int> letters;

    bool operator==(const Word&) const = default;

    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < letters.size(); ++i) {
            if (i) os << " ";
            os << "x" << letters[i];
        }
        return os.str();
    }
};

inline Word to_word(const Composition& p) { return Word{p.parts()}; }
inline Composition word_to_composition(const Word& w) { return Composition(w.letters); }

// All compositions of weight exactly n, sorted; the 2^(n-1) part splits
// correspond to subsets of gap positions.
inline std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(Composition(parts));
            return;
        }
        for (int first = 1; first <= remaining; ++first) {
            parts.push_back(first);
            self(self, remaining - first);
            parts.pop_back();
        }
    };
    rec(rec, n);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Composition> compositions_up_to(int max_weight) {
    std::vector<Composition> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto level = compositions_of(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace npaths
