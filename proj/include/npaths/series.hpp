#pragma once

// Exact power series in 1..3 variables truncated by total degree.
//
// Coefficients live in a sorted map keyed by the exponent vector; absent
// entries are zero, stored entries are nonzero. Binary operations require
// equal arity and truncate to the smaller bound of the operands.

#include "npaths/numbers.hpp"

#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace npaths {

class Series {
  public:
    using Expo = std::array<int, 3>;

    Series(int arity, int truncation_degree) : arity_(arity), trunc_(truncation_degree) {
        if (arity < 1 || arity > 3) throw std::invalid_argument("series arity must be 1..3");
        if (truncation_degree < 0) throw std::invalid_argument("negative truncation degree");
    }

    static Series constant(int arity, int truncation_degree, const Rat& value) {
        Series s(arity, truncation_degree);
        s.set({0, 0, 0}, value);
        return s;
    }
    // x_{var_index}, 0-based.
    static Series variable(int arity, int truncation_degree, int var_index) {
        Series s(arity, truncation_degree);
        Expo e{0, 0, 0};
        e[static_cast<size_t>(s.checked_var(var_index))] = 1;
        s.set(e, 1);
        return s;
    }

    int arity() const { return arity_; }
    int truncation() const { return trunc_; }
    const std::map<Expo, Rat>& terms() const { return coef_; }

    Rat coeff(const Expo& e) const {
        auto it = coef_.find(e);
        return it == coef_.end() ? Rat(0) : it->second;
    }

    void set(const Expo& e, const Rat& value) {
        check_exponent(e);
        if (value == 0)
            coef_.erase(e);
        else
            coef_[e] = value;
    }
    void add(const Expo& e, const Rat& value) { set(e, coeff(e) + value); }

    bool is_zero() const { return coef_.empty(); }

    friend Series operator+(const Series& a, const Series& b) {
        a.check_same_arity(b);
        Series r(a.arity_, std::min(a.trunc_, b.trunc_));
        for (const auto& [e, c] : a.coef_)
            if (degree_of(e) <= r.trunc_) r.add(e, c);
        for (const auto& [e, c] : b.coef_)
            if (degree_of(e) <= r.trunc_) r.add(e, c);
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + b.scaled(Rat(-1)); }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_same_arity(b);
        Series r(a.arity_, std::min(a.trunc_, b.trunc_));
        for (const auto& [ea, ca] : a.coef_) {
            int da = degree_of(ea);
            if (da > r.trunc_) continue;
            for (const auto& [eb, cb] : b.coef_) {
                if (da + degree_of(eb) > r.trunc_) continue;
                r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
            }
        }
        return r;
    }

    Series scaled(const Rat& s) const {
        Series r(arity_, trunc_);
        if (s == 0) return r;
        for (const auto& [e, c] : coef_) r.coef_[e] = c * s;
        return r;
    }

    // Formal partial derivative; the truncation bound drops by one.
    Series derivative(int var_index) const {
        int v = checked_var(var_index);
        Series r(arity_, trunc_ > 0 ? trunc_ - 1 : 0);
        for (const auto& [e, c] : coef_) {
            if (e[static_cast<size_t>(v)] == 0) continue;
            Expo d = e;
            --d[static_cast<size_t>(v)];
            r.add(d, c * Rat(e[static_cast<size_t>(v)]));
        }
        return r;
    }

    // Square root with constant term 1: the unique r with r*r == *this
    // (through the truncation degree) and r(0) = 1.
    Series sqrt_one() const {
        if (coeff({0, 0, 0}) != 1) throw std::domain_error("series sqrt requires constant term 1");
        Series r(arity_, trunc_);
        r.set({0, 0, 0}, 1);
        for (int d = 1; d <= trunc_; ++d) {
            for_each_exponent(arity_, d, [&](const Expo& e) {
                Rat s = coeff(e);
                for (const auto& [f, cf] : r.coef_) {
                    int df = degree_of(f);
                    if (df == 0 || df == d) continue;
                    Expo g{e[0] - f[0], e[1] - f[1], e[2] - f[2]};
                    if (g[0] < 0 || g[1] < 0 || g[2] < 0) continue;
                    s -= cf * r.coeff(g);
                }
                r.set(e, s / 2);
            });
        }
        return r;
    }

    // Multiplicative inverse; requires a nonzero constant term.
    Series inverse() const {
        Rat c0 = coeff({0, 0, 0});
        if (c0 == 0) throw std::domain_error("series inverse requires nonzero constant term");
        Series r(arity_, trunc_);
        r.set({0, 0, 0}, Rat(1) / c0);
        for (int d = 1; d <= trunc_; ++d) {
            for_each_exponent(arity_, d, [&](const Expo& e) {
                Rat s = 0;
                for (const auto& [f, cf] : coef_) {
                    int df = degree_of(f);
                    if (df == 0 || df > d) continue;
                    Expo g{e[0] - f[0], e[1] - f[1], e[2] - f[2]};
                    if (g[0] < 0 || g[1] < 0 || g[2] < 0) continue;
                    s += cf * r.coeff(g);
                }
                r.set(e, -s / c0);
            });
        }
        return r;
    }

    // outer(inner) for univariate outer and inner with zero constant term;
    // evaluated by Horner in the inner series.
    static Series compose(const Series& outer, const Series& inner) {
        if (outer.arity_ != 1) throw std::invalid_argument("compose: outer series must be univariate");
        if (inner.coeff({0, 0, 0}) != 0) throw std::invalid_argument("compose: inner series needs zero constant term");
        int d = std::min(outer.trunc_, inner.trunc_);
        Series r = constant(inner.arity_, d, outer.coeff({d, 0, 0}));
        for (int m = d - 1; m >= 0; --m) {
            r = r * inner;
            r.add({0, 0, 0}, outer.coeff({m, 0, 0}));
        }
        return r;
    }

    bool operator==(const Series& o) const {
        return arity_ == o.arity_ && trunc_ == o.trunc_ && coef_ == o.coef_;
    }

    static int degree_of(const Expo& e) { return e[0] + e[1] + e[2]; }

    // Visits every exponent vector of the given arity and exact total degree,
    // in lexicographic order.
    static void for_each_exponent(int arity, int total_degree, const std::function<void(const Expo&)>& fn) {
        if (arity == 1) {
            fn({total_degree, 0, 0});
        } else if (arity == 2) {
            for (int i = 0; i <= total_degree; ++i) fn({i, total_degree - i, 0});
        } else {
            for (int i = 0; i <= total_degree; ++i)
                for (int j = 0; j + i <= total_degree; ++j) fn({i, j, total_degree - i - j});
        }
    }

    std::string str(const std::array<std::string, 3>& vars = {"x1", "x2", "x3"}) const {
        if (coef_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coef_) {
            Rat a = c < 0 ? Rat(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool constant = degree_of(e) == 0;
            if (a != 1 || constant) os << a.str();
            for (int v = 0; v < arity_; ++v) {
                int p = e[static_cast<size_t>(v)];
                if (p == 0) continue;
                os << vars[static_cast<size_t>(v)];
                if (p > 1) os << "^" << p;
            }
        }
        return os.str();
    }

  private:
    int checked_var(int v) const {
        if (v < 0 || v >= arity_) throw std::invalid_argument("variable index out of range");
        return v;
    }
    void check_same_arity(const Series& o) const {
        if (arity_ != o.arity_) throw std::invalid_argument("series arity mismatch");
    }
    void check_exponent(const Expo& e) const {
        for (int v = arity_; v < 3; ++v)
            if (e[static_cast<size_t>(v)] != 0) throw std::invalid_argument("exponent beyond series arity");
        if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("negative exponent");
        if (degree_of(e) > trunc_) throw std::invalid_argument("exponent beyond truncation degree");
    }

    int arity_;
    int trunc_;
    std::map<Expo, Rat> coef_;
};

}  // namespace npaths
