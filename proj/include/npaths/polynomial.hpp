#pragma once

// Dense univariate polynomials over the exact rationals.
//
// Invariant: the coefficient vector never ends in a zero, so the zero
// polynomial is the empty vector and degree() == -1 is its sentinel.

#include "npaths/numbers.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace npaths {

class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rat& constant) { coef_.push_back(constant); trim(); }
    Polynomial(long long constant) : Polynomial(Rat(constant)) {}
    explicit Polynomial(std::vector<Rat> coefficients) : coef_(std::move(coefficients)) { trim(); }

    // Ascending-degree integer coefficients; convenient for literals in tests.
    static Polynomial from_ints(std::initializer_list<long long> cs) {
        std::vector<Rat> v;
        v.reserve(cs.size());
        for (long long c : cs) v.emplace_back(c);
        return Polynomial(std::move(v));
    }

    static Polynomial monomial(int degree, const Rat& coeff = Rat(1)) {
        if (coeff == 0) return {};
        std::vector<Rat> v(static_cast<size_t>(degree) + 1);
        v.back() = coeff;
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }

    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coef_.size())) return Rat(0);
        return coef_[static_cast<size_t>(i)];
    }
    const std::vector<Rat>& coefficients() const { return coef_; }

    Rat leading() const { return coef_.empty() ? Rat(0) : coef_.back(); }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Polynomial derivative() const {
        if (coef_.size() <= 1) return {};
        std::vector<Rat> v(coef_.size() - 1);
        for (size_t i = 1; i < coef_.size(); ++i) v[i - 1] = coef_[i] * Rat(static_cast<long long>(i));
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rat> v(std::max(a.coef_.size(), b.coef_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rat> v(std::max(a.coef_.size(), b.coef_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Polynomial(std::move(v));
    }
    Polynomial operator-() const {
        std::vector<Rat> v(coef_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = -coef_[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> v(a.coef_.size() + b.coef_.size() - 1);
        for (size_t i = 0; i < a.coef_.size(); ++i)
            for (size_t j = 0; j < b.coef_.size(); ++j) v[i + j] += a.coef_[i] * b.coef_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Rat& s, const Polynomial& p) {
        std::vector<Rat> v(p.coef_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = s * p.coef_[i];
        return Polynomial(std::move(v));
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Euclidean division; the divisor must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rat> rem = a.coef_;
        std::vector<Rat> quo;
        int db = b.degree();
        if (a.degree() >= db) quo.assign(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
        for (int d = a.degree(); d >= db; --d) {
            Rat q = rem[static_cast<size_t>(d)] / b.coef_.back();
            if (q == 0) continue;
            quo[static_cast<size_t>(d - db)] = q;
            for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(d - db + i)] -= q * b.coeff(i);
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
        return q;
    }

    // Monic gcd via Euclid; gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero() && a.leading() != 1) a = (Rat(1) / a.leading()) * a;
        return a;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r(1), base = *this;
        while (e) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    // Writes p as content * primitive where primitive has coprime integer
    // coefficients and a positive lowest-degree coefficient.
    std::pair<Rat, Polynomial> primitive() const {
        if (is_zero()) return {Rat(0), Polynomial()};
        Int l = 1, g = 0;
        for (const Rat& c : coef_) {
            if (c == 0) continue;
            l = boost::multiprecision::lcm(l, denom(c));
        }
        std::vector<Rat> v(coef_.size());
        for (size_t i = 0; i < coef_.size(); ++i) v[i] = coef_[i] * Rat(l);
        for (const Rat& c : v) {
            if (c == 0) continue;
            g = boost::multiprecision::gcd(g, numer(c));
        }
        if (g < 0) g = -g;
        Rat scale = Rat(g, l);
        size_t low = 0;
        while (v[low] == 0) ++low;
        if (v[low] < 0) scale = -scale;
        Polynomial prim = (Rat(1) / scale) * (*this);
        return {scale, prim};
    }

    bool operator==(const Polynomial& o) const { return coef_ == o.coef_; }

    std::string str(std::string_view var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < coef_.size(); ++i) {
            const Rat& c = coef_[i];
            if (c == 0) continue;
            Rat a = c < 0 ? Rat(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (i == 0) {
                os << a.str();
            } else {
                if (a != 1) os << a.str();
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }

    std::vector<Rat> coef_;
};

}  // namespace npaths
