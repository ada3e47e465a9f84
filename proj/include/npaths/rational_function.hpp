#pragma once

// Canonical rational functions num/den and partial fractions over distinct
// (1 - i t) factors.
//
// Canonical form: gcd(num, den) = 1 and the denominator is scaled so its
// constant term is 1 when nonzero, otherwise so it is monic. Equal functions
// therefore compare equal fieldwise.

#include "npaths/polynomial.hpp"

#include <string>
#include <vector>

namespace npaths {

class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(Polynomial numerator, Polynomial denominator = Polynomial(1))
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        canonicalize();
    }
    RationalFunction(const Rat& c) : num_(c), den_(1) {}
    RationalFunction(long long c) : num_(Rat(c)), den_(1) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    RationalFunction operator-() const { return {-num_, den_}; }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction derivative() const {
        return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
    }

    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d == 0) throw std::domain_error("rational function pole at evaluation point");
        return num_.eval(x) / d;
    }

    // Power-series coefficients c_0..c_{n_terms-1}; requires den(0) != 0.
    std::vector<Rat> series(int n_terms) const {
        if (den_.coeff(0) == 0) throw std::domain_error("series expansion at a pole");
        std::vector<Rat> c(static_cast<size_t>(n_terms));
        for (int n = 0; n < n_terms; ++n) {
            Rat s = num_.coeff(n);
            for (int i = 1; i <= std::min(n, den_.degree()); ++i) s -= den_.coeff(i) * c[static_cast<size_t>(n - i)];
            c[static_cast<size_t>(n)] = s / den_.coeff(0);
        }
        return c;
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str(std::string_view var = "t") const {
        if (den_ == Polynomial(1)) return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

  private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rat scale = den_.coeff(0) != 0 ? den_.coeff(0) : den_.leading();
        if (scale != 1) {
            Rat inv = Rat(1) / scale;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Polynomial num_, den_;
};

// Decomposition of numerator / prod_j (1 - roots[j] * t) as
// sum_j v_j / (1 - roots[j] * t).  Requires pairwise-distinct nonzero roots
// and deg(numerator) < number of factors; v_j = num(1/r_j) / prod_{i != j}
// (1 - r_i / r_j).
inline std::vector<Rat> partial_fractions(const Polynomial& numerator, const std::vector<long>& roots) {
    for (size_t i = 0; i < roots.size(); ++i) {
        if (roots[i] == 0) throw std::invalid_argument("partial_fractions: zero root gives a degenerate factor");
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j]) throw std::invalid_argument("partial_fractions: repeated factors");
    }
    if (numerator.degree() >= static_cast<int>(roots.size()))
        throw std::invalid_argument("partial_fractions: numerator degree must be below denominator degree");
    std::vector<Rat> v;
    v.reserve(roots.size());
    for (size_t j = 0; j < roots.size(); ++j) {
        Rat point = make_rat(1, roots[j]);
        Rat d = 1;
        for (size_t i = 0; i < roots.size(); ++i)
            if (i != j) d *= Rat(1) - Rat(roots[i]) * point;
        v.push_back(numerator.eval(point) / d);
    }
    return v;
}

inline std::vector<Rat> partial_fractions(const std::vector<long>& roots) {
    return partial_fractions(Polynomial(1), roots);
}

}  // namespace npaths
