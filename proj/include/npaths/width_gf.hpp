#pragma once

// Width-k generating functions.
//
// shape_count transcribes the f_k recurrence coefficientwise:
//   c(p) = sum over parts p_i >= 2 of c(p - e_i)
//        + [p_1 = 1] c(p_2..p_k) + [p_k = 1] c(p_1..p_{k-1})
//        - [p = (1,...,1)],            c(()) = 1.
// The univariate L_k(t) follows L_k = (2 t L_{k-1} - t^k) / (1 - k t) with
// L_0 = 1, and factors as t^k Ltilde_k(t) / prod_{i=1..k} (1 - i t).

#include "npaths/composition.hpp"
#include "npaths/rational_function.hpp"
#include "npaths/series.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace npaths {

// Memoized exact shape counts; concurrent reads share the lock, insertions
// are exclusive, and values are pure so results do not depend on
// interleaving.
class ShapeCounter {
  public:
    Int count(const Composition& shape) {
        {
            std::shared_lock lock(mu_);
            auto it = memo_.find(shape);
            if (it != memo_.end()) return it->second;
        }
        Int result = compute(shape);
        std::unique_lock lock(mu_);
        return memo_.emplace(shape, std::move(result)).first->second;
    }

  private:
    Int compute(const Composition& shape) {
        const std::vector<int>& p = shape.parts();
        if (p.empty()) return 1;
        Int s = 0;
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 2) continue;
            std::vector<int> q = p;
            --q[i];
            s += count(Composition(q));
        }
        if (p.front() == 1) s += count(Composition(std::vector<int>(p.begin() + 1, p.end())));
        if (p.back() == 1) s += count(Composition(std::vector<int>(p.begin(), p.end() - 1)));
        if (shape.all_ones()) s -= 1;
        return s;
    }

    std::map<Composition, Int> memo_;
    std::shared_mutex mu_;
};

inline Int shape_count(const Composition& shape) {
    static ShapeCounter counter;
    return counter.count(shape);
}

// f_k(x_1..x_k) through total degree D; every coefficient is a shape count.
inline Series f_k_series(int k, int D) {
    if (k < 0 || k > 3) throw std::invalid_argument("f_k series materialized for k <= 3 only");
    if (D < k) throw std::invalid_argument("truncation degree below k");
    if (k == 0) return Series::constant(1, D, 1);
    Series f(k, D);
    std::vector<int> parts(static_cast<size_t>(k), 1);
    auto rec = [&](auto&& self, int pos, int budget) -> void {
        if (pos == k) {
            Series::Expo e{0, 0, 0};
            for (int i = 0; i < k; ++i) e[static_cast<size_t>(i)] = parts[static_cast<size_t>(i)];
            f.set(e, Rat(shape_count(Composition(parts))));
            return;
        }
        for (int v = 1; v <= budget - (k - pos - 1); ++v) {
            parts[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, budget - v);
        }
    };
    rec(rec, 0, D);
    return f;
}

struct FkStructureReport {
    int k = 0;
    int degree_bound = 0;        // recursion bound on deg(ftilde_k)
    int verified_through = 0;    // quotient coefficients are exact to D - k
    bool divisible = true;       // every term of f_k * prod was divisible by x_1..x_k
    bool tail_vanishes = true;   // no quotient terms with degree in (bound, D-k]
    Series numerator;            // the ftilde_k candidate

    bool ok() const { return divisible && tail_vanishes; }
};

// Multiplies the f_k series by prod_{1<=i<=j<=k} (1 - x_i - ... - x_j),
// divides by x_1...x_k and reports whether what remains is a polynomial of
// the expected degree.
inline FkStructureReport verify_fk_structure(int k, int D) {
    if (k < 1 || k > 3) throw std::invalid_argument("structure check materialized for 1 <= k <= 3");
    Series g = f_k_series(k, D);
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j) {
            Series factor = Series::constant(k, D, 1);
            for (int v = i; v <= j; ++v) factor = factor - Series::variable(k, D, v - 1);
            g = g * factor;
        }
    int bound = 0;
    for (int m = 1; m <= k; ++m) bound = std::max(bound + m, m * (m + 1) / 2);
    FkStructureReport report{k, bound, D - k, true, true, Series(k, D)};
    for (const auto& [e, c] : g.terms()) {
        if (e[0] < 1 || (k >= 2 && e[1] < 1) || (k >= 3 && e[2] < 1)) {
            report.divisible = false;
            continue;
        }
        Series::Expo q{e[0] - 1, k >= 2 ? e[1] - 1 : 0, k >= 3 ? e[2] - 1 : 0};
        int d = Series::degree_of(q);
        if (d > bound && d <= D - k) report.tail_vanishes = false;
        report.numerator.set(q, c);
    }
    return report;
}

struct WidthSeriesBundle {
    int k = 0;
    RationalFunction L;          // L_k(t), canonical
    Polynomial L_tilde;          // numerator over prod (1 - i t), degree k-1
    std::vector<Int> coefficients;  // a_{n,k} for n = 0..terms
};

inline RationalFunction L_k_ratfn(int k) {
    if (k < 0) throw std::invalid_argument("width must be >= 0");
    RationalFunction L(Polynomial(1));
    Polynomial t = Polynomial::monomial(1);
    for (int m = 1; m <= k; ++m)
        L = (RationalFunction(Rat(2) * t) * L - RationalFunction(Polynomial::monomial(m))) /
            RationalFunction(Polynomial(1) - Rat(m) * t);
    return L;
}

inline WidthSeriesBundle width_series_bundle(int k, int terms) {
    if (k < 1) throw std::invalid_argument("width must be >= 1");
    WidthSeriesBundle b;
    b.k = k;
    b.L = L_k_ratfn(k);
    Polynomial prod(1);
    Polynomial t = Polynomial::monomial(1);
    for (int i = 1; i <= k; ++i) prod *= Polynomial(1) - Rat(i) * t;
    // Ltilde_k = L_k * prod / t^k, which must come out a polynomial
    RationalFunction lt = b.L * RationalFunction(prod) / RationalFunction(Polynomial::monomial(k));
    if (lt.den().degree() != 0) throw std::logic_error("L_k does not factor as t^k Ltilde / prod(1-it)");
    b.L_tilde = (Rat(1) / lt.den().coeff(0)) * lt.num();
    for (const Rat& c : b.L.series(terms + 1)) b.coefficients.push_back(to_int(c));
    return b;
}

struct AnkClosedForm {
    Int value;            // a_{n,k}, exactly
    Rat leading_growth;   // C with a_{n+k,k} ~ C k^n; equals v_{k,k} * Ltilde_k(1/k)
    Rat v_kk;             // j = k coefficient of the pure 1/prod(1-it) decomposition
};

// Exact evaluation of a_{n,k} through the partial fraction decomposition of
// L_k: split off the polynomial part, decompose the proper remainder over
// (1 - t)...(1 - kt), and sum w_j j^n. Valid for n >= k, where the
// polynomial part (degree k-1) no longer contributes.
inline AnkClosedForm a_nk_closed_form(int k, int n) {
    if (k < 1 || n < k) throw std::invalid_argument("a_nk closed form needs 1 <= k <= n");
    RationalFunction L = L_k_ratfn(k);
    Polynomial den(1);
    Polynomial t = Polynomial::monomial(1);
    std::vector<long> roots;
    for (int i = 1; i <= k; ++i) {
        den *= Polynomial(1) - Rat(i) * t;
        roots.push_back(i);
    }
    if (!(L.den() == den)) throw std::logic_error("unexpected L_k denominator");
    auto [poly_part, remainder] = divmod(L.num(), den);
    (void)poly_part;  // degree k-1 < n
    std::vector<Rat> w = partial_fractions(remainder, roots);
    Rat value = 0;
    for (int j = 1; j <= k; ++j) value += w[static_cast<size_t>(j - 1)] * Rat(int_pow(Int(j), static_cast<unsigned>(n)));
    AnkClosedForm out;
    out.value = to_int(value);
    out.leading_growth = w.back() * rat_pow(Rat(k), static_cast<unsigned>(k));
    out.v_kk = partial_fractions(roots).back();
    return out;
}

}  // namespace npaths
