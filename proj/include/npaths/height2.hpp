#pragma once

// Paths of height <= 2. With i parts of size 1 and j parts of size 2 the
// endpoint weight is forced to i + 2j, so everything is indexed by (i, j):
//
//   c_{i,j} = 2 c_{i-1,j} + (i+1) c_{i+1,j-1} - [j = 0],   c_{0,0} = 1,
//
// P_k(x) = sum_i c_{i,k} x^i satisfies P_0 = 1/(1-x), P_k = P_{k-1}' / (1-2x),
// and the bivariate P(x,y) = sum c_{i,j} x^i y^j / j! has the closed form
// 2 / (1 + sqrt(1 - 4(y + x - x^2))).

#include "npaths/numbers.hpp"
#include "npaths/rational_function.hpp"
#include "npaths/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace npaths {

class HeightTwoTable {
  public:
    HeightTwoTable(int i_max, int j_max) : i_max_(i_max), j_max_(j_max) {
        if (i_max < 0 || j_max < 0) throw std::invalid_argument("table bounds must be >= 0");
        // row j needs row j-1 up to i_max + 2(j_max - j) + 1, so fill wide
        for (int j = 0; j <= j_max; ++j)
            for (int i = 0; i <= i_max + 2 * (j_max - j) + 1; ++i) {
                Int v;
                if (i == 0 && j == 0)
                    v = 1;
                else if (j == 0)
                    v = 2 * at(i - 1, 0) - 1;
                else
                    v = 2 * at(i - 1, j) + Int(i + 1) * at(i + 1, j - 1);
                c_[{i, j}] = std::move(v);
            }
    }

    // zero outside the filled region and for negative indices
    const Int& at(int i, int j) const {
        static const Int zero = 0;
        auto it = c_.find({i, j});
        return it == c_.end() ? zero : it->second;
    }

    int i_max() const { return i_max_; }
    int j_max() const { return j_max_; }

  private:
    int i_max_, j_max_;
    std::map<std::pair<int, int>, Int> c_;
};

struct PkBundle {
    int k = 0;
    RationalFunction P;      // P_k(x), canonical
    Polynomial Q;            // primitive integer polynomial of the normal form
    Int factorial_k;         // the k! pulled out in front

    bool operator==(const PkBundle&) const = default;
};

// P_k by symbolic differentiation, decomposed against the normal form
// P_k = k! (1-x)^{-1-k} (1-2x)^{1-2k} Q_k(x). The decomposition is defined
// for k >= 1; k = 0 returns Q = 1 alongside P_0 = 1/(1-x).
inline PkBundle P_k_ratfn(int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    Polynomial x = Polynomial::monomial(1);
    RationalFunction one_minus_x = RationalFunction(Polynomial(1) - x);
    RationalFunction one_minus_2x = RationalFunction(Polynomial(1) - Rat(2) * x);
    RationalFunction P = RationalFunction(Polynomial(1)) / one_minus_x;
    for (int m = 1; m <= k; ++m) P = P.derivative() / one_minus_2x;
    PkBundle b;
    b.k = k;
    b.P = P;
    b.factorial_k = factorial(static_cast<unsigned>(k));
    if (k == 0) {
        b.Q = Polynomial(1);
        return b;
    }
    RationalFunction r = P * one_minus_x.num().pow(static_cast<unsigned>(k + 1)) *
                         one_minus_2x.num().pow(static_cast<unsigned>(2 * k - 1));
    if (r.den().degree() != 0) throw std::logic_error("P_k does not match the (1-x),(1-2x) normal form");
    Polynomial scaled = (Rat(1) / r.den().coeff(0)) * r.num();
    auto [content, primitive] = scaled.primitive();
    if (content != Rat(b.factorial_k)) throw std::logic_error("P_k normal form does not carry the k! factor");
    b.Q = primitive;
    return b;
}

// Closed bivariate series, variables (x, y): 2 / (1 + sqrt(1 - 4(y+x-x^2))),
// expanded with the exact series kernel.
inline Series P_closed_series(int D) {
    Series inner(2, D);
    inner.set({0, 0, 0}, 1);
    if (D >= 1) {
        inner.set({0, 1, 0}, -4);
        inner.set({1, 0, 0}, -4);
    }
    if (D >= 2) inner.set({2, 0, 0}, 4);
    Series root = inner.sqrt_one();
    root.add({0, 0, 0}, 1);
    return root.inverse().scaled(2);
}

// Same function through the Catalan route: C(z) = sum Cat(m) z^m composed at
// z = y + x - x^2. Kept as an independent second path for verification.
inline Series P_closed_series_via_catalan(int D) {
    Series cat(1, D);
    for (int m = 0; m <= D; ++m) cat.set({m, 0, 0}, Rat(catalan(static_cast<unsigned>(m))));
    Series z(2, D);
    if (D >= 1) {
        z.set({1, 0, 0}, 1);
        z.set({0, 1, 0}, 1);
    }
    if (D >= 2) z.set({2, 0, 0}, -1);
    return Series::compose(cat, z);
}

struct ClosedFormTriple {
    Int c0;  // c_{0,n} = (2n)!/(n+1)!
    Int c1;  // c_{1,n} = c_{0,n+1}
    Int c2;  // c_{2,n} = c_{0,n+2}/2 - c_{0,n+1}
};

inline Int c0_closed_form(int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    return factorial(static_cast<unsigned>(2 * n)) / factorial(static_cast<unsigned>(n + 1));
}

inline ClosedFormTriple c2_closed_forms(int n) {
    ClosedFormTriple t;
    t.c0 = c0_closed_form(n);
    t.c1 = c0_closed_form(n + 1);
    Rat half = Rat(c0_closed_form(n + 2), Int(2)) - Rat(t.c1);
    t.c2 = to_int(half);
    return t;
}

struct Height2PdeReport {
    bool closed_form_holds = true;   // on P_closed_series
    bool table_series_holds = true;  // on the series assembled from the table
    std::string first_failure;       // empty when both hold

    bool ok() const { return closed_form_holds && table_series_holds; }
};

// Checks (1-2x) dP/dy = dP/dx coefficientwise, both on the closed-form
// expansion and on the table-derived series sum c_{i,j} x^i y^j / j!.
inline Height2PdeReport verify_pde_height2(int D) {
    if (D < 2) throw std::invalid_argument("need D >= 2");
    Height2PdeReport report;
    Series one_minus_2x(2, D);
    one_minus_2x.set({0, 0, 0}, 1);
    one_minus_2x.set({1, 0, 0}, -2);
    auto check = [&](const Series& P, bool& flag, const std::string& tag) {
        Series lhs = one_minus_2x * P.derivative(1);
        Series rhs = P.derivative(0);
        Series diff = lhs - rhs;
        for (const auto& [e, c] : diff.terms()) {
            if (Series::degree_of(e) > D - 1) continue;  // beyond the exact range of both sides
            if (c != 0) {
                flag = false;
                if (report.first_failure.empty())
                    report.first_failure = tag + " at x^" + std::to_string(e[0]) + " y^" + std::to_string(e[1]) +
                                           ": difference " + c.str();
                return;
            }
        }
    };
    check(P_closed_series(D), report.closed_form_holds, "closed form");
    HeightTwoTable table(D, D);
    Series from_table(2, D);
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j)
            from_table.set({i, j, 0}, Rat(table.at(i, j), factorial(static_cast<unsigned>(j))));
    check(from_table, report.table_series_holds, "table series");
    return report;
}

}  // namespace npaths
