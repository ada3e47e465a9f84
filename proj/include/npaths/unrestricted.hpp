#pragma once

// Unrestricted path counts gamma_{n,i,j}: paths of length n whose endpoint
// has i parts of size 1 and j parts of size >= 2.
//
//   gamma_{n,i,j} = 2 gamma_{n-1,i-1,j} + (i+1) gamma_{n-1,i+1,j-1}
//                   + j gamma_{n-1,i,j}            for j > 0,
//   gamma_{n,i,0} = [i = n].
//
// The exponential generating function F(u,v,x) = sum_n (sum_{i,j}
// gamma_{n,i,j} u^i v^j) x^n / n! splits as F = H + exp(ux), and H solves
//   dH/dx = v [ dH/dv + dH/du + x exp(ux) ] + 2uH.

#include "npaths/numbers.hpp"

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace npaths {

class GammaTable {
  public:
    explicit GammaTable(int n_max) : n_max_(n_max) {
        if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
        g_[{0, 0, 0}] = 1;
        for (int n = 1; n <= n_max; ++n) {
            for (int i = 0; i <= n; ++i) g_[{n, i, 0}] = i == n ? 1 : 0;
            for (int j = 1; 2 * j <= n; ++j)
                for (int i = 0; i + 2 * j <= n; ++i) {
                    Int v = 2 * at(n - 1, i - 1, j) + Int(i + 1) * at(n - 1, i + 1, j - 1) +
                            Int(j) * at(n - 1, i, j);
                    if (v != 0) g_[{n, i, j}] = std::move(v);
                }
        }
    }

    const Int& at(int n, int i, int j) const {
        static const Int zero = 0;
        if (n < 0 || i < 0 || j < 0) return zero;
        auto it = g_.find({n, i, j});
        return it == g_.end() ? zero : it->second;
    }

    int n_max() const { return n_max_; }

  private:
    int n_max_;
    std::map<std::array<int, 3>, Int> g_;
};

// One x^n bracket of F as an integer polynomial in u, v; the division by n!
// happens only at serialization.
struct EgfSlice {
    int n = 0;
    std::map<std::pair<int, int>, Int> terms;  // (i, j) -> gamma_{n,i,j}

    Int total() const {  // evaluation at u = v = 1
        Int s = 0;
        for (const auto& [ij, c] : terms) s += c;
        return s;
    }

    // ordered by (j, i): "u^4 + v + 6uv + 11u^2v + 4v^2"
    std::string str() const {
        std::map<std::pair<int, int>, Int> by_jv;
        for (const auto& [ij, c] : terms) by_jv[{ij.second, ij.first}] = c;
        std::ostringstream os;
        bool first = true;
        for (const auto& [ji, c] : by_jv) {
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            auto [j, i] = ji;
            if (c != 1 || (i == 0 && j == 0)) os << c.str();
            if (i > 0) {
                os << "u";
                if (i > 1) os << "^" << i;
            }
            if (j > 0) {
                os << "v";
                if (j > 1) os << "^" << j;
            }
        }
        return first ? "0" : os.str();
    }
};

inline std::vector<EgfSlice> egf_slices(int n_max) {
    GammaTable g(n_max);
    std::vector<EgfSlice> out(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        out[static_cast<size_t>(n)].n = n;
        for (int j = 0; 2 * j <= n; ++j)
            for (int i = 0; i + 2 * j <= n; ++i)
                if (g.at(n, i, j) != 0) out[static_cast<size_t>(n)].terms[{i, j}] = g.at(n, i, j);
    }
    return out;
}

inline std::vector<Int> total_counts(int n_max) {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    for (const EgfSlice& s : egf_slices(n_max)) out.push_back(s.total());
    return out;
}

struct UnrestrictedPdeReport {
    bool pde_holds = true;
    std::string first_failure;

    // stated side conditions, checked against the table
    bool f_u0x_is_exp = true;        // gamma_{n,i,0} = [i = n], i.e. H(u,0,x) = 0
    bool h_uv0_zero = true;          // no x^0 term in H
    bool dhdx_at0_zero = true;       // no x^1 term in H
    bool h0vx_claimed_form = true;    // H(0,v,x) = v(exp(x) - x)?  (flagged false)
    std::string h0vx_claim_detail;
    bool h0vx_vlinear_oracle = true; // [v^1] H(0,v,x) = e^x - 1 - x
    std::string h0vx_higher_detail;  // first nonzero v^j, j >= 2 term

    bool ok() const { return pde_holds && f_u0x_is_exp && h_uv0_zero && dhdx_at0_zero && h0vx_vlinear_oracle; }
};

// Builds H = F - exp(ux) as exact truncated trivariate data (coefficient of
// u^i v^j x^n stored as a rational, the 1/n! folded in) and checks the PDE
// coefficientwise through x^{n_max - 1}, where every term is fully
// determined.
inline UnrestrictedPdeReport verify_pde_unrestricted(int n_max) {
    if (n_max < 2) throw std::invalid_argument("need n_max >= 2");
    GammaTable g(n_max);
    using Key = std::array<int, 3>;  // (i, j, n)
    std::map<Key, Rat> H;
    std::vector<Int> fact(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) fact[static_cast<size_t>(n)] = factorial(static_cast<unsigned>(n));
    for (int n = 0; n <= n_max; ++n) {
        for (int i = 0; i <= n; ++i)
            for (int j = 0; 2 * j <= n; ++j) {
                Rat c(g.at(n, i, j), fact[static_cast<size_t>(n)]);
                if (i == n && j == 0) c -= Rat(Int(1), fact[static_cast<size_t>(n)]);  // exp(ux) term
                if (c != 0) H[{i, j, n}] = c;
            }
    }
    UnrestrictedPdeReport report;

    auto add_into = [](std::map<Key, Rat>& dst, const Key& k, const Rat& v) {
        if (v == 0) return;
        auto [it, inserted] = dst.emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) dst.erase(it);
        }
    };

    // dH/dx [i,j,n] = (n+1) H[i,j,n+1]
    std::map<Key, Rat> lhs;
    for (const auto& [k, c] : H)
        if (k[2] >= 1) add_into(lhs, {k[0], k[1], k[2] - 1}, Rat(k[2]) * c);

    std::map<Key, Rat> rhs;
    // v * dH/dv: [i,j,n] -> j picks up, v shifts j back up
    for (const auto& [k, c] : H)
        if (k[1] >= 1) add_into(rhs, k, Rat(k[1]) * c);
    // v * dH/du
    for (const auto& [k, c] : H)
        if (k[0] >= 1) add_into(rhs, {k[0] - 1, k[1] + 1, k[2]}, Rat(k[0]) * c);
    // v * x * exp(ux): term u^m v^1 x^{m+1} / m!
    for (int m = 0; m + 1 <= n_max; ++m) add_into(rhs, {m, 1, m + 1}, Rat(Int(1), fact[static_cast<size_t>(m)]));
    // 2uH
    for (const auto& [k, c] : H) add_into(rhs, {k[0] + 1, k[1], k[2]}, Rat(2) * c);

    for (const auto& [k, c] : lhs) {
        if (k[2] > n_max - 1) continue;
        auto it = rhs.find(k);
        if (it == rhs.end() || it->second != c) {
            report.pde_holds = false;
            std::ostringstream os;
            os << "u^" << k[0] << " v^" << k[1] << " x^" << k[2] << ": lhs " << c.str() << " rhs "
               << (it == rhs.end() ? std::string("0") : it->second.str());
            report.first_failure = os.str();
            break;
        }
    }
    if (report.pde_holds)
        for (const auto& [k, c] : rhs) {
            if (k[2] > n_max - 1) continue;
            if (!lhs.count(k)) {
                report.pde_holds = false;
                std::ostringstream os;
                os << "u^" << k[0] << " v^" << k[1] << " x^" << k[2] << ": lhs 0 rhs " << c.str();
                report.first_failure = os.str();
                break;
            }
        }

    // side conditions
    for (int n = 0; n <= n_max && report.f_u0x_is_exp; ++n)
        for (int i = 0; i <= n; ++i)
            if (g.at(n, i, 0) != (i == n ? 1 : 0)) report.f_u0x_is_exp = false;
    for (const auto& [k, c] : H) {
        if (k[2] == 0 && c != 0) report.h_uv0_zero = false;
        if (k[2] == 1 && c != 0) report.dhdx_at0_zero = false;
    }
    // H(0,v,x) against the claimed v(exp(x) - x) and the v-linear oracle
    for (int n = 0; n <= n_max; ++n) {
        Rat claim = n == 1 ? Rat(0) : Rat(Int(1), fact[static_cast<size_t>(n)]);  // [x^n](e^x - x)
        auto it = H.find({0, 1, n});
        Rat table_v1 = it == H.end() ? Rat(0) : it->second;
        if (table_v1 != claim && report.h0vx_claim_detail.empty()) {
            report.h0vx_claimed_form = false;
            std::ostringstream os;
            os << "claimed v(exp(x)-x) has v x^" << n << " coefficient " << claim.str() << ", table gives "
               << table_v1.str();
            report.h0vx_claim_detail = os.str();
        }
        Rat oracle = n >= 2 ? Rat(Int(1), fact[static_cast<size_t>(n)]) : Rat(0);  // [x^n](e^x - 1 - x)
        if (table_v1 != oracle) report.h0vx_vlinear_oracle = false;
    }
    for (const auto& [k, c] : H) {
        if (k[0] != 0 || k[1] < 2 || c == 0) continue;
        std::ostringstream os;
        os << "H(0,v,x) also carries v^" << k[1] << " x^" << k[2] << " with coefficient " << c.str()
           << " (gamma = " << g.at(k[2], 0, k[1]).str() << "), absent from the claim";
        report.h0vx_higher_detail = os.str();
        report.h0vx_claimed_form = false;
        break;
    }
    return report;
}

}  // namespace npaths
