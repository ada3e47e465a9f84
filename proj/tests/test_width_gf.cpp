#include "npaths/path_enum.hpp"
#include "npaths/width_gf.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <thread>

using namespace npaths;

namespace {

Polynomial product_one_minus(int k) {
    Polynomial p(1);
    for (int i = 1; i <= k; ++i) p *= Polynomial(1) - Rat(i) * Polynomial::monomial(1);
    return p;
}

}  // namespace

TEST_CASE("shape counts", "[width]") {
    CHECK(shape_count(Composition{1, 1, 1, 1}) == 1);
    CHECK(shape_count(Composition{2, 2}) == 4);
    CHECK(shape_count(Composition{1, 2}) == 2);
    CHECK(shape_count(Composition{}) == 1);
}

TEST_CASE("shape counts equal brute-force endpoint counts", "[width]") {
    auto brute = brute_force_endpoint_levels(8);
    for (int n = 0; n <= 8; ++n)
        for (const auto& [p, c] : brute[static_cast<size_t>(n)]) REQUIRE(shape_count(p) == c);
}

TEST_CASE("shape counts are mirror invariant", "[width]") {
    for (int w = 1; w <= 10; ++w)
        for (const Composition& p : compositions_of(w)) REQUIRE(shape_count(p) == shape_count(p.mirror()));
}

TEST_CASE("f_k series", "[width]") {
    Series f1 = f_k_series(1, 8);
    for (int n = 1; n <= 8; ++n) CHECK(f1.coeff({n, 0, 0}) == 1);
    CHECK(f1.coeff({0, 0, 0}) == 0);

    Series f2 = f_k_series(2, 6);
    CHECK(f2.coeff({1, 1, 0}) == 1);  // the single path to (1,1)
    CHECK(f2.coeff({2, 2, 0}) == 4);

    Series f0 = f_k_series(0, 5);
    CHECK(f0.coeff({0, 0, 0}) == 1);
    CHECK(f0.terms().size() == 1);
}

TEST_CASE("f_k structure at small width", "[width]") {
    FkStructureReport r1 = verify_fk_structure(1, 10);
    CHECK(r1.ok());
    CHECK(r1.numerator.terms().size() == 1);
    CHECK(r1.numerator.coeff({0, 0, 0}) == 1);

    FkStructureReport r2 = verify_fk_structure(2, 12);
    CHECK(r2.ok());
    CHECK(r2.numerator.coeff({0, 0, 0}) == 1);
    CHECK(r2.numerator.coeff({1, 1, 0}) == -1);
    for (const auto& [e, c] : r2.numerator.terms())
        if (Series::degree_of(e) <= r2.verified_through)
            REQUIRE((c == 1 || c == -1));  // exactly the two terms of 1 - x1 x2

    FkStructureReport r3 = verify_fk_structure(3, 12);
    CHECK(r3.ok());
    CHECK(r3.degree_bound == 6);
    CHECK(r3.numerator.coeff({0, 0, 0}) == 1);
    CHECK(r3.numerator.coeff({1, 1, 1}) == 12);
    CHECK(r3.numerator.coeff({1, 2, 1}) == -7);
}

TEST_CASE("L_k rational functions match the printed displays", "[width]") {
    Polynomial t = Polynomial::monomial(1);
    CHECK(L_k_ratfn(1) == RationalFunction(t, Polynomial(1) - t));
    WidthSeriesBundle b3 = width_series_bundle(3, 0);
    CHECK(b3.L == RationalFunction(Polynomial::monomial(3) * Polynomial::from_ints({1, 5, -2}), product_one_minus(3)));
    CHECK(b3.L_tilde == Polynomial::from_ints({1, 5, -2}));
    WidthSeriesBundle b5 = width_series_bundle(5, 0);
    CHECK(b5.L_tilde == Polynomial::from_ints({1, 42, -65, 62, -24}));
}

TEST_CASE("width-k coefficients count width-k paths", "[width]") {
    WidthSeriesBundle b2 = width_series_bundle(2, 8);
    CHECK(b2.coefficients[2] == 1);
    CHECK(b2.coefficients[3] == 4);
    CHECK(b2.coefficients[4] == 10);
    CHECK(b2.coefficients[5] == 22);
    // cross-check against the brute-force walk, widths 1..4
    auto brute = brute_force_endpoint_levels(8);
    for (int k = 1; k <= 4; ++k) {
        WidthSeriesBundle b = width_series_bundle(k, 8);
        for (int n = 0; n <= 8; ++n) {
            Int want = 0;
            for (const auto& [p, c] : brute[static_cast<size_t>(n)])
                if (p.width() == k) want += c;
            REQUIRE(b.coefficients[static_cast<size_t>(n)] == want);
        }
    }
}

TEST_CASE("tilde L recurrence and endpoint values", "[width]") {
    for (int k = 1; k <= 11; ++k) {
        Polynomial lhs = width_series_bundle(k + 1, 0).L_tilde;
        Polynomial rhs = Rat(2) * width_series_bundle(k, 0).L_tilde - product_one_minus(k);
        REQUIRE(lhs == rhs);
    }
    for (int k = 1; k <= 12; ++k) {
        WidthSeriesBundle b = width_series_bundle(k, 0);
        REQUIRE(b.L_tilde.degree() == k - 1);
        REQUIRE(b.L_tilde.eval(1) == Rat(int_pow(Int(2), static_cast<unsigned>(k - 1))));
    }
}

TEST_CASE("closed-form coefficients", "[width]") {
    for (int n = 1; n <= 20; ++n) CHECK(a_nk_closed_form(1, n).value == 1);
    CHECK(a_nk_closed_form(3, 3).v_kk == Rat(9, 2));
    CHECK(a_nk_closed_form(2, 5).value == 22);
    for (int k = 1; k <= 4; ++k) {
        WidthSeriesBundle b = width_series_bundle(k, 15);
        for (int n = k; n <= 15; ++n) REQUIRE(a_nk_closed_form(k, n).value == b.coefficients[static_cast<size_t>(n)]);
    }
    CHECK_THROWS_AS(a_nk_closed_form(3, 2), std::invalid_argument);
}

TEST_CASE("true growth constants", "[width]") {
    // a_{n+k,k} ~ C k^n with C = v_{k,k} * tilde-L_k(1/k)
    CHECK(a_nk_closed_form(1, 5).leading_growth == Rat(1));
    CHECK(a_nk_closed_form(2, 5).leading_growth == Rat(3));
    CHECK(a_nk_closed_form(3, 5).leading_growth == Rat(11));
    CHECK(a_nk_closed_form(4, 5).leading_growth == Rat(133, 3));
    for (int k = 2; k <= 6; ++k) {
        AnkClosedForm cf = a_nk_closed_form(k, k);
        WidthSeriesBundle b = width_series_bundle(k, 0);
        REQUIRE(cf.leading_growth == cf.v_kk * b.L_tilde.eval(Rat(1, k)));
    }
}

TEST_CASE("shape counter is reusable and consistent", "[width]") {
    ShapeCounter counter;
    CHECK(counter.count(Composition{2, 1, 2}) == shape_count(Composition{2, 1, 2}));
    CHECK(counter.count(Composition{2, 1, 2}) == counter.count(Composition{2, 1, 2}));
}

TEST_CASE("shape counter tolerates concurrent use", "[width]") {
    auto work = compositions_up_to(9);
    std::vector<Int> expected;
    expected.reserve(work.size());
    {
        ShapeCounter reference;
        for (const Composition& p : work) expected.push_back(reference.count(p));
    }
    ShapeCounter shared;
    std::vector<std::vector<Int>> results(4);
    std::vector<std::thread> threads;
    for (int w = 0; w < 4; ++w)
        threads.emplace_back([&, w] {
            results[static_cast<size_t>(w)].reserve(work.size());
            for (const Composition& p : work) results[static_cast<size_t>(w)].push_back(shared.count(p));
        });
    for (std::thread& th : threads) th.join();
    for (const auto& r : results) REQUIRE(r == expected);
}
