#include "npaths/path_enum.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace npaths;

namespace {

const StandardPath kRho{{}, {1}, {1, 1}, {1, 2}, {1, 1, 2}};

// every column-increasing labelling of every weight-n shape (test oracle)
std::vector<Tableau> all_tableaux(int n) {
    std::vector<Tableau> out;
    for (const Composition& shape : compositions_of(n)) {
        std::vector<int> labels(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) labels[static_cast<size_t>(i)] = i + 1;
        Tableau current;
        auto rec = [&](auto&& self, size_t col, std::vector<int> remaining) -> void {
            if (col == shape.parts().size()) {
                out.push_back(current);
                return;
            }
            size_t h = static_cast<size_t>(shape.parts()[col]);
            std::vector<size_t> idx(h);
            auto choose = [&](auto&& pick, size_t start, size_t depth) -> void {
                if (depth == h) {
                    std::vector<int> column, rest;
                    std::set<size_t> chosen(idx.begin(), idx.end());
                    for (size_t i = 0; i < remaining.size(); ++i)
                        (chosen.count(i) ? column : rest).push_back(remaining[i]);
                    current.columns.push_back(column);  // already increasing
                    self(self, col + 1, rest);
                    current.columns.pop_back();
                    return;
                }
                for (size_t i = start; i < remaining.size(); ++i) {
                    idx[depth] = i;
                    pick(pick, i + 1, depth + 1);
                }
            };
            choose(choose, 0, 0);
        };
        rec(rec, 0, labels);
    }
    return out;
}

}  // namespace

TEST_CASE("path enumeration", "[paths]") {
    auto n0 = enumerate_paths(0);
    REQUIRE(n0.size() == 1);
    CHECK(n0[0] == StandardPath{Composition{}});

    auto n2 = enumerate_paths(2);
    REQUIRE(n2.size() == 2);
    CHECK(n2[0] == StandardPath{{}, {1}, {1, 1}});
    CHECK(n2[1] == StandardPath{{}, {1}, {2}});

    CHECK(enumerate_paths(4).size() == 23);
    for (const StandardPath& p : enumerate_paths(5)) CHECK(is_standard_path(p));
}

TEST_CASE("path validation", "[paths]") {
    CHECK(is_standard_path(kRho));
    CHECK_FALSE(is_standard_path({}));
    CHECK_FALSE(is_standard_path({Composition{1}}));                    // must start at ()
    CHECK_FALSE(is_standard_path({{}, {2}}));                           // weight jump
    CHECK_FALSE(is_standard_path({{}, {1}, {1, 1}, {1, 1, 1, 1}}));     // weight jump
    CHECK_FALSE(is_standard_path({{}, {1}, {1, 1}, {1, 1, 1}, {1, 1, 1, 1, 1}}));
    CHECK_FALSE(is_standard_path({{}, {1}, {2}, {1, 1, 1}}));           // weight fits, not a cover
    CHECK(path_str(kRho) == "() -> 1 -> 11 -> 12 -> 112");
}

TEST_CASE("streaming walk matches materialized enumeration", "[paths]") {
    std::vector<long long> totals(9, 0);
    walk_standard_paths(8, [&](const std::vector<int>&, int len) { ++totals[static_cast<size_t>(len)]; });
    const std::vector<long long> expected{1, 1, 2, 6, 23, 103, 518, 2868, 17263};
    CHECK(totals == expected);
}

TEST_CASE("endpoint counting agrees with brute force", "[paths]") {
    auto brute = brute_force_endpoint_levels(8);
    auto dp = endpoint_count_levels(8);
    REQUIRE(brute.size() == dp.size());
    for (size_t n = 0; n < dp.size(); ++n) REQUIRE(brute[n] == dp[n]);
}

TEST_CASE("count_by_endpoint examples", "[paths]") {
    EndpointCounts n3 = count_by_endpoint(3);
    REQUIRE(n3.size() == 4);
    CHECK(n3[Composition{1, 1, 1}] == 1);
    CHECK(n3[Composition{1, 2}] == 2);
    CHECK(n3[Composition{2, 1}] == 2);
    CHECK(n3[Composition{3}] == 1);
    CHECK(count_by_endpoint(4)[Composition{2, 2}] == 4);
    EndpointCounts n1 = count_by_endpoint(1);
    REQUIRE(n1.size() == 1);
    CHECK(n1[Composition{1}] == 1);
}

TEST_CASE("count_by_stats examples", "[paths]") {
    StatsCounts n4 = count_by_stats(4);
    StatsCounts expected{{{4, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 6}, {{2, 1}, 11}, {{0, 2}, 4}};
    CHECK(n4 == expected);
    CHECK(count_by_stats(8, 2)[{0, 4}] == 336);
    StatsCounts n0 = count_by_stats(0);
    REQUIRE(n0.size() == 1);
    CHECK(n0[{0, 0}] == 1);
}

TEST_CASE("height-2 statistics concentrate on i + 2j = n", "[paths]") {
    for (int n = 0; n <= 10; ++n)
        for (const auto& [ij, c] : count_by_stats(n, 2)) {
            CHECK(ij.first + 2 * ij.second == n);
            CHECK(c > 0);
        }
}

TEST_CASE("tableau labelling of paths", "[paths]") {
    Tableau rho = path_to_tableau(kRho);
    CHECK(rho == Tableau{{{4}, {2}, {1, 3}}});
    CHECK(rho.shape() == Composition{1, 1, 2});
    CHECK(rho.str() == "[4][2][1 3]");

    CHECK(path_to_tableau({{}, {1}}) == Tableau{{{1}}});
    // the all-ones step labels leftward
    CHECK(path_to_tableau({{}, {1}, {1, 1}}) == Tableau{{{2}, {1}}});
    CHECK_THROWS_AS(path_to_tableau({Composition{1}}), std::invalid_argument);
}

TEST_CASE("tableau peeling", "[paths]") {
    CHECK(tableau_to_path(Tableau{{{4}, {2}, {1, 3}}}) == kRho);

    // [1][2] peels fine but is not the canonical labelling of its path
    try {
        tableau_to_path(Tableau{{{1}, {2}}});
        FAIL("expected NonCanonical");
    } catch (const TableauError& e) {
        CHECK(e.kind == TableauError::Kind::NonCanonical);
    }

    // a height-1 column in the middle can never be inserted
    try {
        tableau_to_path(Tableau{{{1}, {3}, {2}}});
        FAIL("expected IllegalPeel");
    } catch (const TableauError& e) {
        CHECK(e.kind == TableauError::Kind::IllegalPeel);
        CHECK(e.label == 3);  // the first label, peeling downward, that cannot move
    }

    CHECK_THROWS_AS(tableau_to_path(Tableau{{{1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(tableau_to_path(Tableau{{{2, 1}}}), std::invalid_argument);
}

TEST_CASE("necessary bottom-row condition", "[paths]") {
    CHECK(check_necessary_condition(Tableau{{{2}, {1}}}));
    CHECK_FALSE(check_necessary_condition(Tableau{{{1}, {2}}}));
    CHECK(check_necessary_condition(path_to_tableau(kRho)));  // bottom row 4, 2, 1
}

TEST_CASE("bijection round-trips through length 7", "[paths]") {
    for (int n = 0; n <= 7; ++n) {
        auto paths = enumerate_paths(n);
        std::set<std::string> seen;
        for (const StandardPath& p : paths) {
            Tableau t = path_to_tableau(p);
            CHECK(seen.insert(t.str()).second);
            CHECK(check_necessary_condition(t));
            CHECK(tableau_to_path(t) == p);
        }
    }
}

TEST_CASE("necessary is not sufficient at length 5", "[paths]") {
    Tableau witness{{{2}, {4}, {1, 3, 5}}};
    CHECK(check_necessary_condition(witness));
    try {
        tableau_to_path(witness);
        FAIL("expected IllegalPeel");
    } catch (const TableauError& e) {
        CHECK(e.kind == TableauError::Kind::IllegalPeel);
        CHECK(e.label == 4);
    }

    // sweep every labelling of every weight-5 shape
    auto paths5 = enumerate_paths(5);
    std::set<std::string> images;
    for (const StandardPath& p : paths5) images.insert(path_to_tableau(p).str());
    int accepted = 0, passing = 0;
    for (const Tableau& t : all_tableaux(5)) {
        if (check_necessary_condition(t)) ++passing;
        bool ok = true;
        try {
            StandardPath p = tableau_to_path(t);
            CHECK(path_to_tableau(p) == t);
        } catch (const TableauError&) {
            ok = false;
        }
        if (ok) {
            ++accepted;
            CHECK(images.count(t.str()) == 1);
        }
    }
    CHECK(accepted == 103);    // exactly the path images
    CHECK(passing > accepted); // the condition admits impostors
}
