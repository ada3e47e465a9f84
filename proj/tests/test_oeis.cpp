#include "npaths/height2.hpp"
#include "npaths/oeis.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace npaths;

TEST_CASE("b-file parsing", "[oeis]") {
    oeis::BFile b = oeis::parse_bfile("0 1\n1 1\n2 4\n3 30\n", "A001761");
    CHECK(b.offset == 0);
    REQUIRE(b.terms.size() == 4);
    CHECK(b.terms[3] == 30);

    oeis::BFile with_comments = oeis::parse_bfile("# header\n\n5 120  # inline\n6 720\n", "A000142");
    CHECK(with_comments.offset == 5);
    CHECK(with_comments.terms == std::vector<Int>{120, 720});

    CHECK_THROWS_WITH(oeis::parse_bfile("0 1\n2 4\n", "A0"), Catch::Matchers::ContainsSubstring("non-consecutive"));
    CHECK_THROWS_WITH(oeis::parse_bfile("0\n", "A0"), Catch::Matchers::ContainsSubstring("without a value"));
    CHECK_THROWS_WITH(oeis::parse_bfile("zero 1\n", "A0"), Catch::Matchers::ContainsSubstring("malformed"));
    CHECK_THROWS_WITH(oeis::parse_bfile("0 abc\n", "A0"), Catch::Matchers::ContainsSubstring("bad integer"));
    CHECK_THROWS_WITH(oeis::parse_bfile("0 1 junk\n", "A0"), Catch::Matchers::ContainsSubstring("trailing"));
    CHECK_THROWS_WITH(oeis::parse_bfile("# only comments\n", "A0"), Catch::Matchers::ContainsSubstring("empty"));
}

TEST_CASE("b-file naming", "[oeis]") {
    CHECK(oeis::bfile_name("A001761") == "b001761.txt");
    CHECK(oeis::bfile_url("A001761") == "https://oeis.org/A001761/b001761.txt");
    CHECK_THROWS_AS(oeis::bfile_name("1761"), std::invalid_argument);
}

TEST_CASE("term comparison with offset alignment", "[oeis]") {
    oeis::BFile b = oeis::parse_bfile("0 1\n1 1\n2 4\n3 30\n4 336\n", "A001761");

    std::vector<Int> produced{1, 1, 4, 30};
    auto r = oeis::compare_terms(b, produced, 0);
    CHECK(r.match);
    CHECK(r.compared == 4);

    // shifted sequence: c_{1,n} = a(n+1)
    std::vector<Int> shifted{1, 4, 30, 336};
    CHECK(oeis::compare_terms(b, shifted, 1).match);
    CHECK_FALSE(oeis::compare_terms(b, shifted, 0).match);

    auto empty = oeis::compare_terms(b, {}, 0);
    CHECK(empty.match);
    CHECK(empty.compared == 0);

    std::vector<Int> perturbed{1, 1, 5, 30};
    auto bad = oeis::compare_terms(b, perturbed, 0);
    CHECK_FALSE(bad.match);
    CHECK(bad.first_mismatch_index == 2);

    std::vector<Int> too_long{1, 1, 4, 30, 336, 5040};
    auto overrun = oeis::compare_terms(b, too_long, 0);
    CHECK_FALSE(overrun.match);
    CHECK(overrun.first_mismatch_index == 5);

    // indices before the b-file offset are missing terms, not matches
    oeis::BFile tail = oeis::parse_bfile("5 120\n6 720\n", "A000142");
    auto before = oeis::compare_terms(tail, {24, 120, 720}, 4);
    CHECK_FALSE(before.match);
    CHECK(before.first_mismatch_index == 4);
}

TEST_CASE("bundled fixture parses and matches the closed form", "[oeis]") {
    auto b = oeis::load_cached_bfile(std::string(NPATHS_SHARE_DIR) + "/oeis", "A001761");
    REQUIRE(b.has_value());
    CHECK(b->offset == 0);
    REQUIRE(b->terms.size() == 25);
    std::vector<Int> c0;
    for (int n = 0; n < 25; ++n) c0.push_back(c0_closed_form(n));
    CHECK(oeis::compare_terms(*b, c0, 0).match);
    CHECK_FALSE(oeis::load_cached_bfile(std::string(NPATHS_SHARE_DIR) + "/oeis", "A000001").has_value());
}
