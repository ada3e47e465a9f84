#include "npaths/composition.hpp"
#include "npaths/dot.hpp"
#include "npaths/hasse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace npaths;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("composition basics", "[poset]") {
    Composition empty;
    CHECK(empty.weight() == 0);
    CHECK(empty.length() == 0);
    CHECK(empty.height() == 0);
    CHECK(empty.all_ones());
    CHECK(empty.str() == "()");
    Composition p{1, 1, 2};
    CHECK(p.weight() == 4);
    CHECK(p.length() == 3);
    CHECK(p.width() == 3);
    CHECK(p.height() == 2);
    CHECK(p.ones_count() == 2);
    CHECK(p.big_count() == 1);
    CHECK(p.str() == "112");
    CHECK(p.mirror() == Composition{2, 1, 1});
    CHECK(Composition{1, 10, 2}.str() == "1-10-2");
    CHECK_THROWS_AS(Composition({0, 1}), std::invalid_argument);
    CHECK(Composition{1, 1} < Composition{2});
    CHECK(Composition{2} < Composition{1, 1, 1});
}

TEST_CASE("covers in the restricted poset", "[poset]") {
    CHECK(covers(Poset::N, Composition{}) == std::vector<Composition>{Composition{1}});
    CHECK(covers(Poset::N, Composition{1, 2}) ==
          std::vector<Composition>{{1, 1, 2}, {1, 2, 1}, {1, 3}, {2, 2}});
    // left and right insertion coincide on all ones
    CHECK(covers(Poset::N, Composition{1, 1}) == std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("covers in the comparison poset", "[poset]") {
    auto g = covers(Poset::Gamma, Composition{2, 2});
    CHECK(std::find(g.begin(), g.end(), Composition{2, 1, 2}) != g.end());
    CHECK(covers(Poset::Gamma, Composition{}) == std::vector<Composition>{Composition{1}});
    // the internal insertion after the first part duplicates the left insertion
    CHECK(covers(Poset::Gamma, Composition{1, 2}) == covers(Poset::N, Composition{1, 2}));
}

TEST_CASE("cover set sizes and weights", "[poset]") {
    for (int w = 0; w <= 8; ++w)
        for (const Composition& p : compositions_of(w)) {
            auto cn = covers(Poset::N, p);
            auto cg = covers(Poset::Gamma, p);
            if (p.empty())
                CHECK(cn.size() == 1);
            else if (p.all_ones())
                CHECK(static_cast<int>(cn.size()) == p.length() + 1);
            else
                CHECK(static_cast<int>(cn.size()) == p.length() + 2);
            for (const Composition& q : cn) {
                CHECK(q.weight() == p.weight() + 1);
                bool height_ok = q.height() == p.height() || q.height() == p.height() + 1 ||
                                 q.height() == std::max(p.height(), 1);
                CHECK(height_ok);
                CHECK(std::find(cg.begin(), cg.end(), q) != cg.end());  // N covers embed in Gamma
            }
        }
}

TEST_CASE("reachability", "[poset]") {
    CHECK(leq(Poset::N, Composition{1}, Composition{1, 1, 2}));
    CHECK_FALSE(leq(Poset::N, Composition{2, 2}, Composition{2, 1, 2}));
    CHECK(leq(Poset::Gamma, Composition{2, 2}, Composition{2, 1, 2}));
    CHECK(leq(Poset::N, Composition{1, 2}, Composition{1, 2}));
    CHECK_FALSE(leq(Poset::N, Composition{3}, Composition{1, 1}));
    CHECK_FALSE(leq(Poset::N, Composition{2, 1}, Composition{1, 2}));
}

TEST_CASE("word bijection", "[poset]") {
    CHECK(to_word(Composition{1, 1, 2}).letters == std::vector<int>{1, 1, 2});
    CHECK(to_word(Composition{1, 1, 2}).str() == "x1 x1 x2");
    CHECK(to_word(Composition{}).letters.empty());
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> weight(0, 10);
    for (int iter = 0; iter < 100; ++iter) {
        int w = weight(rng);
        auto all = compositions_of(w);
        const Composition& p = all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
        CHECK(word_to_composition(to_word(p)) == p);
    }
}

TEST_CASE("composition generation", "[poset]") {
    CHECK(compositions_of(0).size() == 1);
    CHECK(compositions_of(4).size() == 8);
    CHECK(compositions_up_to(4).size() == 16);
    auto level = compositions_of(4);
    CHECK(std::is_sorted(level.begin(), level.end()));
}

TEST_CASE("hasse graphs at small weight", "[poset]") {
    HasseGraph n4 = hasse_graph(Poset::N, 4);
    CHECK(n4.nodes.size() == 16);
    CHECK(n4.edges.size() == 24);
    HasseGraph g4 = hasse_graph(Poset::Gamma, 4);
    CHECK(n4.nodes == g4.nodes);
    CHECK(n4.edges == g4.edges);

    HasseGraph n5 = hasse_graph(Poset::N, 5);
    HasseGraph g5 = hasse_graph(Poset::Gamma, 5);
    auto edge = std::make_pair(Composition{2, 2}, Composition{2, 1, 2});
    CHECK(std::find(g5.edges.begin(), g5.edges.end(), edge) != g5.edges.end());
    CHECK(std::find(n5.edges.begin(), n5.edges.end(), edge) == n5.edges.end());

    HasseGraph n0 = hasse_graph(Poset::N, 0);
    CHECK(n0.nodes == std::vector<Composition>{Composition{}});
    CHECK(n0.edges.empty());
}

TEST_CASE("dot export", "[poset]") {
    CHECK(export_dot(hasse_graph(Poset::N, 0)) == "digraph hasse {\n  rankdir=BT;\n  \"()\";\n}\n");
    CHECK(export_dot(hasse_graph(Poset::N, 1)) ==
          "digraph hasse {\n  rankdir=BT;\n  \"()\";\n  \"1\";\n  \"()\" -> \"1\";\n}\n");
    std::string fixture = read_file(std::string(NPATHS_SHARE_DIR) + "/fixtures/hasse_n_w4.dot");
    CHECK(export_dot(hasse_graph(Poset::N, 4)) == fixture);
    std::string g5 = export_dot(hasse_graph(Poset::Gamma, 5));
    CHECK(g5.find("\"22\" -> \"212\";") != std::string::npos);
    std::string n5 = export_dot(hasse_graph(Poset::N, 5));
    CHECK(n5.find("\"22\" -> \"212\";") == std::string::npos);
}
