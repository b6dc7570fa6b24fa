#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "walkcent/walks.hpp"

using namespace walkcent;

TEST_CASE("walk table basics") {
    WalkTable k2 = walk_table(fixtures::complete(2));
    CHECK(k2.at(0, 0) == 1);
    CHECK(k2.at(0, 1) == 1);
    CHECK(k2.at(1, 0) == 0);

    WalkTable k3 = walk_table(fixtures::complete(3));
    for (int i = 0; i < 3; ++i) CHECK(k3.at(2, i) == 2);  // degree row
}

TEST_CASE("walk table equals brute-force walk enumeration") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracles::random_graph(5, 0.5, rng);
        WalkTable table = walk_table(g);
        for (int i = 0; i < 5; ++i)
            for (int r = 0; r < 5; ++r)
                CHECK(table.at(r, i) == oracles::count_closed_walks(g, i, r));
    }
}

TEST_CASE("walk table rejects non-integer weights") {
    Graph w = parse_edge_list("3\n1 2 0.5\n");
    CHECK_THROWS_AS(walk_table(w), std::invalid_argument);
    CHECK_THROWS_AS(walk_table(fixtures::rotation3()), std::invalid_argument);
    // integer weights stay on the exact path
    Graph iw = parse_edge_list("3\n1 2 2\n2 3 3\n");
    WalkTable t = walk_table(iw);
    CHECK(t.at(2, 1) == 13);  // 2^2 + 3^2
}

TEST_CASE("fig 4 vertices 1 and 8 are cospectral") {
    Graph g = fixtures::fig4();
    WalkTable table = walk_table(g);
    for (int r = 0; r < 8; ++r) CHECK(table.at(r, 0) == table.at(r, 7));
    CHECK(are_cospectral(g, 0, 7));
}

TEST_CASE("cospectrality basics") {
    Graph p3 = fixtures::path(3);
    CHECK_FALSE(are_cospectral(p3, 0, 1));  // endpoint vs midpoint
    CHECK(are_cospectral(p3, 0, 0));
    CHECK(are_cospectral(p3, 0, 2));  // swapped by the path-reversal automorphism
}

TEST_CASE("cospectral classes") {
    auto c5 = cospectral_classes(fixtures::cycle(5));
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].size() == 5);

    auto p3 = cospectral_classes(fixtures::path(3));
    REQUIRE(p3.size() == 2);
    CHECK(p3[0] == std::vector<int>{0, 2});
    CHECK(p3[1] == std::vector<int>{1});

    // vertices 1 and 2 are twins, so the class of the interesting pair (1,8)
    // is {1,2,8} in 1-based labels
    auto fig4 = cospectral_classes(fixtures::fig4());
    bool found = false;
    for (const auto& cls : fig4) {
        bool has0 = false, has7 = false;
        for (int v : cls) {
            has0 = has0 || v == 0;
            has7 = has7 || v == 7;
        }
        found = found || (has0 && has7);
    }
    CHECK(found);
}

TEST_CASE("walk regularity") {
    CHECK(is_walk_regular(fixtures::complete(4)));
    CHECK(is_walk_regular(Graph::simple(1, {})));
    CHECK_FALSE(is_walk_regular(fixtures::fig1()));  // degrees differ
}

TEST_CASE("cospectrality is an equivalence relation with equal degrees") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(8, 0.45, rng);
        WalkTable t = walk_table(g);
        for (int i = 0; i < 8; ++i) {
            CHECK(are_cospectral(t, i, i));
            for (int j = 0; j < 8; ++j) {
                CHECK(are_cospectral(t, i, j) == are_cospectral(t, j, i));
                if (are_cospectral(t, i, j)) CHECK(degree(g, i) == degree(g, j));
                for (int k = 0; k < 8; ++k)
                    if (are_cospectral(t, i, j) && are_cospectral(t, j, k))
                        CHECK(are_cospectral(t, i, k));
            }
        }
    }
}
