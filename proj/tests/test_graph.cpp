#include <doctest.h>

#include "fixtures.hpp"
#include "walkcent/enumerate.hpp"
#include "walkcent/graph.hpp"

using namespace walkcent;

TEST_CASE("graph6 hand-decoded examples") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.adjacency()(0, 1) == 1.0);

    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6("@").order() == 1);

    // worked example from the format specification: n=5,
    // edges {0,2},{0,4},{1,3},{3,4}
    Graph g = parse_graph6("DQc");
    CHECK(g.order() == 5);
    CHECK(g.adjacency()(0, 2) == 1.0);
    CHECK(g.adjacency()(0, 4) == 1.0);
    CHECK(g.adjacency()(1, 3) == 1.0);
    CHECK(g.adjacency()(3, 4) == 1.0);
    CHECK(g.adjacency().sum() == 8.0);

    CHECK(to_graph6(Graph::simple(2, {{0, 1}})) == "A_");
    CHECK(to_graph6(Graph::simple(1, {})) == "@");
    CHECK(to_graph6(g) == "DQc");
}

TEST_CASE("graph6 malformed inputs carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);

    try {
        parse_graph6(" A_");  // space is below the graph6 byte range
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 0);
    }
    try {
        parse_graph6("D");  // order 5 but no payload
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    try {
        parse_graph6("A_x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);  // trailing garbage
    }
    // nonzero padding bits
    CHECK_THROWS_AS(parse_graph6("A~"), ParseError);
    // long form below 63 is non-canonical
    CHECK_THROWS_AS(parse_graph6("~??B"), ParseError);
}

TEST_CASE("graph6 long form") {
    Graph g = Graph::simple(63, {{0, 62}});
    std::string s = to_graph6(g);
    CHECK(s.size() == 4 + (63 * 62 / 2 + 5) / 6);
    Graph back = parse_graph6(s);
    CHECK(back.order() == 63);
    CHECK(back.adjacency()(0, 62) == 1.0);
    CHECK(to_graph6(back) == s);
}

TEST_CASE("graph6 round-trip over every class on up to 8 vertices") {
    long seen = 0;
    for (int n = 1; n <= 8; ++n) {
        enumerate_graphs(n, {}, [&](const Graph& g) {
            std::string s = to_graph6(g);
            Graph back = parse_graph6(s);
            CHECK(to_graph6(back) == s);
            CHECK(back.adjacency() == g.adjacency());
            ++seen;
        });
    }
    // labeled graphs widen the corpus beyond canonical representatives
    EnumerateOptions labeled;
    labeled.canonical_dedup = false;
    for (int n = 4; n <= 5; ++n)
        enumerate_graphs(n, labeled, [&](const Graph& g) {
            std::string s = to_graph6(g);
            CHECK(parse_graph6(s).adjacency() == g.adjacency());
            ++seen;
        });
    CHECK(seen > 1000);
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("2\n1 2\n");
    CHECK(g.order() == 2);
    CHECK(g.kind() == GraphKind::SimpleUnweighted);
    CHECK(g.adjacency()(0, 1) == 1.0);

    SUBCASE("fig 1 transcription") {
        Graph fig1 = parse_edge_list(
            "9\n1 2\n1 3\n1 4\n2 4\n3 4\n1 5\n5 6\n6 7\n5 7\n7 8\n1 8\n8 9\n");
        CHECK(fig1.order() == 9);
        CHECK(degree(fig1, 0) == 5.0);
        CHECK(fig1.adjacency() == fixtures::fig1().adjacency());
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_edge_list("3\n1 2\n1 2\n"), ParseError);  // duplicate
        CHECK_THROWS_AS(parse_edge_list("3\n1 2\n2 1\n"), ParseError);  // reversed duplicate
        CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), ParseError);       // self-loop
        CHECK_THROWS_AS(parse_edge_list("3\n1 4\n"), ParseError);       // out of range
        CHECK_THROWS_AS(parse_edge_list("3\n1 2 -1\n"), ParseError);    // nonpositive weight
        CHECK_THROWS_AS(parse_edge_list("3\n1 2 0\n"), ParseError);
        CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    }
    SUBCASE("weights force the weighted kind") {
        Graph w = parse_edge_list("3\n1 2 2.5\n2 3\n");
        CHECK(w.kind() == GraphKind::WeightedUndirected);
        CHECK(w.adjacency()(0, 1) == 2.5);
        CHECK(w.adjacency()(1, 2) == 1.0);
        CHECK_FALSE(w.integral_weights());
    }
}

TEST_CASE("degree") {
    CHECK(degree(fixtures::fig4(), 7) == 3.0);
    CHECK(degree(fixtures::edgeless(4), 2) == 0.0);
    CHECK_THROWS_AS(degree(fixtures::edgeless(4), 4), std::invalid_argument);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(fixtures::fig2()));
    CHECK(is_connected(fixtures::path(5)));
    CHECK_FALSE(is_connected(fixtures::edgeless(2)));
    CHECK(is_connected(fixtures::edgeless(1)));
    CHECK_THROWS_AS(is_connected(fixtures::rotation3()), std::invalid_argument);
}

TEST_CASE("degree sum equals twice the edge weight") {
    Graph g = parse_edge_list("4\n1 2 0.5\n2 3 1.5\n3 4 2\n");
    double total = 0;
    for (int i = 0; i < g.order(); ++i) total += degree(g, i);
    CHECK(total == doctest::Approx(2 * (0.5 + 1.5 + 2)).epsilon(1e-12));
}

TEST_CASE("kind validation") {
    Eigen::MatrixXd bad(2, 2);
    bad << 0, 1, 0, 0;  // not symmetric
    CHECK_THROWS_AS(Graph::simple(bad), std::invalid_argument);
    CHECK_THROWS_AS(Graph::weighted(bad), std::invalid_argument);
    CHECK_NOTHROW(Graph::general(bad));
    CHECK_THROWS_AS(to_graph6(fixtures::rotation3()), std::invalid_argument);
    Eigen::MatrixXd neg(2, 2);
    neg << 0, -1, -1, 0;
    CHECK_THROWS_AS(Graph::weighted(neg), std::invalid_argument);
}
