#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "copgeo/graph.hpp"

using namespace copgeo;

TEST_CASE("basic graph invariants") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 2);
    CHECK(g.is_connected());
    CHECK_NOTHROW(g.check_valid());
    CHECK_THROWS(g.add_edge(2, 2));
    CHECK_THROWS(g.add_edge(0, 1));
    CHECK_THROWS(g.add_edge(0, 4));
}

TEST_CASE("named graphs") {
    CHECK(path_graph(10).num_edges() == 9);
    CHECK(cycle_graph(5).num_edges() == 5);
    CHECK(complete_graph(5).num_edges() == 10);
    CHECK(star_graph(5).num_vertices() == 6);
    Graph p = petersen_graph();
    CHECK(p.num_vertices() == 10);
    CHECK(p.num_edges() == 15);
    CHECK(p.min_degree() == 3);
    CHECK(p.max_degree() == 3);
    CHECK(girth(p) == 5);
    Graph d = dodecahedron_graph();
    CHECK(d.num_vertices() == 20);
    CHECK(d.num_edges() == 30);
    CHECK(d.min_degree() == 3);
    CHECK(d.max_degree() == 3);
    CHECK(d.is_connected());
    CHECK(girth(d) == 5);
}

TEST_CASE("subdivide counts and labels") {
    Graph k2 = complete_graph(2);
    Graph s1 = subdivide(k2, 1);
    CHECK(s1.num_vertices() == 2);
    CHECK(s1.num_edges() == 1);

    Graph c3 = cycle_graph(3);
    Graph c6 = subdivide(c3, 2);
    CHECK(c6.num_vertices() == 6);
    CHECK(c6.num_edges() == 6);
    CHECK(girth(c6) == 6);

    Graph d440 = subdivide(dodecahedron_graph(), 15);
    CHECK(d440.num_vertices() == 440);
    CHECK(d440.num_edges() == 450);
    CHECK(girth(d440) == 75);
    CHECK_NOTHROW(d440.check_valid());

    // every subdivision vertex has degree 2 and a (edge,pos) label
    int subcount = 0;
    for (int v = 0; v < d440.num_vertices(); ++v) {
        if (d440.labels[v].kind == VertexLabel::Kind::Subdivision) {
            ++subcount;
            CHECK(d440.degree(v) == 2);
            CHECK(d440.labels[v].b >= 1);
            CHECK(d440.labels[v].b <= 14);
        }
    }
    CHECK(subcount == 420);
    CHECK_THROWS(subdivide(k2, 0));
}

TEST_CASE("subdivide generic counts property") {
    for (int l = 1; l <= 4; ++l) {
        Graph g = petersen_graph();
        Graph s = subdivide(g, l);
        CHECK(s.num_vertices() == g.num_vertices() + g.num_edges() * (l - 1));
        CHECK(s.num_edges() == g.num_edges() * l);
        if (l > 1) CHECK(girth(s) == l * girth(g));
        CHECK_NOTHROW(s.check_valid());
    }
}

TEST_CASE("clique substitution") {
    // P_3 -> P_4
    Graph p3 = path_graph(3);
    Graph kp3 = clique_substitute(p3);
    CHECK(kp3.num_vertices() == 4);
    CHECK(kp3.num_edges() == 3);
    CHECK(kp3.max_degree() == 2);

    Graph k4 = complete_graph(4);
    Graph kk4 = clique_substitute(k4);
    CHECK(kk4.num_vertices() == 12);
    CHECK(kk4.num_edges() == 18);

    Graph c5 = cycle_graph(5);
    Graph kc5 = clique_substitute(c5);
    CHECK(kc5.num_vertices() == 10);
    CHECK(kc5.num_edges() == 10);
    CHECK(girth(kc5) == 10);  // C_10

    // structure: each port has exactly one neighbor outside its knot
    Graph p = petersen_graph();
    Graph kp = clique_substitute(p);
    CHECK(kp.num_vertices() == 2 * p.num_edges());
    int expect_edges = p.num_edges();
    for (int v = 0; v < p.num_vertices(); ++v) {
        int d = p.degree(v);
        expect_edges += d * (d - 1) / 2;
    }
    CHECK(kp.num_edges() == expect_edges);
    for (int v = 0; v < kp.num_vertices(); ++v) {
        int outside = 0;
        for (int u : kp.neighbors(v))
            if (kp.labels[u].a != kp.labels[v].a) ++outside;
        CHECK(outside == 1);
    }
    // every knot induces a clique
    std::set<int> knots;
    for (auto& l : kp.labels) knots.insert(l.a);
    for (int kn : knots) {
        std::vector<int> members;
        for (int v = 0; v < kp.num_vertices(); ++v)
            if (kp.labels[v].a == kn) members.push_back(v);
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                CHECK(kp.has_edge(members[i], members[j]));
    }
}

TEST_CASE("girth") {
    Graph tree = star_graph(4);
    CHECK(girth(tree) == kInfiniteGirth);
    CHECK(girth(complete_graph(3)) == 3);
    CHECK(girth(complete_graph(5)) == 3);
    CHECK(girth(cycle_graph(9)) == 9);
}

TEST_CASE("girth lower bound") {
    CHECK(girth_lower_bound(dodecahedron_graph()) == 3);
    CHECK(girth_lower_bound(petersen_graph()) == 3);
    CHECK(girth_lower_bound(complete_graph(4)) == 1);
    CHECK(girth_lower_bound(path_graph(5)) == 1);  // infinite girth, min degree 1
    Graph two(2);  // disconnected
    CHECK_THROWS(girth_lower_bound(two));
}

TEST_CASE("dismantlable") {
    CHECK(is_dismantlable(path_graph(7)));
    CHECK(is_dismantlable(complete_graph(6)));
    CHECK(is_dismantlable(star_graph(9)));
    CHECK(!is_dismantlable(cycle_graph(4)));
    CHECK(!is_dismantlable(cycle_graph(5)));
    CHECK(!is_dismantlable(petersen_graph()));
    CHECK(is_dismantlable(cycle_graph(3)));
}
