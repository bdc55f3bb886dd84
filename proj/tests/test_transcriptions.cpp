#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "graphion/denred.hpp"
#include "graphion/graphpoly.hpp"

using namespace graphion;

namespace {
Multigraph load(const std::string& name) { return read_graph_file(std::string(GRAPHION_DATA_DIR) + "/graphs/" + name); }

bool equal_up_to_sign(const IPoly& a, const IPoly& b) { return a == b || a == -b; }
}  // namespace

TEST_CASE("gbs.g structure") {
    auto g = load("gbs.g");
    CHECK(g.n_vertices() == 9);
    CHECK(g.n_edges() == 16);
    CHECK(g.betti() == 8);
    CHECK(is_primitive_4point(g).primitive);
    auto completion = complete_4point(g);
    REQUIRE(completion.has_value());
    CHECK(internally_k_edge_connected(*completion, 6));
    // spare 3-valent vertex carrying edges 14, 15, 16
    const Edge &e14 = g.edge("14"), &e15 = g.edge("15"), &e16 = g.edge("16");
    std::set<int> hubs;
    for (int v : {e14.u, e14.v})
        if ((e15.u == v || e15.v == v) && (e16.u == v || e16.v == v)) hubs.insert(v);
    CHECK(hubs.size() == 1);
}

TEST_CASE("gbs.g reduction hits the published factorization") {
    auto g = load("gbs.g");
    auto ring = g.edge_ring();
    auto P = [&](const std::string& s) { return parse_poly(ring, s); };
    std::vector<std::string> order;
    for (int i = 1; i <= 10; ++i) order.push_back(std::to_string(i));
    auto states = reduce_sequence(g, order, ring);
    REQUIRE(states.back().j() == 10);
    REQUIRE(states.back().status == ReductionStatus::running);
    IPoly Q = P("a14*a15 + a15*a16 + a14*a16");
    IPoly A = Q + P("a12*a13 + a16*a12 + a14*a12 + a15*a13 + a14*a13");
    IPoly B = P("a13") * (Q + P("a16*a12 + a14*a12"));
    IPoly C = -P("a13*a15");
    IPoly D = P("a12") * (Q + P("a13*a16"));
    CHECK(equal_up_to_sign(states.back().poly, (A * P("a11") + B) * (C * P("a11") + D)));
    // three vertices become isolated over the first 11 reductions
    auto st11 = reduce_step(states.back(), "11");
    CHECK(st11.isolated_vertices() == 3);
    CHECK(st11.colour_count() == 7);
}

TEST_CASE("gbs.g suggested orders reach at least 11 reductions") {
    auto g = load("gbs.g");
    auto sug = suggest_order(g);
    CHECK(sug.reached >= 11);
}

TEST_CASE("p838.g and p839.g structures") {
    for (const std::string name : {std::string("p838"), std::string("p839")}) {
        auto g = load(name + ".g");
        CHECK(g.n_vertices() == 9);
        CHECK(g.n_edges() == 16);
        CHECK(is_primitive_4point(g).primitive);
        auto ring = g.edge_ring();
        Partition p;
        const Edge& e1 = g.edge("1");
        const Edge& e2 = g.edge("2");
        // star feet: the ends of 1,2,3 away from the shared hub
        int hub = (e2.u == e1.u || e2.v == e1.u) ? e1.u : e1.v;
        for (const char* lbl : {"1", "2", "3"}) {
            const Edge& e = g.edge(lbl);
            p.parts.push_back({e.u == hub ? e.v : e.u});
        }
        Multigraph star({hub, p.parts[0][0], p.parts[1][0], p.parts[2][0]},
                        {g.edge("1"), g.edge("2"), g.edge("3")});
        CHECK(forest_poly(star, p, ring) == parse_poly(ring, "a1*a2 + a1*a3 + a2*a3"));
    }
}

TEST_CASE("p9172.g structure and factors") {
    auto g = load("p9172.g");
    CHECK(g.n_vertices() == 10);
    CHECK(g.n_edges() == 18);
    CHECK(g.betti() == 9);
    CHECK(is_primitive_4point(g).primitive);
    // the four 3-valent vertices pair up via joining edges
    auto deg = g.degrees();
    std::vector<int> threes;
    for (size_t i = 0; i < deg.size(); ++i)
        if (deg[i] == 3) threes.push_back(g.vertices()[i]);
    REQUIRE(threes.size() == 4);
    int joins = 0;
    for (const auto& e : g.edges()) {
        bool u3 = std::find(threes.begin(), threes.end(), e.u) != threes.end();
        bool v3 = std::find(threes.begin(), threes.end(), e.v) != threes.end();
        if (u3 && v3) ++joins;
    }
    CHECK(joins >= 2);
}
