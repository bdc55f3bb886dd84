#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "graphion/denred.hpp"

#include <random>

using namespace graphion;

namespace {

Multigraph load(const std::string& name) { return read_graph_file(std::string(GRAPHION_DATA_DIR) + "/graphs/" + name); }

bool equal_up_to_sign(const IPoly& a, const IPoly& b) { return a == b || a == -b; }

// one reduction step applied directly to a polynomial, via the discriminant
std::optional<IPoly> reduce_poly_in(const IPoly& p, int var) {
    auto q = coeffs_in(p, var);
    if (q.higher()) return std::nullopt;
    IPoly disc = q.a1 * q.a1 - q.a2 * q.a0 * Int(4);
    auto root = poly_sqrt(disc);
    if (!root) return std::nullopt;
    return canonical_sign(*root);
}

Multigraph random_connected(std::mt19937& rng, int maxv, int maxe) {
    std::uniform_int_distribution<int> nv(4, maxv);
    int n = nv(rng);
    std::vector<Edge> es;
    std::vector<int> vs;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> prev(0, i - 1);
        es.push_back({"t" + std::to_string(i), prev(rng), i});
    }
    int extra = std::max(0, maxe - n + 1);
    std::uniform_int_distribution<int> ne(2, std::max(2, extra));
    int k = ne(rng);
    for (int i = 0; i < k; ++i) {
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        es.push_back({"x" + std::to_string(i), a, b});
    }
    return Multigraph(vs, es);
}

}  // namespace

TEST_CASE("d5 is the five invariant") {
    auto g = load("wheel4.g");
    auto ring = g.edge_ring();
    std::array<std::string, 5> edges{"s1", "s2", "s3", "r12", "r23"};
    auto st = d5(g, edges, ring);
    CHECK(st.poly == five_invariant(g, edges, ring));
    CHECK(st.j() == 5);
    CHECK(st.status == ReductionStatus::running);
    // colour count: 7 when the seed isolates no vertex (s4, r12, r34 remain
    // and cover all five vertices)
    auto st2 = d5(g, {"s1", "s2", "s3", "r23", "r41"}, ring);
    CHECK(st2.isolated_vertices() == 0);
    CHECK(st2.colour_count() == 7);
}

TEST_CASE("the three D4 choices give one D5 up to sign") {
    std::mt19937 rng(101);
    int done = 0;
    while (done < 10) {
        auto g = random_connected(rng, 6, 9);
        if (!g.connected() || g.n_edges() < 5) continue;
        std::vector<std::string> labels;
        for (const auto& e : g.edges()) labels.push_back(e.label);
        std::shuffle(labels.begin(), labels.end(), rng);
        std::string i = labels[0], j = labels[1], k = labels[2], l = labels[3], m = labels[4];
        auto ring = g.edge_ring();
        int mv = ring->find(Multigraph::var_name(m));
        IPoly ref = five_invariant(g, {i, j, k, l, m}, ring);
        ++done;
        IPoly d4a = dodgson(g, {{i, j}, {k, l}, {}}, ring) * dodgson(g, {{i, k}, {j, l}, {}}, ring);
        IPoly d4b = dodgson(g, {{i, j}, {k, l}, {}}, ring) * dodgson(g, {{i, l}, {j, k}, {}}, ring);
        IPoly d4c = dodgson(g, {{i, k}, {j, l}, {}}, ring) * dodgson(g, {{i, l}, {j, k}, {}}, ring);
        for (const IPoly& d4 : {d4a, d4b, d4c}) {
            auto d5v = reduce_poly_in(d4, mv);
            REQUIRE(d5v.has_value());
            CHECK(equal_up_to_sign(*d5v, ref));
        }
    }
}

TEST_CASE("linear step returns the coefficient") {
    auto ring = std::make_shared<Ring>();
    for (auto n : {"a", "b", "c"}) ring->add(n);
    IPoly p = parse_poly(ring, "(b+c)*a + b*c");
    auto r = reduce_poly_in(p, 0);
    REQUIRE(r.has_value());
    CHECK(*r == parse_poly(ring, "b+c"));
}

TEST_CASE("reduction on the wheel") {
    auto g = load("wheel4.g");
    auto ring = g.edge_ring();
    SUBCASE("a full order reduces to the end or to zero") {
        auto states = reduce_sequence(g, {"s1", "r12", "s2", "r23", "s3", "r34", "s4", "r41"}, ring);
        CHECK(states.back().status != ReductionStatus::ended_stuck);
    }
    SUBCASE("order robustness: complete orders agree up to sign at each depth") {
        std::vector<std::string> order1{"s1", "r12", "s2", "r23", "s3", "r34", "s4", "r41"};
        std::vector<std::string> order2{"r12", "s2", "s1", "r41", "s4", "r34", "s3", "r23"};
        auto st1 = reduce_sequence(g, order1, ring);
        auto st2 = reduce_sequence(g, order2, ring);
        if (st1.back().status != ReductionStatus::ended_stuck &&
            st2.back().status != ReductionStatus::ended_stuck &&
            st1.back().j() == st2.back().j()) {
            CHECK(equal_up_to_sign(st1.back().poly, st2.back().poly));
        }
    }
    SUBCASE("colour count increments per step") {
        auto st = d5(g, {"s1", "s2", "s3", "r12", "r23"}, ring);
        int c = st.colour_count();
        auto st2 = reduce_step(st, "r34");
        if (st2.status == ReductionStatus::running) {
            int iso_diff = st2.isolated_vertices() - st.isolated_vertices();
            CHECK(st2.colour_count() == c + 1 - 2 * iso_diff);
        }
    }
}

TEST_CASE("triangle and 3-valent seeds factor for free") {
    auto g = load("k5dec.g");  // K4: every vertex 3-valent, every face a triangle
    auto ring = g.edge_ring();
    SUBCASE("triangle seed: no constant term in the third edge") {
        // triangle {e01, e02, e12}; seed holds e01, e02; third is e12
        auto st = d5(g, {"e01", "e02", "e03", "e13", "e23"}, ring);
        REQUIRE(st.status == ReductionStatus::running);
        auto q = coeffs_in(st.poly, ring->find("e12"));
        CHECK(q.a0.is_zero());
    }
    SUBCASE("3-valent seed: no quadratic term in the remaining incident edge") {
        // vertex 1 has edges e01, e12, e13; seed holds e01, e12
        auto st = d5(g, {"e01", "e12", "e02", "e03", "e23"}, ring);
        REQUIRE(st.status == ReductionStatus::running);
        auto q = coeffs_in(st.poly, ring->find("e13"));
        CHECK(q.a2.is_zero());
    }
}

TEST_CASE("free d7 for adjacent 3-valent vertices") {
    // wheel4's rim vertices 1 and 2 are adjacent and 3-valent: joining edge
    // r12, side edges s1, r41 at vertex 1 and s2, r23 at vertex 2
    auto g = load("wheel4.g");
    auto ring = g.edge_ring();
    std::array<std::string, 5> shape{"r12", "s1", "r41", "s2", "r23"};
    auto [f1, f2] = free_d7(g, shape, "s3", "s4", ring);
    SUBCASE("product equals the direct D7") {
        auto states = reduce_sequence(g, {"s1", "r41", "r23", "s3", "s4", "r12", "s2"}, ring);
        REQUIRE(states.back().j() == 7);
        REQUIRE(states.back().status != ReductionStatus::ended_stuck);
        CHECK(equal_up_to_sign(states.back().poly, canonical_sign(f1 * f2)));
    }
    SUBCASE("cut 4 contract 5 = cut 5 contract 4") {
        IPoly lhs = dodgson(g, {{"r12", "s1", "r23", "s3"}, {"r12", "r41", "r23", "s4"}, {"s2"}}, ring);
        IPoly rhs = dodgson(g, {{"r12", "s1", "s2", "s3"}, {"r12", "r41", "s2", "s4"}, {"r23"}}, ring);
        CHECK(equal_up_to_sign(lhs, rhs));
    }
    SUBCASE("second factor is the Dodgson of the stripped graph") {
        Multigraph h = g.delete_vertex(1).delete_vertex(2);
        CHECK(equal_up_to_sign(f2, dodgson(h, {{"s3"}, {"s4"}, {}}, ring)));
    }
    SUBCASE("shape validation") {
        CHECK_THROWS(free_d7(g, {"s1", "r12", "r41", "s2", "r23"}, "s3", "s4", ring));
    }
}

TEST_CASE("suggest_order finds workable orders") {
    SUBCASE("K4") {
        auto g = load("k5dec.g");
        auto sug = suggest_order(g);
        CHECK(sug.reached >= 6);  // all edges of K4
        CHECK(sug.order.size() >= 5);
        CHECK(sug.tags.size() == sug.order.size());
    }
    SUBCASE("wheel4") {
        auto g = load("wheel4.g");
        auto sug = suggest_order(g);
        CHECK(sug.reached >= 7);
        auto states = reduce_sequence(g, sug.order);
        CHECK((int)states.back().reduced.size() == sug.reached);
    }
    SUBCASE("too few edges rejected") {
        CHECK_THROWS(suggest_order(load("hat.g")));
    }
}

TEST_CASE("change of variables validation") {
    auto g = load("wheel4.g");
    auto ring = g.edge_ring();
    auto st = d5(g, {"s1", "s2", "s3", "r12", "r23"}, ring);
    CovPartition part;
    part.g1 = {"s1", "s2", "s3", "r12", "r23"};
    part.g2 = {"r34"};
    part.g3 = {"s4", "r41"};
    SUBCASE("reduced-set mismatch") {
        CovPartition bad = part;
        bad.g1 = {"s1", "s2", "s3", "r12", "r34"};
        bad.g2 = {"r23"};
        CHECK_THROWS(change_of_variables(st, bad));
    }
    SUBCASE("partition must cover the edges") {
        CovPartition bad = part;
        bad.g3 = {"s4"};
        CHECK_THROWS(change_of_variables(st, bad));
    }
    SUBCASE("bookkeeping terms") {
        auto res = change_of_variables(st, part);
        CHECK(res.n_g1 == 5);
        CHECK(res.n_g2 == 1);
        // shared vertices of G1 u G2 and G3
        CHECK(res.two_n == 2 * (int)res.shared_vertices.size());
        CHECK(!res.q.is_zero());
    }
}

TEST_CASE("sqrt of the D4 discriminant is the five invariant (hat + edge)") {
    // hat graph with one appended edge to make five edges
    Multigraph g({0, 1, 2}, {{"a", 0, 2}, {"b", 1, 2}, {"c", 0, 1}, {"d", 0, 1}, {"e", 1, 2}});
    auto ring = g.edge_ring();
    IPoly d4 = dodgson(g, {{"a", "b"}, {"c", "d"}, {}}, ring) * dodgson(g, {{"a", "c"}, {"b", "d"}, {}}, ring);
    auto q = coeffs_in(d4, ring->find("e"));
    REQUIRE(!q.higher());
    IPoly disc = q.a1 * q.a1 - q.a2 * q.a0 * Int(4);
    auto root = poly_sqrt(disc);
    REQUIRE(root.has_value());
    CHECK(equal_up_to_sign(canonical_sign(*root), five_invariant(g, {"a", "b", "c", "d", "e"}, ring)));
}
