#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "graphion/chord.hpp"

#include <functional>
#include <set>

using namespace graphion;

namespace {

// independent oracle: enumerate every perfect matching of {1..2n}, filter by
// intersection-graph connectivity
int count_connected_by_filter(int n) {
    std::vector<std::pair<int, int>> chords;
    std::vector<char> used(2 * n + 1, 0);
    int count = 0;
    std::function<void()> rec = [&]() {
        int p = 1;
        while (p <= 2 * n && used[p]) ++p;
        if (p > 2 * n) {
            // connectivity via DFS over crossings
            std::vector<char> seen(n, 0);
            std::function<void(int)> dfs = [&](int i) {
                seen[i] = 1;
                for (int j = 0; j < n; ++j)
                    if (!seen[j] && chords_cross(chords[i], chords[j])) dfs(j);
            };
            dfs(0);
            bool conn = true;
            for (int i = 0; i < n; ++i)
                if (!seen[i]) conn = false;
            if (conn) ++count;
            return;
        }
        used[p] = 1;
        for (int q = p + 1; q <= 2 * n; ++q) {
            if (used[q]) continue;
            used[q] = 1;
            chords.push_back({p, q});
            rec();
            chords.pop_back();
            used[q] = 0;
        }
        used[p] = 0;
    };
    rec();
    return count;
}

}  // namespace

TEST_CASE("connected diagram counts match the matching filter") {
    // A000699-type counts: 1, 1, 4, 27, 248
    int expected[] = {0, 1, 1, 4, 27, 248};
    for (int n = 1; n <= 5; ++n) {
        auto all = generate_connected(n);
        CHECK((int)all.size() == expected[n]);
        CHECK((int)all.size() == count_connected_by_filter(n));
        std::set<std::string> uniq;
        for (const auto& c : all) uniq.insert(c.str());
        CHECK((int)uniq.size() == (int)all.size());
    }
    CHECK_THROWS_AS((void)generate_connected(9), guard_error);
    CHECK_THROWS(generate_connected(0));
}

TEST_CASE("diagram identity string and parsing") {
    auto c = ChordDiagram::parse("(1,3)(2,5)(4,6)");
    CHECK(c.n == 3);
    CHECK(c.str() == "(1,3)(2,5)(4,6)");
    CHECK_THROWS(ChordDiagram::parse("(1,2)(2,3)"));
}

TEST_CASE("intersection graph") {
    SUBCASE("crossing pair: single arc 1 -> 2") {
        auto c = ChordDiagram::parse("(1,3)(2,4)");
        auto g = intersection_graph(c);
        REQUIRE(g.arcs.size() == 1);
        CHECK(g.arcs[0] == std::make_pair(1, 2));
        CHECK(diagram_connected(c));
    }
    SUBCASE("nested pair: no arcs, disconnected") {
        auto c = ChordDiagram::parse("(1,4)(2,3)");
        CHECK(intersection_graph(c).arcs.empty());
        CHECK(!diagram_connected(c));
    }
}

TEST_CASE("intersection order") {
    SUBCASE("crossing pair") {
        auto c = ChordDiagram::parse("(1,3)(2,4)");
        auto ord = intersection_order(c);
        CHECK(ord == std::vector<int>{0, 1});
    }
    SUBCASE("root first, every chord exactly once") {
        for (int n = 1; n <= 5; ++n)
            for (const auto& c : generate_connected(n)) {
                auto ord = intersection_order(c);
                CHECK((int)ord.size() == n);
                CHECK(c.chords[ord[0]].first == 1);
                std::set<int> uniq(ord.begin(), ord.end());
                CHECK((int)uniq.size() == n);
            }
    }
    SUBCASE("counterclockwise order sometimes is and sometimes is not the intersection order") {
        int agree = 0, differ = 0;
        for (int n = 2; n <= 5; ++n)
            for (const auto& c : generate_connected(n)) {
                auto ord = intersection_order(c);
                bool identity = true;
                for (int i = 0; i < n; ++i)
                    if (ord[i] != i) identity = false;
                (identity ? agree : differ)++;
            }
        CHECK(agree > 0);
        CHECK(differ > 0);
    }
    SUBCASE("disconnected input rejected") {
        CHECK_THROWS(intersection_order(ChordDiagram::parse("(1,4)(2,3)")));
    }
}

TEST_CASE("diagram statistics") {
    SUBCASE("single chord") {
        auto st = stats(ChordDiagram::parse("(1,2)"));
        CHECK(st.terminal == std::vector<int>{1});
        CHECK(st.b == 1);
        CHECK(st.delta.empty());
        auto ring = f_ring(3);
        CHECK(render(f_weight(st, ring)) == "1");
    }
    SUBCASE("crossing pair") {
        auto st = stats(ChordDiagram::parse("(1,3)(2,4)"));
        CHECK(st.terminal == std::vector<int>{2});
        CHECK(st.b == 2);
        CHECK(st.delta == std::vector<int>{0});
        auto ring = f_ring(3);
        CHECK(render(f_weight(st, ring)) == "f0");
    }
    SUBCASE("delta always has n-1 entries; b >= 1") {
        for (int n = 1; n <= 5; ++n)
            for (const auto& c : generate_connected(n)) {
                auto st = stats(c);
                CHECK((int)st.delta.size() == n - 1);
                CHECK(st.b >= 1);
            }
    }
    SUBCASE("terminal chords are the sinks of the oriented intersection graph") {
        for (int n = 1; n <= 5; ++n)
            for (const auto& c : generate_connected(n)) {
                auto g = intersection_graph(c);
                std::set<int> with_out;
                for (auto [a, b] : g.arcs) with_out.insert(a);
                auto ord = intersection_order(c);
                std::vector<int> pos(n);
                for (int i = 0; i < n; ++i) pos[ord[i]] = i + 1;
                std::vector<int> sinks;
                for (int i = 0; i < n; ++i)
                    if (!with_out.count(i + 1)) sinks.push_back(pos[i]);
                std::sort(sinks.begin(), sinks.end());
                CHECK(stats(c).terminal == sinks);
            }
    }
}

TEST_CASE("green expansion") {
    auto g = green_expansion(4);
    auto ring = g.ring;
    SUBCASE("x^1 L^1 coefficient is f0") {
        // G = 1 - gamma_1 L - ..., so gamma_1[x] = -f0
        CHECK(render(g.gamma[1].c[1]) == "-f0");
    }
    SUBCASE("x^2 L^2 coefficient") {
        // unique 2-chord diagram, b = 2: gamma_2[x^2] = f0^2/2
        CHECK(render(g.gamma[2].c[2]) == "1/2*f0^2");
    }
    SUBCASE("L-degree bounded by x-degree") {
        for (int i = 1; i <= 4; ++i)
            for (int n = 0; n < i && n <= 4; ++n) CHECK(g.gamma[i].c[n].is_zero());
    }
    SUBCASE("beta function") {
        auto beta = beta_gamma1(3);
        CHECK(beta.c[0].is_zero());
        CHECK(beta.c[1].is_zero());
        CHECK(render(beta.c[2]) == "2*f0");  // -2x * (-f0 x)
    }
}
