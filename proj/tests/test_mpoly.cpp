#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "graphion/mpoly.hpp"

#include <random>

using namespace graphion;

namespace {

RingPtr abcd() {
    auto r = std::make_shared<Ring>();
    for (auto n : {"a", "b", "c", "d"}) r->add(n);
    return r;
}

IPoly P(const RingPtr& r, const std::string& s) { return parse_poly(r, s); }

// random polynomial with small coefficients, <= nvars variables, degree <= maxdeg
IPoly random_poly(const RingPtr& ring, std::mt19937& rng, int nvars, int maxdeg, int nterms) {
    IPoly p(ring);
    std::uniform_int_distribution<int> coef(-4, 4), expd(0, maxdeg);
    for (int t = 0; t < nterms; ++t) {
        IPoly term = IPoly::constant(ring, Int(coef(rng)));
        int budget = maxdeg;
        for (int v = 0; v < nvars; ++v) {
            int e = std::min(budget, expd(rng) % (maxdeg + 1));
            if (e > 0) term *= IPoly::variable(ring, v).pow(e);
            budget -= e;
        }
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("ring identities") {
    auto r = abcd();
    CHECK(P(r, "(a+b)*(a-b)") == P(r, "a^2-b^2"));
    CHECK(render(P(r, "(a+b)*(a-b)")) == "a^2 - b^2");
    CHECK((P(r, "a+b") * IPoly(r)).is_zero());
    CHECK(P(r, "a+b") * IPoly(r) == IPoly(r));
}

TEST_CASE("hat polynomial at all-ones counts spanning trees") {
    // hand count for the hat graph (c,d parallel u-v, a: u-w, b: v-w): the
    // two-edge spanning trees are ab, ac, ad, bc, bd -- five of them ({c,d}
    // misses w), matching cd + (a+b)(c+d) = 1 + 2*2 = 5 at all-ones
    auto r = abcd();
    IPoly psi = P(r, "c*d + (a+b)*(c+d)");
    std::map<int, IPoly> ones;
    for (int v = 0; v < 4; ++v) ones[v] = IPoly::constant(r, 1);
    IPoly val = substitute(psi, ones);
    REQUIRE(val.is_constant());
    CHECK(val.leading_coeff() == 5);
}

TEST_CASE("substitute") {
    auto r = abcd();
    auto q = std::make_shared<Ring>();
    q->add("a");
    q->add("b");
    q->add("Q");
    SUBCASE("a -> bQ") {
        IPoly p = parse_poly(q, "a+b");
        std::map<int, IPoly> bind{{0, parse_poly(q, "b*Q")}};
        CHECK(substitute(p, bind) == parse_poly(q, "b*Q+b"));
    }
    SUBCASE("hat with a -> 0 contracts the edge") {
        IPoly psi = P(r, "c*d + (a+b)*(c+d)");
        std::map<int, IPoly> bind{{0, IPoly(r)}};
        CHECK(substitute(psi, bind) == P(r, "c*d + b*(c+d)"));
    }
    SUBCASE("identity binding") {
        IPoly x = IPoly::variable(r, 0);
        std::map<int, IPoly> bind{{0, x}};
        CHECK(substitute(x, bind) == x);
    }
    SUBCASE("swap is an involution") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            IPoly p = random_poly(r, rng, 4, 4, 6);
            std::map<int, IPoly> swap_ab{{0, IPoly::variable(r, 1)}, {1, IPoly::variable(r, 0)}};
            CHECK(substitute(substitute(p, swap_ab), swap_ab) == p);
        }
    }
}

TEST_CASE("coeffs_in") {
    auto r = abcd();
    SUBCASE("(Aa+B)(Ca+D) pattern") {
        // use b,c as A,B and d,1 as C,D: (b*a+c)*(d*a+1)
        IPoly p = P(r, "(b*a+c)*(d*a+1)");
        auto q = coeffs_in(p, 0);
        CHECK(!q.higher());
        CHECK(q.a2 == P(r, "b*d"));
        CHECK(q.a1 == P(r, "b + c*d"));
        CHECK(q.a0 == P(r, "c"));
    }
    SUBCASE("hat polynomial in a") {
        auto q = coeffs_in(P(r, "c*d + (a+b)*(c+d)"), 0);
        CHECK(q.a2.is_zero());
        CHECK(q.a1 == P(r, "c+d"));
        CHECK(q.a0 == P(r, "c*d + b*(c+d)"));
    }
    SUBCASE("constant") {
        auto q = coeffs_in(P(r, "5"), 0);
        CHECK(q.a2.is_zero());
        CHECK(q.a1.is_zero());
        CHECK(q.a0 == P(r, "5"));
        CHECK(!q.higher());
    }
    SUBCASE("degree flag") {
        CHECK(coeffs_in(P(r, "a^3+a"), 0).higher());
    }
}

TEST_CASE("poly_sqrt") {
    auto r = abcd();
    SUBCASE("(a+b)^2") {
        auto s = poly_sqrt(P(r, "(a+b)^2"));
        REQUIRE(s.has_value());
        CHECK(*s == P(r, "a+b"));
    }
    SUBCASE("not a square") {
        CHECK(!poly_sqrt(P(r, "a^2+b^2")).has_value());
        CHECK(!poly_sqrt(P(r, "a^2-b^2")).has_value());
        CHECK(!poly_sqrt(P(r, "2*a^2")).has_value());
        CHECK(!poly_sqrt(-P(r, "a^2")).has_value());
    }
    SUBCASE("sign: leading coefficient positive") {
        auto s = poly_sqrt(P(r, "(a-b)^2"));
        REQUIRE(s.has_value());
        CHECK(*s == P(r, "a-b"));  // leading term a is positive
        auto s2 = poly_sqrt(P(r, "(b-a)^2"));
        REQUIRE(s2.has_value());
        CHECK(*s2 == P(r, "a-b"));
    }
    SUBCASE("random squares") {
        std::mt19937 rng(42);
        for (int trial = 0; trial < 100; ++trial) {
            IPoly p = random_poly(r, rng, 4, 4, 5);
            auto s = poly_sqrt(p * p);
            REQUIRE(s.has_value());
            CHECK(*s * *s == p * p);
        }
    }
}

TEST_CASE("divide_exact") {
    auto r = abcd();
    SUBCASE("basic") {
        auto q = divide_exact(P(r, "a^2-b^2"), P(r, "a-b"));
        REQUIRE(q.has_value());
        CHECK(*q == P(r, "a+b"));
        CHECK(!divide_exact(P(r, "a+b"), P(r, "a")).has_value());
    }
    SUBCASE("random products") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 100; ++trial) {
            IPoly p = random_poly(r, rng, 4, 3, 4);
            IPoly q = random_poly(r, rng, 4, 3, 4);
            if (q.is_zero()) continue;
            auto quot = divide_exact(p * q, q);
            REQUIRE(quot.has_value());
            CHECK(*quot == p);
        }
    }
}

TEST_CASE("ring axioms on random polynomials") {
    auto r = abcd();
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        IPoly p = random_poly(r, rng, 4, 3, 4);
        IPoly q = random_poly(r, rng, 4, 3, 4);
        IPoly s = random_poly(r, rng, 4, 3, 4);
        CHECK((p * q) * s == p * (q * s));
        CHECK(p * (q + s) == p * q + p * s);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("canonical rendering") {
    auto r = abcd();
    CHECK(render(IPoly(r)) == "0");
    CHECK(render(P(r, "1")) == "1");
    CHECK(render(P(r, "a - 2*b + 1")) == "a - 2*b + 1");
    // graded-lex: higher total degree first, then lexicographic by var id
    CHECK(render(P(r, "b + a*b + a^2")) == "a^2 + a*b + b");
    CHECK(render(P(r, "c*d + (a+b)*(c+d)")) == "a*c + a*d + b*c + b*d + c*d");
}

TEST_CASE("monomial packing guards") {
    auto r = std::make_shared<Ring>();
    r->add("x");
    IPoly x = IPoly::variable(r, 0);
    CHECK_THROWS_AS((void)x.pow(16).pow(2), guard_error);  // exponent 32 overflows a field
    CHECK(render(x.pow(31)) == "x^31");
}
