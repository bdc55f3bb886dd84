#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "graphion/chord.hpp"
#include "graphion/dse.hpp"

using namespace graphion;

namespace {

QPoly QP(const RingPtr& ring, const std::string& s) { return to_rational(parse_poly(ring, s)); }

// (e^{-L rho} - 1) F(rho) as a RhoSeries with constant-in-x coefficients:
// coefficient of rho^m is sum_{j=1}^{m+1} (-L)^j/j! f_{m+1-j}
RhoSeries integrand_series(const LaurentSeries& F, int rho_trunc, const RingPtr& ring, int N) {
    RhoSeries s;
    s.low = 0;
    for (int m = 0; m <= rho_trunc; ++m) {
        std::vector<XSeries> lpoly(m + 2, XSeries(ring, N));
        Rat jfact(1);
        for (int j = 1; j <= m + 1; ++j) {
            jfact *= j;
            int fi = m + 1 - j;
            QPoly f = (fi >= 0 && fi < (int)F.coeff.size()) ? F.coeff[fi] : QPoly(ring);
            Rat c = Rat((j % 2) ? -1 : 1) / jfact;
            lpoly[j].c[0] = f * c;
        }
        s.c.push_back(std::move(lpoly));
    }
    return s;
}

}  // namespace

TEST_CASE("solve: first orders of the s = -2 single-primitive equation") {
    auto mellin = MellinInput::symbolic_single(4);
    auto g = solve(-2, mellin, 3);
    auto ring = g.ring;
    CHECK(g.sgn == -1);
    // hand-computed: gamma_1 = -f0 x - f0 f1 x^2 + O(x^3), gamma_2 = f0^2/2 x^2
    CHECK(g.gamma[1].c[1] == QP(ring, "0-f0"));
    CHECK(g.gamma[1].c[2] == QP(ring, "0-f0*f1"));
    CHECK(g.gamma[2].c[1].is_zero());
    CHECK(render(g.gamma[2].c[2]) == "1/2*f0^2");
    // L-degree bounded by x-degree
    for (int i = 1; i <= 3; ++i)
        for (int n = 0; n < i; ++n) CHECK(g.gamma[i].c[n].is_zero());
}

TEST_CASE("solver output satisfies the defining equation via apply_operator") {
    for (int s : {-2, 1}) {
        int N = 3;
        auto mellin = MellinInput::symbolic_single(N);
        auto g = solve(s, mellin, N);
        int rho_trunc = N + 2;
        // assemble 1 + sgn sum_k x^k [O^{1+sk} S_k]|_{rho=0} and compare
        std::vector<XSeries> lhs(N + 4, XSeries(g.ring, N));  // L-indexed
        lhs[0].c[0] = QPoly::constant(g.ring, Rat(1));
        for (int n = 1; n <= N; ++n) lhs[n] = g.gamma[n] * Rat(g.sgn);
        std::vector<XSeries> rhs(N + 4, XSeries(g.ring, N));
        rhs[0].c[0] = QPoly::constant(g.ring, Rat(1));
        for (int k = 1; k <= (int)mellin.fk.size(); ++k) {
            RhoSeries S = integrand_series(mellin.fk[k - 1], rho_trunc, g.ring, N);
            RhoSeries out = apply_operator(g, 1 + s * k, S);
            // pick the rho^0 coefficient
            int idx = -out.low;
            REQUIRE(idx >= 0);
            REQUIRE(idx < (int)out.c.size());
            const auto& at0 = out.c[idx];
            for (size_t l = 0; l < at0.size() && l < rhs.size(); ++l)
                rhs[l] = rhs[l] + at0[l].shifted(k) * Rat(g.sgn);
        }
        for (size_t l = 0; l < rhs.size(); ++l) CHECK(lhs[l] == rhs[l]);
    }
}

TEST_CASE("apply_operator basics") {
    int N = 3;
    auto mellin = MellinInput::symbolic_single(N);
    auto g = solve(-2, mellin, N);
    RhoSeries S = integrand_series(mellin.fk[0], N + 2, g.ring, N);
    SUBCASE("w = 0 is the identity") {
        RhoSeries out = apply_operator(g, 0, S);
        for (int t = 0; t + out.low <= (int)out.c.size() - 1 + out.low; ++t) {
            int src = t, dst = t - out.low + S.low;
            if (src >= (int)out.c.size() || dst >= (int)S.c.size()) break;
            for (size_t l = 0; l < out.c[src].size() && l < S.c[dst].size(); ++l)
                CHECK(out.c[src][l] == S.c[dst][l]);
        }
    }
    SUBCASE("w = 1 with trivial G is the identity") {
        GreenSeries triv(g.ring, -2, N);  // all gammas zero
        RhoSeries out = apply_operator(triv, 1, S);
        int shift = S.low - out.low;
        for (size_t i = 0; i < out.c.size(); ++i) {
            size_t src = i - shift;
            if (src >= S.c.size()) continue;
            for (size_t l = 0; l < out.c[i].size() || l < S.c[src].size(); ++l) {
                bool lz = l >= out.c[i].size() || out.c[i][l].is_zero();
                bool rz = l >= S.c[src].size() || S.c[src][l].is_zero();
                if (!lz || !rz) {
                    REQUIRE(l < out.c[i].size());
                    REQUIRE(l < S.c[src].size());
                    CHECK(out.c[i][l] == S.c[src][l]);
                }
            }
        }
    }
    SUBCASE("w = -1 then w = +1 round-trips") {
        RhoSeries deep = integrand_series(mellin.fk[0], 2 * N + 3, g.ring, N);
        RhoSeries once = apply_operator(g, -1, deep);
        RhoSeries twice = apply_operator(g, 1, once);
        // compare on the overlap with the original
        for (int t = std::max(deep.low, twice.low); t <= twice.low + (int)twice.c.size() - 1; ++t) {
            const auto& a = twice.c[t - twice.low];
            const auto& b = deep.c[t - deep.low];
            for (size_t l = 0; l < a.size() || l < b.size(); ++l) {
                bool az = l >= a.size() || a[l].is_zero();
                if (az) continue;
                REQUIRE(l < b.size());
                CHECK(a[l] == b[l]);
            }
        }
    }
    SUBCASE("insufficient truncation rejected") {
        RhoSeries tiny;
        tiny.low = 0;
        tiny.c.assign(2, {});
        CHECK_THROWS(apply_operator(g, 1, tiny));
    }
}

TEST_CASE("gamma recursion residuals vanish on solver output") {
    for (int s : {-2, -1, 1, 2}) {
        auto mellin = MellinInput::symbolic_single(5);
        auto g = solve(s, mellin, 5);
        for (const auto& res : gamma_recursion_residual(g, s)) CHECK(res.is_zero());
    }
}

TEST_CASE("gamma recursion residual negative control") {
    auto mellin = MellinInput::symbolic_single(4);
    auto g = solve(-2, mellin, 4);
    g.gamma[2].c[3] += QPoly::constant(g.ring, Rat(1));  // perturb one coefficient
    bool any_nonzero = false;
    for (const auto& res : gamma_recursion_residual(g, -2))
        if (!res.is_zero()) any_nonzero = true;
    CHECK(any_nonzero);
    // and gamma_1 = 0 input degenerates to k gamma_k
    GreenSeries h(g.ring, -2, 3);
    h.gamma[2].c[2] = QPoly::constant(g.ring, Rat(5));
    auto res = gamma_recursion_residual(h, -2);
    CHECK(render(res[0].c[2]) == "10");
}

TEST_CASE("reduction to geometric series reproduces the corrected r-series") {
    auto mellin = MellinInput::symbolic_single(5);
    auto red = reduce_to_geometric(-2, mellin, GeometricKernel::one_minus_rho, 5);
    auto ring = red.original.ring;
    CHECK(red.r[0] == QP(ring, "f0"));
    CHECK(red.r[1] == QP(ring, "f0*f1 - f0^2"));
    CHECK(red.r[2] == QP(ring, "0 - 4*f0^2*f1 + 3*f2*f0^2 + f0*f1^2"));
    CHECK(red.r[3] == QP(ring, "11*f2*f0^2*f1 - 9*f0^2*f1^2 - 18*f2*f0^3 + f0*f1^3 + 15*f3*f0^3"));
    CHECK(red.r[4] == QP(ring, "86*f3*f0^3*f1 - 120*f3*f0^4 - 16*f0^2*f1^3 + f0*f1^4 + 30*f2^2*f0^3 "
                               "+ 105*f0^4*f4 - 112*f2*f0^3*f1 + 26*f2*f0^2*f1^2"));
}

TEST_CASE("r-series is kernel independent") {
    auto mellin = MellinInput::symbolic_single(4);
    auto a = reduce_to_geometric(-2, mellin, GeometricKernel::one_minus_rho, 4);
    auto b = reduce_to_geometric(-2, mellin, GeometricKernel::one_plus_rho, 4);
    REQUIRE(a.r.size() == b.r.size());
    for (size_t i = 0; i < a.r.size(); ++i) CHECK(a.r[i] == b.r[i]);
    // P(x) = -gamma_1 - 2 gamma_2 matches the r coefficients
    for (size_t i = 1; i < a.r.size(); ++i) CHECK(a.p.c[i + 1].is_zero() == a.r[i + 1 - 1].is_zero());
}

TEST_CASE("all-ones Mellin coefficients give the geometric special case") {
    int N = 4;
    auto sym = MellinInput::symbolic_single(N);
    auto gs = solve(-2, sym, N);
    std::vector<Rat> ones(N + 2, Rat(1));
    auto num = MellinInput::numeric_single(ones);
    auto gn = solve(-2, num, N);
    // substituting f_i = 1 into the symbolic solution gives the numeric one
    std::map<int, QPoly> bind;
    for (int i = 0; i < sym.ring->size(); ++i) bind[i] = QPoly::constant(sym.ring, Rat(1));
    for (int n = 1; n <= N; ++n)
        for (int m = 0; m <= N; ++m) {
            QPoly specialized = substitute(gs.gamma[n].c[m], bind);
            CHECK(render(specialized) == render(gn.gamma[n].c[m]));
        }
}

TEST_CASE("multiple primitives") {
    // k = 1 and k = 2 numeric primitives; the recursion residual still vanishes
    MellinInput m;
    m.ring = std::make_shared<Ring>();
    for (int k = 1; k <= 2; ++k) {
        LaurentSeries F;
        F.low = -1;
        for (int i = 0; i < 6; ++i) F.coeff.push_back(QPoly::constant(m.ring, Rat(k, i + 1)));
        m.fk.push_back(std::move(F));
    }
    for (int s : {-2, 1}) {
        auto g = solve(s, m, 4);
        for (const auto& res : gamma_recursion_residual(g, s)) CHECK(res.is_zero());
        CHECK(!g.gamma[1].is_zero());
    }
}

TEST_CASE("mellin validation") {
    MellinInput m;
    m.ring = std::make_shared<Ring>();
    LaurentSeries F;
    F.low = -1;
    F.coeff.push_back(QPoly(m.ring));  // zero residue
    F.coeff.push_back(QPoly::constant(m.ring, Rat(1)));
    m.fk.push_back(F);
    CHECK_THROWS(solve(-2, m, 3));
}

TEST_CASE("flagship: chord expansion equals the DSE solution at order 4") {
    auto ring = f_ring(4);
    auto chord_g = green_expansion(4, ring);
    auto mellin = MellinInput::symbolic_single(5, ring);
    auto dse_g = solve(-2, mellin, 4);
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m) {
            INFO("L^", n, " x^", m);
            CHECK(render(chord_g.gamma[n].c[m]) == render(dse_g.gamma[n].c[m]));
        }
}

TEST_CASE("s = 0 convention") {
    auto mellin = MellinInput::symbolic_single(3);
    auto g = solve(0, mellin, 3);
    CHECK(g.sgn == 1);
    CHECK(!g.gamma[1].is_zero());
}
