#include "graphion/dse.hpp"

#include <algorithm>

namespace graphion {

MellinInput MellinInput::symbolic_single(int n_coeffs, RingPtr ring) {
    MellinInput m;
    m.ring = ring ? std::move(ring) : std::make_shared<Ring>();
    LaurentSeries F;
    F.low = -1;
    for (int i = 0; i < n_coeffs; ++i) {
        int id = m.ring->add_or_get("f" + std::to_string(i));
        F.coeff.push_back(QPoly::variable(m.ring, id));
    }
    F.var_id = -1;
    m.fk.push_back(std::move(F));
    return m;
}

MellinInput MellinInput::numeric_single(const std::vector<Rat>& values) {
    MellinInput m;
    m.ring = std::make_shared<Ring>();
    LaurentSeries F;
    F.low = -1;
    for (const Rat& v : values) F.coeff.push_back(QPoly::constant(m.ring, v));
    m.fk.push_back(std::move(F));
    return m;
}

Rat kernel_coeff(GeometricKernel g, int i) {
    // 1/(rho(1-rho)) = sum_{i>=-1} rho^i; 1/(rho(1+rho)) = sum (-1)^{i+1} rho^i
    if (i < -1) return Rat(0);
    if (g == GeometricKernel::one_minus_rho) return Rat(1);
    return (i + 1) % 2 == 0 ? Rat(1) : Rat(-1);
}

namespace {

// operator polynomial in Dhat = -d/drho with x-series coefficients
using OpPoly = std::vector<XSeries>;

Rat binom(int w, unsigned j) {
    Rat r(1);
    for (unsigned i = 0; i < j; ++i) {
        r *= Rat(w - (int)i);
        r /= Rat((int)i + 1);
    }
    return r;
}

OpPoly op_mul(const OpPoly& a, const OpPoly& b, int dmax, const RingPtr& ring, int N) {
    OpPoly r(dmax + 1, XSeries(ring, N));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j <= (size_t)dmax; ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

// O^w = sum_j binom(w,j) (O-1)^j; (O-1) has positive x-valuation so the sum
// truncates at j = N
OpPoly op_power(const GreenSeries& g, int w, int dmax) {
    OpPoly W(dmax + 1, XSeries(g.ring, g.N));
    for (int n = 1; n <= g.N && n <= dmax; ++n) W[n] = g.gamma[n] * Rat(g.sgn);
    OpPoly acc(dmax + 1, XSeries(g.ring, g.N));
    OpPoly Wj(dmax + 1, XSeries(g.ring, g.N));
    Wj[0].c[0] = QPoly::constant(g.ring, Rat(1));  // W^0 = 1
    for (int j = 0; j <= g.N; ++j) {
        Rat c = binom(w, j);
        if (c != 0)
            for (int d = 0; d <= dmax; ++d) acc[d] = acc[d] + Wj[d] * c;
        if (j < g.N) Wj = op_mul(Wj, W, dmax, g.ring, g.N);
    }
    return acc;
}

Rat factorial(int n) {
    Rat r(1);
    for (int i = 2; i <= n; ++i) r *= Rat(i);
    return r;
}

}  // namespace

RhoSeries apply_operator(const GreenSeries& g, int w, const RhoSeries& series) {
    int high_in = series.low + (int)series.c.size() - 1;
    if (high_in < g.N) throw std::runtime_error("apply_operator: insufficient rho truncation");
    int dmax = g.N;
    OpPoly op = op_power(g, w, dmax);
    RhoSeries out;
    // a pole spills downward under differentiation: rho^-1 -> rho^{-1-d}
    out.low = series.low < 0 ? series.low - dmax : series.low;
    int high_out = high_in - dmax;
    if (out.low > high_out) throw std::runtime_error("apply_operator: insufficient rho truncation");
    out.c.assign(high_out - out.low + 1, {});
    for (int t = out.low; t <= high_out; ++t) {
        // (Dhat^d S)_t = (-1)^d (t+d)!/t! ... valid for t >= 0; negative rho
        // powers differentiate the same way via the falling factorial
        size_t lmax = 0;
        for (int d = 0; d <= dmax; ++d) {
            int src = t + d - series.low;
            if (src >= 0 && src < (int)series.c.size()) lmax = std::max(lmax, series.c[src].size());
        }
        auto& slot = out.c[t - out.low];
        slot.assign(lmax, XSeries(g.ring, g.N));
        for (int d = 0; d <= dmax; ++d) {
            int src = t + d - series.low;
            if (src < 0 || src >= (int)series.c.size()) continue;
            // product (t+1)(t+2)...(t+d), sign (-1)^d
            Rat fac(1);
            for (int i = 1; i <= d; ++i) fac *= Rat(t + i);
            if (d % 2) fac = -fac;
            if (fac == 0) continue;
            const auto& lpoly = series.c[src];
            for (size_t l = 0; l < lpoly.size(); ++l) slot[l] = slot[l] + op[d] * lpoly[l] * fac;
        }
    }
    return out;
}

namespace {

// the L-polynomial rho-coefficients s_m of (e^{-L rho} - 1) F_k(rho):
// s_m = sum_{j=1}^{m+1} (-L)^j / j! * f_{k, m+1-j}
std::vector<std::vector<QPoly>> mellin_integrand(const LaurentSeries& F, int rho_trunc,
                                                 const RingPtr& ring) {
    bool all_zero = true;
    for (const auto& p : F.coeff)
        if (!p.is_zero()) all_zero = false;
    if (all_zero) return std::vector<std::vector<QPoly>>(rho_trunc + 1);  // absent primitive
    if (F.low != -1) throw std::runtime_error("mellin: F_k must have a first-order pole (low = -1)");
    if (F.coeff[0].is_zero())
        throw std::runtime_error("mellin: residue f_{k,0} must be nonzero");
    auto fcoef = [&](int i) -> QPoly {
        return (i >= 0 && i < (int)F.coeff.size()) ? F.coeff[i] : QPoly(ring);
    };
    std::vector<std::vector<QPoly>> s(rho_trunc + 1);
    for (int m = 0; m <= rho_trunc; ++m) {
        s[m].assign(m + 2, QPoly(ring));
        for (int j = 1; j <= m + 1; ++j) {
            Rat c = Rat((j % 2) ? -1 : 1) / factorial(j);
            s[m][j] = fcoef(m + 1 - j) * c;
        }
    }
    return s;
}

// full right side as L-indexed x-series, using the gammas currently in g
std::vector<XSeries> dse_rhs(const GreenSeries& g, const MellinInput& mellin) {
    int N = g.N;
    int rho_trunc = N + 1;
    int lmax = rho_trunc + 2;
    std::vector<XSeries> rhs(lmax + 1, XSeries(g.ring, N));
    rhs[0].c[0] = QPoly::constant(g.ring, Rat(1));
    for (int k = 1; k <= (int)mellin.fk.size() && k <= N; ++k) {
        int w = 1 + g.s * k;
        OpPoly op = op_power(g, w, rho_trunc);
        auto s = mellin_integrand(mellin.fk[k - 1], rho_trunc, g.ring);
        // bracket(L) = sum_d op[d] * (-1)^d d! * s_d(L), then x^k shift
        for (int d = 0; d <= rho_trunc; ++d) {
            if (op[d].is_zero()) continue;
            Rat fac = factorial(d);
            if (d % 2) fac = -fac;
            for (size_t l = 0; l < s[d].size(); ++l) {
                if (s[d][l].is_zero()) continue;
                XSeries contrib = op[d] * s[d][l] * (fac * Rat(g.sgn));
                rhs[l] = rhs[l] + contrib.shifted(k);
            }
        }
    }
    return rhs;
}

}  // namespace

GreenSeries solve(int s, const MellinInput& mellin, int N) {
    if (mellin.fk.empty()) throw std::runtime_error("solve: no Mellin input");
    GreenSeries g(mellin.ring, s, N);
    for (int m = 1; m <= N; ++m) {
        auto rhs = dse_rhs(g, mellin);
        // G = 1 + sgn sum gamma_n L^n: x^m coefficient of rhs L^n fixes gamma_n[x^m]
        for (int n = 1; n <= N; ++n) g.gamma[n].c[m] = rhs[n].c[m] * Rat(g.sgn);
    }
    return g;
}

std::vector<XSeries> gamma_recursion_residual(const GreenSeries& g, int s) {
    int sgn = s < 0 ? -1 : 1;
    int abs_s = s < 0 ? -s : s;
    std::vector<XSeries> res;
    for (int k = 2; k <= g.N; ++k) {
        XSeries inner = g.gamma[k - 1] * Rat(sgn) + g.gamma[k - 1].x_ddx() * Rat(abs_s);
        res.push_back(g.gamma[k] * Rat(k) - g.gamma[1] * inner);
    }
    return res;
}

GeometricReduction reduce_to_geometric(int s, const MellinInput& mellin, GeometricKernel gk, int N) {
    GeometricReduction out;
    out.original = solve(s, mellin, N);
    const GreenSeries& g = out.original;
    int sgn = g.sgn, abs_s = s < 0 ? -s : s;

    // r_i from the gamma_1 coefficients
    std::vector<QPoly> r(N + 1, QPoly(g.ring));
    for (int i = 1; i <= N; ++i) {
        QPoly acc = -g.gamma[1].c[i];
        for (int j = 1; j <= i - 1; ++j)
            acc -= g.gamma[1].c[j] * g.gamma[1].c[i - j] * Rat(sgn + abs_s * (i - j));
        r[i] = acc;
    }
    out.r.assign(r.begin() + 1, r.end());

    // P(x) = -gamma_1 - 2 gamma_2
    out.p = (g.gamma[1] * Rat(-1)) + (N >= 2 ? g.gamma[2] * Rat(-2) : XSeries(g.ring, N));

    // solve for the kernel coefficients c_k making DSE(c_k g_k) reproduce
    // gamma_1; c_k enters gamma_1[x^k] linearly with slope -1 (the kernels
    // have residue 1 and the sign convention cancels), so each order is
    // fixed by one trial solve
    std::vector<QPoly> c(N + 1, QPoly(g.ring));
    auto mellin_for = [&](const std::vector<QPoly>& coeffs) {
        MellinInput m2;
        m2.ring = g.ring;
        for (int k = 1; k <= N; ++k) {
            LaurentSeries F;
            F.low = -1;
            for (int i = -1; i <= N + 1; ++i) F.coeff.push_back(coeffs[k] * kernel_coeff(gk, i));
            m2.fk.push_back(std::move(F));
        }
        return m2;
    };
    for (int k = 1; k <= N; ++k) {
        GreenSeries partial = solve(s, mellin_for(c), N);
        QPoly mismatch = g.gamma[1].c[k] - partial.gamma[1].c[k];
        c[k] = mismatch * Rat(-1);
    }
    out.kernel_coeffs.assign(c.begin() + 1, c.end());
    out.resolved = solve(s, mellin_for(c), N);

    if (!(out.resolved.gamma[1] == g.gamma[1]))
        throw std::runtime_error("reduce_to_geometric: gamma_1 mismatch after re-solve (internal error)");
    XSeries p2 = (out.resolved.gamma[1] * Rat(-1)) +
                 (N >= 2 ? out.resolved.gamma[2] * Rat(-2) : XSeries(g.ring, N));
    if (!(p2 == out.p))
        throw std::runtime_error("reduce_to_geometric: P(x) mismatch after re-solve (internal error)");
    if (gk == GeometricKernel::one_minus_rho) {
        for (int k = 1; k <= N; ++k)
            if (!(c[k] == r[k]))
                throw std::runtime_error(
                    "reduce_to_geometric: kernel coefficients differ from the r-series for "
                    "1/(rho(1-rho)) (internal error)");
    }
    return out;
}

}  // namespace graphion
