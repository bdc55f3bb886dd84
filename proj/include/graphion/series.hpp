// Truncated series machinery shared by the Dyson-Schwinger solver and the
// chord-diagram expansion: x-truncated series over rational-coefficient
// polynomials in the f symbols, the Green function container
// G(x,L) = 1 + sgn(s) * sum gamma_n(x) L^n, and rho-Laurent series.
#pragma once

#include "graphion/mpoly.hpp"

#include <vector>

namespace graphion {

struct XSeries {
    int trunc = 0;            // coefficients for x^0 .. x^trunc
    std::vector<QPoly> c;     // size trunc+1
    RingPtr ring;

    XSeries() = default;
    XSeries(RingPtr r, int trunc_) : trunc(trunc_), c(trunc_ + 1, QPoly(r)), ring(std::move(r)) {}

    bool is_zero() const {
        for (const auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }
    friend XSeries operator+(const XSeries& a, const XSeries& b) {
        XSeries r(a.ring ? a.ring : b.ring, std::min(a.trunc, b.trunc));
        for (int i = 0; i <= r.trunc; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend XSeries operator-(const XSeries& a, const XSeries& b) {
        XSeries r(a.ring ? a.ring : b.ring, std::min(a.trunc, b.trunc));
        for (int i = 0; i <= r.trunc; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend XSeries operator*(const XSeries& a, const XSeries& b) {
        XSeries r(a.ring ? a.ring : b.ring, std::min(a.trunc, b.trunc));
        for (int i = 0; i <= r.trunc; ++i)
            for (int j = 0; i + j <= r.trunc; ++j) r.c[i + j] += a.c[i] * b.c[j];
        return r;
    }
    XSeries operator*(const QPoly& s) const {
        XSeries r = *this;
        for (auto& p : r.c) p = p * s;
        return r;
    }
    XSeries operator*(const Rat& s) const {
        XSeries r = *this;
        for (auto& p : r.c) p = p * s;
        return r;
    }
    XSeries shifted(int k) const {  // multiply by x^k
        XSeries r(ring, trunc);
        for (int i = 0; i + k <= trunc; ++i) r.c[i + k] = c[i];
        return r;
    }
    XSeries x_ddx() const {
        XSeries r = *this;
        for (int i = 0; i <= trunc; ++i) r.c[i] = r.c[i] * Rat(i);
        return r;
    }
    friend bool operator==(const XSeries& a, const XSeries& b) {
        if (a.trunc != b.trunc) return false;
        for (int i = 0; i <= a.trunc; ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }
};

// G(x, L) = 1 + sgn * sum_{n>=1} gamma[n] L^n, truncated at x^N; L-degree of
// the x^j coefficient is at most j.
struct GreenSeries {
    int s = 0;
    int sgn = 1;  // sgn(s), with sgn(0) := +1
    int N = 0;
    std::vector<XSeries> gamma;  // index 1..N used
    RingPtr ring;

    GreenSeries() = default;
    GreenSeries(RingPtr r, int s_, int N_)
        : s(s_), sgn(s_ < 0 ? -1 : 1), N(N_), gamma(N_ + 1, XSeries(r, N_)), ring(std::move(r)) {}
};

// Laurent series in rho with polynomial coefficients; lowest exponent -1
struct LaurentSeries {
    int var_id = -1;          // display variable (usually "rho" in the ring's table)
    int low = -1;             // lowest exponent
    std::vector<QPoly> coeff; // coeff[i] = coefficient of rho^{low+i}
    int high() const { return low + (int)coeff.size() - 1; }
};

// rho-power series whose coefficients are polynomials in L with x-series
// entries; the shape consumed and produced by the Mellin operator
struct RhoSeries {
    int low = 0;
    std::vector<std::vector<XSeries>> c;  // c[i][l] = coeff of rho^{low+i} L^l
};

}  // namespace graphion
