// Order-by-order solver for analytic Dyson-Schwinger equations
//   G(x,L) = 1 + sgn(s) sum_{k>=1} x^k G(x, d/d(-rho))^{1+sk} (e^{-L rho}-1) F_k(rho) |_{rho=0}
// with F_k(rho) = f_{k,0}/rho + f_{k,1} + f_{k,2} rho + ... either symbolic
// or numeric, the gamma_k recursion residual, and the reduction to geometric
// series r_k g_k(rho).
#pragma once

#include "graphion/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace graphion {

struct MellinInput {
    RingPtr ring;                    // f-symbol ring (possibly empty for numeric input)
    std::vector<LaurentSeries> fk;   // fk[k-1] = F_k; pole order exactly 1 (low = -1, coeff[0] != 0)

    // single symbolic primitive at k = 1 with symbols f0..f{n_coeffs-1};
    // reuses `ring` when given so chord/dse cross-checks share variables
    static MellinInput symbolic_single(int n_coeffs, RingPtr ring = nullptr);
    // numeric coefficients for k = 1: F(rho) = values[0]/rho + values[1] + ...
    static MellinInput numeric_single(const std::vector<Rat>& values);
};

// g_k(rho) = 1/rho + O(1) choices for the geometric reduction
enum class GeometricKernel { one_minus_rho, one_plus_rho };
// coefficient of rho^i (i >= -1) of 1/(rho(1-rho)) or 1/(rho(1+rho))
Rat kernel_coeff(GeometricKernel g, int i);

// the operator O^w with O = G(x, d/d(-rho)), applied to a rho-series with
// L-polynomial coefficients; the result is truncated to rho^ (high - N)
RhoSeries apply_operator(const GreenSeries& g, int w, const RhoSeries& series);

// unique series solution of the equation to x^N
GreenSeries solve(int s, const MellinInput& mellin, int N);

// k gamma_k - gamma_1 (sgn(s) + |s| x d/dx) gamma_{k-1} for k = 2..N;
// identically zero on solver output
std::vector<XSeries> gamma_recursion_residual(const GreenSeries& g, int s);

struct GeometricReduction {
    std::vector<QPoly> r;              // r[k-1] = r_k, k = 1..N (kernel independent)
    std::vector<QPoly> kernel_coeffs;  // c_k with DSE(c_k g_k) reproducing gamma_1
    GreenSeries original;              // solution with the given Mellin input
    GreenSeries resolved;              // solution with F_k := c_k g_k
    XSeries p;                         // P(x) = -gamma_1 - 2 gamma_2 of the original
};

// The r-series from the gamma_1 coefficient recursion
//   r_i = -gamma_{1,i} - sum_{j=1}^{i-1} gamma_{1,j} (sgn(s) + |s|(i-j)) gamma_{1,i-j},
// which never references the kernel.  The replacement Mellin transforms
// c_k g_k(rho) are then solved for so that re-solving reproduces gamma_1 (and
// hence P) exactly; for g = 1/(rho(1-rho)) the c_k coincide with the r_k and
// that coincidence is checked.  Any verification failure is an internal error.
GeometricReduction reduce_to_geometric(int s, const MellinInput& mellin, GeometricKernel g, int N);

}  // namespace graphion
