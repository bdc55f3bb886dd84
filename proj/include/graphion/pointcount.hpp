// Point counting of affine varieties over prime fields F_q and the c2
// invariant, computed from [Psi_G]_q and from denominator reduction.
//
// Brute-force counting specializes one variable per recursion level, so the
// cost follows the shrinking restricted polynomials instead of q^n times a
// full evaluation.  Work is partitioned over assignments of the leading
// variables and summed in a fixed order.
#pragma once

#include "graphion/denred.hpp"
#include "graphion/graph.hpp"
#include "graphion/mpoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace graphion {

// coefficientwise reduction mod a prime; evaluation-ready
struct ModPoly {
    uint32_t q = 2;
    std::vector<int> vars;                               // ambient variable ids, ascending
    std::vector<std::pair<Monomial, uint32_t>> terms;    // coefficients reduced mod q
};

bool is_prime(uint64_t q);

// errors: q not prime.  The ambient variable set defaults to the variables
// the polynomial involves; pass `ambient` to count in a larger space.
ModPoly reduce_mod(const IPoly& p, uint64_t q, const std::vector<int>* ambient = nullptr);

struct CountResult {
    uint64_t q;
    int n;            // ambient variable count
    Int count;        // exact number of common zeros
    std::string method;  // "brute" or "linear-split"
};

// exact count of common zeros of the system over F_q^n by exhaustive
// specialization; errors when q^n exceeds the bound.  The ambient space
// defaults to the variables the polynomials involve.
CountResult count_points(const std::vector<IPoly>& polys, uint64_t q, uint64_t bound = 100000000ull,
                         int threads = 0, const std::vector<int>* ambient = nullptr);

// [f]_q = (q^{n-1} - [f1]_q) + q [f1, f0]_q for f = f1*pivot + f0, recursing
// on the single-poly side; pivot chosen automatically if not given.
// Falls back to count_points when no variable is linear.
CountResult count_points_split(const IPoly& f, uint64_t q, const std::string& pivot_name = "",
                               uint64_t bound = 100000000ull, int threads = 0);

struct C2Result {
    uint64_t q;
    int residue;       // c2 mod q
    Int count;         // the underlying point count
    int n_reduced = 0; // denominator method: edges reduced
    std::string method;
};

// c2 from [Psi_G]_q = c2 q^2 mod q^3; g connected with >= 3 vertices
C2Result c2_from_psi(const Multigraph& g, uint64_t q, uint64_t bound = 100000000ull, int threads = 0);

// c2 = (-1)^n [D^n]_q mod q for a reduction that reached n = order.size()
// without getting stuck
C2Result c2_from_denominator(const Multigraph& g, const std::vector<std::string>& order, uint64_t q,
                             uint64_t bound = 100000000ull, int threads = 0);

}  // namespace graphion
