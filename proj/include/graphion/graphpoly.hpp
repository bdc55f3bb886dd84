// Graph polynomials: Kirchhoff (spanning-tree sum and determinant form),
// Dodgson polynomials, spanning-forest polynomials, and the 5-invariant.
//
// Sign conventions, fixed once for the whole library:
//   - incidence matrix: edges oriented from lower to higher vertex id,
//     self-loops give a zero column;
//   - the removed incidence row is the highest-id vertex;
//   - M = [[Lambda, Et],[-E, 0]] with rows/columns in edge-list order
//     followed by vertex-id order.
// Under these choices every Dodgson polynomial has a definite sign; paper
// identities stated "up to sign" are tested with a global +-.
#pragma once

#include "graphion/graph.hpp"
#include "graphion/mpoly.hpp"

#include <string>
#include <vector>

namespace graphion {

struct EdgeSpec {
    std::vector<std::string> I, J, K;
    // |I| == |J|, I and J disjoint from K (I may meet J); validated on use
};

struct Partition {
    std::vector<std::vector<int>> parts;  // disjoint nonempty vertex sets
};

// determinant by fraction-free Bareiss elimination, exact over the ring
IPoly bareiss_det(std::vector<std::vector<IPoly>> m, const RingPtr& ring);

// spanning-tree sum: Psi_G = sum over spanning trees of prod_{e not in T} a_e.
// Disconnected graphs give 0.  Self-loop variables appear in every term.
IPoly kirchhoff(const Multigraph& g, RingPtr ring = nullptr);

// the same polynomial as det [[Lambda, Et],[-E, 0]]
IPoly kirchhoff_matrix(const Multigraph& g, RingPtr ring = nullptr);

// Dodgson polynomial: det M(I,J) with a_e = 0 for e in K
IPoly dodgson(const Multigraph& g, const EdgeSpec& spec, RingPtr ring = nullptr);

// spanning-forest polynomial Phi^P_G; direct enumeration, guarded
IPoly forest_poly(const Multigraph& g, const Partition& p, RingPtr ring = nullptr, int guard_edges = 16);

struct SignedPartition {
    int sign;  // +1 / -1
    Partition partition;
    IPoly phi;  // forest polynomial of the partition
};

// Dodgson polynomial as a signed sum of spanning-forest polynomials of
// G \ (I u J u K): partitions of the endpoints of (I u J u K) \ (I n J)
// whose consistent forests become trees in both G\I/(JuK) and G\J/(IuK).
// Signs are fixed by matching monomials against dodgson(g, spec).
std::vector<SignedPartition> dodgson_as_forest_sum(const Multigraph& g, const EdgeSpec& spec,
                                                   RingPtr ring = nullptr);

// 5-invariant, canonical sign (positive graded-lex leading coefficient)
IPoly five_invariant(const Multigraph& g, const std::array<std::string, 5>& edges, RingPtr ring = nullptr);

}  // namespace graphion
