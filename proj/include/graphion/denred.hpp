// Denominator reduction: the 5-invariant seed D^5, the quadratic reduction
// step via the discriminant square root, free-factorization bookkeeping, the
// two-factor D^7 of the adjacent-3-valent-vertex shape, and the change of
// variables that pulls out Q^{|G2|+1}.
#pragma once

#include "graphion/graph.hpp"
#include "graphion/graphpoly.hpp"
#include "graphion/mpoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace graphion {

enum class ReductionStatus { running, ended_zero, ended_stuck };

struct ReductionState {
    Multigraph graph;
    RingPtr ring;
    std::vector<std::string> reduced;  // edge labels, in reduction order
    IPoly poly;                        // D^j, j = 5 + (reduced.size() - 5)
    ReductionStatus status = ReductionStatus::running;

    int j() const { return (int)reduced.size(); }
    int isolated_vertices() const;  // isolated in graph minus reduced edges
    // colour count of D^j viewed with isolated vertices removed
    int colour_count() const { return 7 + (j() - 5) - 2 * isolated_vertices(); }
};

// D^5 = the 5-invariant of the given edges
ReductionState d5(const Multigraph& g, const std::array<std::string, 5>& edges, RingPtr ring = nullptr);

// One reduction step in edge `label`.  With D^j = alpha a^2 + beta a + gamma:
// D^{j+1} = sqrt(beta^2 - 4 alpha gamma) when that is a perfect square
// (equivalently D^j = (Aa+B)(Ca+D) and D^{j+1} = +-(AD-BC)); result carries
// the canonical sign.  Failure to factor or degree > 2 -> ended_stuck.
ReductionState reduce_step(const ReductionState& state, const std::string& label);

// d5 on order[0..4], then reduce_step along the rest; stops early on
// ended_zero / ended_stuck.  Returns all intermediate states (first is D^5).
std::vector<ReductionState> reduce_sequence(const Multigraph& g, const std::vector<std::string>& order,
                                            RingPtr ring = nullptr);

struct OrderSuggestion {
    std::vector<std::string> order;
    std::vector<std::string> tags;  // per edge: seed / triangle / 3-valent / adjacent-3-valent / search
    int reached;                    // edges successfully reduced when replayed
};

// Greedy order heuristic: seed the 5-invariant from an adjacent-3-valent
// pair or triangle/3-valent configurations, then prefer edges completed for
// free by those shapes, verifying each step symbolically with backtracking.
OrderSuggestion suggest_order(const Multigraph& g, size_t max_nodes = 4000);

// The guaranteed two-factor D^7 for two adjacent 3-valent vertices:
// shape[0] joins the two vertices, shape[1], shape[2] are the other edges at
// one of them and shape[3], shape[4] at the other.  Returns the two factors
// (Psi^{s2 s3 s4, s4 i j}_{G, s1 s5} - Psi^{s2 s3 s5, i j s5}_{G, s1 s4},
//  Psi^{i,j}_H) with H = G minus the two vertices.
std::pair<IPoly, IPoly> free_d7(const Multigraph& g, const std::array<std::string, 5>& shape,
                                const std::string& i, const std::string& j, RingPtr ring = nullptr);

struct CovPartition {
    std::vector<std::string> g1, g2, g3;  // disjoint, covering E(G)
};

struct CovResult {
    enum class Status { ok, hypothesis_failed, anomalous_factorization } status;
    // inequality 2l(G2uG3) - 2l(G3) + |G1| - |G2| - 2v - 2n + 3 >= 0, term by term
    int two_l_g23 = 0, two_l_g3 = 0, n_g1 = 0, n_g2 = 0, two_v = 0, two_n = 0;
    int inequality_value() const { return two_l_g23 - two_l_g3 + n_g1 - n_g2 - two_v - two_n + 3; }
    std::vector<int> shared_vertices;  // v_1..v_n
    IPoly q;                           // forest polynomial of G3 for {v_1},...,{v_n}
    IPoly r;                           // D-tilde / Q^{|G2|+1} when status == ok
};

// Scale the G2 variables by Q in the state's polynomial and divide by
// Q^{|G2|+1}.  The state must have reduced exactly the edges of G1.
CovResult change_of_variables(const ReductionState& state, const CovPartition& part);

}  // namespace graphion
