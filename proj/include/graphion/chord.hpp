// Rooted connected chord diagrams: generation, the oriented intersection
// graph, the recursive intersection order, terminal-chord statistics, and
// the chord-diagram expansion of the Green function
//   G(x,L) = 1 - sum_{i>=1} (-L)^i/i! sum_{C: b(C)>=i} x^|C| f_C f_{b(C)-i}.
#pragma once

#include "graphion/series.hpp"

#include <string>
#include <vector>

namespace graphion {

struct ChordDiagram {
    int n = 0;
    std::vector<std::pair<int, int>> chords;  // (min,max) pairs covering 1..2n, sorted by min

    static ChordDiagram from_pairs(std::vector<std::pair<int, int>> pairs);
    static ChordDiagram parse(const std::string& text);  // "(1,3)(2,5)(4,6)"
    std::string str() const;                             // canonical identity
};

struct ChordIGraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // oriented smaller chord -> larger chord (1-based)
};

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b);
ChordIGraph intersection_graph(const ChordDiagram& c);
bool diagram_connected(const ChordDiagram& c);

// all rooted connected diagrams on n chords, deterministic order
std::vector<ChordDiagram> generate_connected(int n, int guard = 8);

// recursive order: root first, then components ordered by smallest remaining
// point label, each recursively ordered.  Returns chord indices (0-based
// into chords) in intersection order.  Requires a connected diagram.
std::vector<int> intersection_order(const ChordDiagram& c);

struct DiagramStats {
    std::vector<int> terminal;  // T(C): intersection-order indices, 1-based, increasing
    int b = 0;                  // first terminal index
    std::vector<int> delta;     // n-1 entries, zero-padded successive differences
    std::vector<int> fc_exponents;  // f_C as multiset of f-indices (= delta)
};

DiagramStats stats(const ChordDiagram& c);

// f_C as a monomial in the f-symbols of `ring` (f0, f1, ...)
QPoly f_weight(const DiagramStats& st, const RingPtr& ring);

// ring holding f0..f{n_max}; shared with the DSE solver for cross checks
RingPtr f_ring(int n_max);

// the theorem's double expansion to x^{n_max}, as a GreenSeries with the
// s = -2 sign convention
GreenSeries green_expansion(int n_max, RingPtr ring = nullptr, int guard = 8);

// beta(x) = -2 x gamma_1(x)
XSeries beta_gamma1(int n_max, RingPtr ring = nullptr, int guard = 8);

}  // namespace graphion
