// Connes-Kreimer rooted trees: canonical encodings, B_+, the coproduct over
// admissible cuts, the Hochschild 1-cocycle residual, and the combinatorial
// Dyson-Schwinger solver X = 1 + sgn(s) x B_+(X^{1+s}).
//
// A tree is its canonical encoding: "(" + sorted child encodings + ")", so
// "(()())" is the cherry.  A forest is a sorted multiset of trees; linear
// combinations have rational coefficients.
#pragma once

#include "graphion/mpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace graphion {
namespace hopf {

using Tree = std::string;

struct Forest {
    std::vector<Tree> trees;  // sorted

    static Forest empty() { return {}; }
    static Forest single(const Tree& t) { return Forest{{t}}; }
    Forest merged(const Forest& other) const;
    int size() const;  // total vertices
    friend auto operator<=>(const Forest&, const Forest&) = default;
};

bool valid_tree(const Tree& t);
Tree canonical_tree(const Tree& t);  // re-sorts children recursively
int tree_size(const Tree& t);

Tree b_plus(const Forest& f);

using Lin = std::map<Forest, Rat>;                          // linear combination of forests
using Tensor = std::map<std::pair<Forest, Forest>, Rat>;    // left tensor right

Lin lin_single(const Forest& f, Rat c = Rat(1));
Lin lin_add(const Lin& a, const Lin& b);
Lin lin_scale(const Lin& a, const Rat& c);
Lin lin_mul(const Lin& a, const Lin& b);  // forest concatenation, bilinear

// coproduct of a tree over admissible cuts (includes 1 (x) T and T (x) 1),
// extended multiplicatively to forests and linearly to combinations
Tensor coproduct(const Tree& t);
Tensor coproduct(const Forest& f);
Tensor coproduct(const Lin& l);

// Delta B_+(f) - (id (x) B_+) Delta(f) - B_+(f) (x) 1; zero for a 1-cocycle
Tensor cocycle_residual(const Forest& f);

// X(x) = 1 + sgn(s) x B_+(X^{1+s}) to x^N; sgn(0) := +1.
// Returns per-order combinations, index 0..N (order 0 is the empty forest).
std::vector<Lin> solve_combinatorial(int s, int N, int guard = 8);

std::string render(const Lin& l);

}  // namespace hopf
}  // namespace graphion
