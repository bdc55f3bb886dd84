// Labelled multigraphs (parallel edges and self-loops allowed) with the
// minor operations and connectivity/width measures needed for graph
// polynomials and denominator reduction.
//
// Edge order is significant: it induces the variable ids of the edge
// variables a_e in every polynomial built from a graph.
#pragma once

#include "graphion/mpoly.hpp"

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace graphion {

struct Edge {
    std::string label;
    int u, v;
};

class Multigraph {
  public:
    Multigraph() = default;
    Multigraph(std::vector<int> vertices, std::vector<Edge> edges);

    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int n_vertices() const { return (int)verts_.size(); }
    int n_edges() const { return (int)edges_.size(); }

    int edge_index(const std::string& label) const;  // throws on unknown label
    bool has_edge(const std::string& label) const;
    const Edge& edge(const std::string& label) const { return edges_[edge_index(label)]; }

    bool connected() const;
    int n_components() const;
    int betti() const;  // |E| - |V| + #components

    Multigraph delete_edge(const std::string& label) const;
    Multigraph contract_edge(const std::string& label) const;  // self-loop: same as delete
    Multigraph delete_edges(const std::vector<std::string>& labels) const;
    Multigraph delete_vertex(int v) const;  // drops incident edges
    Multigraph without_isolated() const;

    // Ring with one variable "a"+label per edge (plain label if it already
    // starts with a letter), in edge-list order.
    RingPtr edge_ring() const;
    // var id of an edge label within a ring built by edge_ring() of a host
    // graph; helper for subgraph computations sharing the host ring
    static std::string var_name(const std::string& label);

    std::vector<int> degrees() const;  // parallel to vertices(); loops count twice

  private:
    std::vector<int> verts_;
    std::vector<Edge> edges_;
    int vert_pos(int v) const;
};

// graph file format: lines "v <id>", "e <label> <u> <v>", '#' comments
Multigraph read_graph(std::istream& in);
Multigraph read_graph_file(const std::string& path);
std::string write_graph(const Multigraph& g);

// ---- connectivity / primitivity -------------------------------------------

// every (k-1)-subset of edges either leaves H connected or splits off a
// single isolated vertex
bool internally_k_edge_connected(const Multigraph& g, int k);

struct PrimitivityReport {
    bool primitive;
    std::vector<std::string> witness;  // offending subgraph's edges when not primitive
};

// 4-point phi^4 primitivity: every proper edge subgraph with >= 1 edge has
// |E| > 2*loops.  Exhaustive over edge subsets; guarded.
PrimitivityReport is_primitive_4point(const Multigraph& g, int max_edges = 22);

// attach a new apex vertex to the degree-3 vertices; the result must be
// 4-regular (i.e. g must be a 4-point graph), else nullopt
std::optional<Multigraph> complete_4point(const Multigraph& g);

// ---- width parameters ------------------------------------------------------

struct WidthResult {
    int width;
    std::vector<std::string> order;  // witness edge order (vertex_width only)
};

// min over edge orders of the max number of "active" vertices: endpoints of
// the edge being placed plus vertices with edges on both sides.  Subset DP,
// exact; guarded by edge count.
WidthResult vertex_width(const Multigraph& g, int guard_edges = 14);

// path width via the vertex separation number (subset DP over vertices)
int path_width(const Multigraph& g, int guard_vertices = 10);

}  // namespace graphion
