#include "graphion/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace graphion {

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};
}  // namespace

Multigraph::Multigraph(std::vector<int> vertices, std::vector<Edge> edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    std::set<std::string> seen;
    for (const auto& e : edges_) {
        if (!seen.insert(e.label).second) throw std::runtime_error("duplicate edge label " + e.label);
        if (!std::binary_search(verts_.begin(), verts_.end(), e.u) ||
            !std::binary_search(verts_.begin(), verts_.end(), e.v))
            throw std::runtime_error("edge " + e.label + " references unknown vertex");
    }
}

int Multigraph::vert_pos(int v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) throw std::runtime_error("unknown vertex");
    return (int)(it - verts_.begin());
}

int Multigraph::edge_index(const std::string& label) const {
    for (size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].label == label) return (int)i;
    throw std::runtime_error("unknown edge label " + label);
}

bool Multigraph::has_edge(const std::string& label) const {
    for (const auto& e : edges_)
        if (e.label == label) return true;
    return false;
}

int Multigraph::n_components() const {
    if (verts_.empty()) return 0;
    UnionFind uf((int)verts_.size());
    for (const auto& e : edges_) uf.unite(vert_pos(e.u), vert_pos(e.v));
    std::set<int> roots;
    for (int i = 0; i < (int)verts_.size(); ++i) roots.insert(uf.find(i));
    return (int)roots.size();
}

bool Multigraph::connected() const { return n_components() <= 1; }

int Multigraph::betti() const { return n_edges() - n_vertices() + n_components(); }

Multigraph Multigraph::delete_edge(const std::string& label) const {
    int idx = edge_index(label);
    std::vector<Edge> es = edges_;
    es.erase(es.begin() + idx);
    return Multigraph(verts_, std::move(es));
}

Multigraph Multigraph::delete_edges(const std::vector<std::string>& labels) const {
    Multigraph g = *this;
    for (const auto& l : labels) g = g.delete_edge(l);
    return g;
}

Multigraph Multigraph::contract_edge(const std::string& label) const {
    int idx = edge_index(label);
    const Edge e = edges_[idx];
    if (e.u == e.v) return delete_edge(label);  // convention: contracting a loop deletes it
    int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
    std::vector<Edge> es;
    es.reserve(edges_.size() - 1);
    for (size_t i = 0; i < edges_.size(); ++i) {
        if ((int)i == idx) continue;
        Edge f = edges_[i];
        if (f.u == gone) f.u = keep;
        if (f.v == gone) f.v = keep;
        es.push_back(f);
    }
    std::vector<int> vs;
    for (int v : verts_)
        if (v != gone) vs.push_back(v);
    return Multigraph(std::move(vs), std::move(es));
}

Multigraph Multigraph::delete_vertex(int v) const {
    vert_pos(v);  // validate
    std::vector<Edge> es;
    for (const auto& e : edges_)
        if (e.u != v && e.v != v) es.push_back(e);
    std::vector<int> vs;
    for (int x : verts_)
        if (x != v) vs.push_back(x);
    return Multigraph(std::move(vs), std::move(es));
}

Multigraph Multigraph::without_isolated() const {
    std::set<int> used;
    for (const auto& e : edges_) {
        used.insert(e.u);
        used.insert(e.v);
    }
    std::vector<int> vs(used.begin(), used.end());
    return Multigraph(std::move(vs), edges_);
}

std::string Multigraph::var_name(const std::string& label) {
    if (!label.empty() && (std::isalpha((unsigned char)label[0]) || label[0] == '_')) return label;
    return "a" + label;
}

RingPtr Multigraph::edge_ring() const {
    auto ring = std::make_shared<Ring>();
    for (const auto& e : edges_) ring->add(var_name(e.label));
    return ring;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(verts_.size(), 0);
    for (const auto& e : edges_) {
        d[vert_pos(e.u)]++;
        d[vert_pos(e.v)]++;
    }
    return d;
}

Multigraph read_graph(std::istream& in) {
    std::vector<int> vs;
    std::vector<Edge> es;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "v") {
            int id;
            if (!(ls >> id)) throw std::runtime_error("bad vertex line: " + line);
            vs.push_back(id);
        } else if (kind == "e") {
            Edge e;
            if (!(ls >> e.label >> e.u >> e.v)) throw std::runtime_error("bad edge line: " + line);
            vs.push_back(e.u);
            vs.push_back(e.v);
            es.push_back(e);
        } else {
            throw std::runtime_error("unknown line kind '" + kind + "'");
        }
    }
    return Multigraph(std::move(vs), std::move(es));
}

Multigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file " + path);
    return read_graph(in);
}

std::string write_graph(const Multigraph& g) {
    std::ostringstream out;
    for (int v : g.vertices()) out << "v " << v << "\n";
    for (const auto& e : g.edges()) out << "e " << e.label << " " << e.u << " " << e.v << "\n";
    return out.str();
}

// ---- connectivity ----------------------------------------------------------

namespace {
// components of the subgraph with edge set given by mask, as vertex partition
int components_after_removal(const Multigraph& g, const std::vector<std::pair<int, int>>& ends,
                             uint32_t removed_mask, std::vector<int>& comp_of) {
    int n = g.n_vertices();
    UnionFind uf(n);
    for (size_t i = 0; i < ends.size(); ++i)
        if (!(removed_mask & (1u << i))) uf.unite(ends[i].first, ends[i].second);
    comp_of.assign(n, -1);
    int ncomp = 0;
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (comp_of[r] < 0) comp_of[r] = ncomp++;
        comp_of[i] = comp_of[r];
    }
    return ncomp;
}
}  // namespace

bool internally_k_edge_connected(const Multigraph& g, int k) {
    int m = g.n_edges();
    if (m > 30) throw guard_error("internally_k_edge_connected: too many edges");
    std::vector<std::pair<int, int>> ends;
    std::map<int, int> pos;
    for (size_t i = 0; i < g.vertices().size(); ++i) pos[g.vertices()[i]] = (int)i;
    for (const auto& e : g.edges()) ends.push_back({pos.at(e.u), pos.at(e.v)});
    std::vector<int> deg(g.n_vertices(), 0);
    for (auto& [u, v] : ends) deg[u]++, deg[v]++;

    std::vector<int> comp_of;
    // all subsets S with |S| <= k-1
    std::function<bool(int, int, uint32_t)> rec = [&](int start, int left, uint32_t mask) -> bool {
        if (mask) {
            int ncomp = components_after_removal(g, ends, mask, comp_of);
            if (ncomp == 2) {
                // allowed only if one side is an isolated vertex
                std::vector<int> size(2, 0), degsum(2, 0);
                for (int i = 0; i < g.n_vertices(); ++i) size[comp_of[i]]++;
                for (size_t i = 0; i < ends.size(); ++i)
                    if (!(mask & (1u << i))) degsum[comp_of[ends[i].first]]++;
                bool ok = (size[0] == 1 && degsum[0] == 0) || (size[1] == 1 && degsum[1] == 0);
                if (!ok) return false;
            } else if (ncomp > 2) {
                return false;
            }
        }
        if (left == 0) return true;
        for (int i = start; i < (int)ends.size(); ++i)
            if (!rec(i + 1, left - 1, mask | (1u << i))) return false;
        return true;
    };
    return rec(0, k - 1, 0);
}

PrimitivityReport is_primitive_4point(const Multigraph& g, int max_edges) {
    if (!g.connected()) throw std::runtime_error("is_primitive_4point: graph must be connected");
    int m = g.n_edges();
    if (m > max_edges) throw guard_error("is_primitive_4point: too many edges");
    std::vector<std::pair<int, int>> ends;
    std::map<int, int> pos;
    for (size_t i = 0; i < g.vertices().size(); ++i) pos[g.vertices()[i]] = (int)i;
    for (const auto& e : g.edges()) ends.push_back({pos.at(e.u), pos.at(e.v)});

    for (uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        int ne = __builtin_popcount(mask);
        // loops of the edge-induced subgraph: ne - nverts + ncomponents
        UnionFind uf(g.n_vertices());
        std::vector<char> touched(g.n_vertices(), 0);
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) {
                touched[ends[i].first] = touched[ends[i].second] = 1;
                uf.unite(ends[i].first, ends[i].second);
            }
        int nv = 0;
        std::set<int> roots;
        for (int i = 0; i < g.n_vertices(); ++i)
            if (touched[i]) {
                ++nv;
                roots.insert(uf.find(i));
            }
        int ncomp = (int)roots.size();
        int loops = ne - nv + ncomp;
        if (ne <= 2 * loops) {
            PrimitivityReport rep{false, {}};
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) rep.witness.push_back(g.edges()[i].label);
            return rep;
        }
    }
    return {true, {}};
}

std::optional<Multigraph> complete_4point(const Multigraph& g) {
    auto deg = g.degrees();
    std::vector<int> threes;
    for (size_t i = 0; i < deg.size(); ++i) {
        if (deg[i] == 3) threes.push_back(g.vertices()[i]);
        else if (deg[i] != 4) return std::nullopt;
    }
    if (threes.size() != 4) return std::nullopt;
    int apex = g.vertices().empty() ? 0 : g.vertices().back() + 1;
    std::vector<int> vs = g.vertices();
    vs.push_back(apex);
    std::vector<Edge> es = g.edges();
    int i = 0;
    for (int v : threes) es.push_back({"cmpl" + std::to_string(i++), v, apex});
    return Multigraph(std::move(vs), std::move(es));
}

// ---- widths ----------------------------------------------------------------

WidthResult vertex_width(const Multigraph& g, int guard_edges) {
    int m = g.n_edges();
    if (m < 1) throw std::runtime_error("vertex_width: needs at least one edge");
    if (m > guard_edges) throw guard_error("vertex_width: more than " + std::to_string(guard_edges) + " edges");
    std::map<int, int> pos;
    for (size_t i = 0; i < g.vertices().size(); ++i) pos[g.vertices()[i]] = (int)i;
    std::vector<uint32_t> everts(m);  // vertex bitmask per edge
    for (int i = 0; i < m; ++i)
        everts[i] = (1u << pos.at(g.edges()[i].u)) | (1u << pos.at(g.edges()[i].v));

    uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
    std::vector<uint32_t> vset(1u << m, 0);  // union of endpoint masks per edge subset
    for (uint32_t s = 1; s <= full; ++s) {
        int e = __builtin_ctz(s);
        vset[s] = vset[s & (s - 1)] | everts[e];
    }
    // f[S] = min over orders of S (as prefix) of max active-set size; the
    // active set at the step placing e is V(S) & V((E\S) u {e})
    std::vector<uint8_t> f(1u << m, 255);
    std::vector<int8_t> last(1u << m, -1);
    f[0] = 0;
    for (uint32_t s = 1; s <= full; ++s) {
        uint32_t rest = full & ~s;
        for (uint32_t bits = s; bits; bits &= bits - 1) {
            int e = __builtin_ctz(bits);
            uint32_t prev = s & ~(1u << e);
            int active = __builtin_popcount(vset[s] & (vset[rest] | everts[e]));
            uint8_t cost = std::max<uint8_t>(f[prev], (uint8_t)active);
            if (cost < f[s]) {
                f[s] = cost;
                last[s] = (int8_t)e;
            }
        }
    }
    WidthResult res{f[full], {}};
    uint32_t s = full;
    while (s) {
        res.order.push_back(g.edges()[last[s]].label);
        s &= ~(1u << last[s]);
    }
    std::reverse(res.order.begin(), res.order.end());
    return res;
}

int path_width(const Multigraph& g, int guard_vertices) {
    // vertex separation number equals path width; loops and edge multiplicity
    // are irrelevant
    int n = g.n_vertices();
    if (n == 0) return 0;
    if (n > guard_vertices)
        throw guard_error("path_width: more than " + std::to_string(guard_vertices) + " vertices");
    std::map<int, int> pos;
    for (size_t i = 0; i < g.vertices().size(); ++i) pos[g.vertices()[i]] = (int)i;
    std::vector<uint32_t> nbr(n, 0);
    for (const auto& e : g.edges()) {
        int u = pos.at(e.u), v = pos.at(e.v);
        if (u == v) continue;
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }
    uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<uint8_t> f(1u << n, 255);
    f[0] = 0;
    for (uint32_t s = 1; s <= full; ++s) {
        // boundary: vertices of s with a neighbour outside s
        int b = 0;
        for (uint32_t bits = s; bits; bits &= bits - 1) {
            int v = __builtin_ctz(bits);
            if (nbr[v] & ~s) ++b;
        }
        for (uint32_t bits = s; bits; bits &= bits - 1) {
            int v = __builtin_ctz(bits);
            uint8_t cost = std::max<uint8_t>(f[s & ~(1u << v)], (uint8_t)b);
            f[s] = std::min(f[s], cost);
        }
    }
    return f[full];
}

}  // namespace graphion
