#include "graphion/graphpoly.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

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

std::map<int, int> vertex_positions(const Multigraph& g) {
    std::map<int, int> pos;
    for (size_t i = 0; i < g.vertices().size(); ++i) pos[g.vertices()[i]] = (int)i;
    return pos;
}

int var_of(const RingPtr& ring, const std::string& label) {
    int id = ring->find(Multigraph::var_name(label));
    if (id < 0) throw std::runtime_error("edge variable not in ring: " + label);
    return id;
}

}  // namespace

IPoly bareiss_det(std::vector<std::vector<IPoly>> m, const RingPtr& ring) {
    int n = (int)m.size();
    if (n == 0) return IPoly::constant(ring, 1);
    int sign = 1;
    IPoly prev_pivot = IPoly::constant(ring, 1);
    for (int k = 0; k < n; ++k) {
        // smallest nonzero entry in the remaining block as pivot
        int pr = -1, pc = -1;
        size_t best = SIZE_MAX;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j)
                if (!m[i][j].is_zero()) {
                    size_t sz = m[i][j].nterms();
                    if (sz < best) {
                        best = sz;
                        pr = i;
                        pc = j;
                    }
                }
        if (pr < 0) return IPoly(ring);  // singular
        if (pr != k) {
            std::swap(m[pr], m[k]);
            sign = -sign;
        }
        if (pc != k) {
            for (int i = 0; i < n; ++i) std::swap(m[i][pc], m[i][k]);
            sign = -sign;
        }
        if (k == n - 1) break;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                IPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                if (num.is_zero()) {
                    m[i][j] = num;
                    continue;
                }
                auto q = divide_exact(num, prev_pivot);
                if (!q) throw std::runtime_error("bareiss: inexact division (internal error)");
                m[i][j] = std::move(*q);
            }
            m[i][k] = IPoly(ring);
        }
        prev_pivot = m[k][k];
    }
    IPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

IPoly kirchhoff(const Multigraph& g, RingPtr ring) {
    if (!ring) ring = g.edge_ring();
    IPoly out(ring);
    if (!g.connected() || g.n_vertices() == 0) return out;
    auto pos = vertex_positions(g);
    int n = g.n_vertices(), m = g.n_edges();
    std::vector<int> evar(m);
    std::vector<std::pair<int, int>> ends(m);
    for (int i = 0; i < m; ++i) {
        evar[i] = var_of(ring, g.edges()[i].label);
        ends[i] = {pos.at(g.edges()[i].u), pos.at(g.edges()[i].v)};
    }
    // backtracking over edges, building spanning trees; complement monomials
    std::vector<typename IPoly::Term> terms;
    Monomial all = Monomial::one();
    for (int i = 0; i < m; ++i) all.set_exp(evar[i], all.exp(evar[i]) + 1);
    std::function<void(int, int, UnionFind&, Monomial)> rec = [&](int idx, int joined, UnionFind& uf,
                                                                  Monomial complement) {
        if (joined == n - 1) {
            terms.push_back({complement, Int(1)});
            return;
        }
        if (idx == m || joined + (m - idx) < n - 1) return;
        auto [u, v] = ends[idx];
        if (uf.find(u) != uf.find(v)) {
            UnionFind uf2 = uf;
            uf2.unite(u, v);
            Monomial c2 = complement;
            c2.set_exp(evar[idx], c2.exp(evar[idx]) - 1);
            rec(idx + 1, joined + 1, uf2, c2);
        }
        rec(idx + 1, joined, uf, complement);
    };
    UnionFind uf(n);
    rec(0, 0, uf, all);
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return gl_greater(a.m, b.m); });
    out.t = std::move(terms);
    return out;
}

namespace {

// expanded incidence matrix [[Lambda, Et],[-E, 0]]; rows/cols: edges in list
// order then vertices in id order with the highest-id vertex's row removed
std::vector<std::vector<IPoly>> expanded_matrix(const Multigraph& g, const RingPtr& ring,
                                                const std::set<std::string>& zeroed) {
    auto pos = vertex_positions(g);
    int n = g.n_vertices(), m = g.n_edges();
    int dim = m + n - 1;
    std::vector<std::vector<IPoly>> M(dim, std::vector<IPoly>(dim, IPoly(ring)));
    for (int i = 0; i < m; ++i) {
        const Edge& e = g.edges()[i];
        if (!zeroed.count(e.label)) M[i][i] = IPoly::variable(ring, var_of(ring, e.label));
        if (e.u == e.v) continue;  // self-loop: zero incidence column
        int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
        int plo = pos.at(lo), phi = pos.at(hi);
        // oriented lo -> hi: +1 at lo, -1 at hi; row n-1 removed
        if (plo != n - 1) {
            M[i][m + plo] = IPoly::constant(ring, 1);    // Et block
            M[m + plo][i] = IPoly::constant(ring, -1);   // -E block
        }
        if (phi != n - 1) {
            M[i][m + phi] = IPoly::constant(ring, -1);
            M[m + phi][i] = IPoly::constant(ring, 1);
        }
    }
    return M;
}

}  // namespace

IPoly kirchhoff_matrix(const Multigraph& g, RingPtr ring) {
    if (!ring) ring = g.edge_ring();
    if (!g.connected() || g.n_vertices() == 0) return IPoly(ring);
    auto M = expanded_matrix(g, ring, {});
    return bareiss_det(std::move(M), ring);
}

IPoly dodgson(const Multigraph& g, const EdgeSpec& spec, RingPtr ring) {
    if (!ring) ring = g.edge_ring();
    if (spec.I.size() != spec.J.size()) throw std::runtime_error("dodgson: |I| != |J|");
    std::set<std::string> I(spec.I.begin(), spec.I.end()), J(spec.J.begin(), spec.J.end()),
        K(spec.K.begin(), spec.K.end());
    for (const auto& k : K)
        if (I.count(k) || J.count(k)) throw std::runtime_error("dodgson: K meets I or J");
    for (const auto& l : spec.I) g.edge_index(l);
    for (const auto& l : spec.J) g.edge_index(l);
    for (const auto& l : spec.K) g.edge_index(l);

    auto M = expanded_matrix(g, ring, K);
    // strike rows I and columns J (edge rows/cols come first, in list order)
    std::vector<int> rows, cols;
    int dim = (int)M.size(), m = g.n_edges();
    for (int i = 0; i < dim; ++i) {
        bool skip_row = i < m && I.count(g.edges()[i].label);
        bool skip_col = i < m && J.count(g.edges()[i].label);
        if (!skip_row) rows.push_back(i);
        if (!skip_col) cols.push_back(i);
    }
    std::vector<std::vector<IPoly>> sub(rows.size(), std::vector<IPoly>(cols.size(), IPoly(ring)));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) sub[r][c] = M[rows[r]][cols[c]];
    return bareiss_det(std::move(sub), ring);
}

IPoly forest_poly(const Multigraph& g, const Partition& p, RingPtr ring, int guard_edges) {
    if (!ring) ring = g.edge_ring();
    if (g.n_edges() > guard_edges) throw guard_error("forest_poly: too many edges");
    auto pos = vertex_positions(g);
    int n = g.n_vertices(), m = g.n_edges();
    int nparts = (int)p.parts.size();
    std::vector<int> part_of(n, -1);
    for (int i = 0; i < nparts; ++i) {
        if (p.parts[i].empty()) throw std::runtime_error("forest_poly: empty part");
        for (int v : p.parts[i]) {
            auto it = pos.find(v);
            if (it == pos.end()) throw std::runtime_error("forest_poly: vertex not in graph");
            if (part_of[it->second] != -1) throw std::runtime_error("forest_poly: parts not disjoint");
            part_of[it->second] = i;
        }
    }
    if (nparts == 0 || n == 0) return IPoly(ring);

    std::vector<int> evar(m);
    std::vector<std::pair<int, int>> ends(m);
    for (int i = 0; i < m; ++i) {
        evar[i] = var_of(ring, g.edges()[i].label);
        ends[i] = {pos.at(g.edges()[i].u), pos.at(g.edges()[i].v)};
    }
    Monomial all = Monomial::one();
    for (int i = 0; i < m; ++i) all.set_exp(evar[i], all.exp(evar[i]) + 1);

    int forest_edges = n - nparts;  // components == parts
    if (forest_edges < 0) return IPoly(ring);
    std::vector<typename IPoly::Term> terms;

    // union-find with a part tag per root; merging different tags is illegal
    struct State {
        UnionFind uf;
        std::vector<int> tag;
        explicit State(int n, const std::vector<int>& part_of) : uf(n), tag(part_of) {}
    };
    std::function<void(int, int, State&, Monomial)> rec = [&](int idx, int chosen, State& st,
                                                              Monomial complement) {
        if (chosen == forest_edges) {
            // each part must be a single component
            for (int i = 0; i < nparts; ++i) {
                int root = -1;
                for (int v = 0; v < n; ++v)
                    if (part_of[v] == i) {
                        int r = st.uf.find(v);
                        if (root == -1) root = r;
                        else if (root != r) return;
                    }
            }
            terms.push_back({complement, Int(1)});
            return;
        }
        if (idx == m || chosen + (m - idx) < forest_edges) return;
        auto [u, v] = ends[idx];
        int ru = st.uf.find(u), rv = st.uf.find(v);
        if (ru != rv && !(st.tag[ru] >= 0 && st.tag[rv] >= 0 && st.tag[ru] != st.tag[rv])) {
            State st2 = st;
            st2.uf.unite(u, v);
            int nr = st2.uf.find(u);
            st2.tag[nr] = std::max(st.tag[ru], st.tag[rv]);
            Monomial c2 = complement;
            c2.set_exp(evar[idx], c2.exp(evar[idx]) - 1);
            rec(idx + 1, chosen + 1, st2, c2);
        }
        rec(idx + 1, chosen, st, complement);
    };
    State st(n, part_of);
    rec(0, 0, st, all);
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return gl_greater(a.m, b.m); });
    IPoly out(ring);
    out.t = std::move(terms);
    return out;
}

namespace {

// enumerate set partitions of elems, calling fn on each
void each_partition(const std::vector<int>& elems,
                    const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<int>> parts;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == elems.size()) {
            fn(parts);
            return;
        }
        // index-based: the recursive call grows and shrinks `parts`
        for (size_t k = 0, npart = parts.size(); k < npart; ++k) {
            parts[k].push_back(elems[i]);
            rec(i + 1);
            parts[k].pop_back();
        }
        parts.push_back({elems[i]});
        rec(i + 1);
        parts.pop_back();
    };
    rec(0);
}

// do the contracted edges turn the parts into a single tree (no cycles)?
bool contraction_makes_tree(const Multigraph& g, const std::vector<std::vector<int>>& parts,
                            const std::vector<std::string>& contracted) {
    int np = (int)parts.size();
    std::map<int, int> part_of;
    for (int i = 0; i < np; ++i)
        for (int v : parts[i]) part_of[v] = i;
    UnionFind uf(np);
    int merges = 0;
    for (const auto& lbl : contracted) {
        const Edge& e = g.edge(lbl);
        auto iu = part_of.find(e.u), iv = part_of.find(e.v);
        if (iu == part_of.end() || iv == part_of.end())
            return false;  // contracted edge touching a vertex outside the partition: cannot happen
        if (iu->second == iv->second) return false;  // self-loop after merging: cycle
        if (!uf.unite(iu->second, iv->second)) return false;  // multi-edge between parts: cycle
        ++merges;
    }
    return merges == np - 1;
}

}  // namespace

std::vector<SignedPartition> dodgson_as_forest_sum(const Multigraph& g, const EdgeSpec& spec,
                                                   RingPtr ring) {
    if (!ring) ring = g.edge_ring();
    std::set<std::string> I(spec.I.begin(), spec.I.end()), J(spec.J.begin(), spec.J.end()),
        K(spec.K.begin(), spec.K.end());
    std::set<std::string> IJK, InJ;
    for (const auto& s : I) IJK.insert(s);
    for (const auto& s : J) IJK.insert(s);
    for (const auto& s : K) IJK.insert(s);
    for (const auto& s : I)
        if (J.count(s)) InJ.insert(s);

    std::set<int> endpoint_set;
    for (const auto& lbl : IJK)
        if (!InJ.count(lbl)) {
            const Edge& e = g.edge(lbl);
            endpoint_set.insert(e.u);
            endpoint_set.insert(e.v);
        }
    std::vector<int> endpoints(endpoint_set.begin(), endpoint_set.end());

    Multigraph reduced = g.delete_edges(std::vector<std::string>(IJK.begin(), IJK.end()));

    // contracted edge sets for the two tree conditions
    std::vector<std::string> c1, c2;
    for (const auto& lbl : IJK) {
        bool inI = I.count(lbl) > 0, inJ = J.count(lbl) > 0, inK = K.count(lbl) > 0;
        if ((inJ || inK) && !inI) c1.push_back(lbl);  // G\I/(JuK)
        if ((inI || inK) && !inJ) c2.push_back(lbl);  // G\J/(IuK)
    }

    IPoly target = dodgson(g, spec, ring);
    std::vector<SignedPartition> out;
    if (endpoints.empty()) {
        // I = J, K empty: the trivial single-part partition, Phi = Psi of the
        // graph with the struck edges removed
        if (reduced.n_vertices() == 0) return out;
        Partition p;
        p.parts.push_back({reduced.vertices()[0]});
        IPoly phi = forest_poly(reduced, p, ring, 32);
        int sign = 1;
        if (!phi.is_zero() && !target.is_zero())
            sign = (coeff_is_neg(target.t[0].c) == coeff_is_neg(phi.t[0].c)) ? 1 : -1;
        out.push_back({sign, std::move(p), std::move(phi)});
        return out;
    }
    each_partition(endpoints, [&](const std::vector<std::vector<int>>& parts) {
        if (!contraction_makes_tree(g, parts, c1)) return;
        if (!contraction_makes_tree(g, parts, c2)) return;
        Partition p;
        p.parts = parts;
        IPoly phi = forest_poly(reduced, p, ring, 32);
        int sign = 1;
        if (!phi.is_zero()) {
            // read the sign off the matching monomial of the Dodgson polynomial
            for (const auto& tm : target.t)
                if (tm.m == phi.t[0].m) {
                    sign = coeff_is_neg(tm.c) ? -1 : 1;
                    break;
                }
        }
        out.push_back({sign, std::move(p), std::move(phi)});
    });
    return out;
}

IPoly five_invariant(const Multigraph& g, const std::array<std::string, 5>& e, RingPtr ring) {
    if (!ring) ring = g.edge_ring();
    std::set<std::string> uniq(e.begin(), e.end());
    if (uniq.size() != 5) throw std::runtime_error("five_invariant: labels must be distinct");
    const std::string &i = e[0], &j = e[1], &k = e[2], &l = e[3], &m = e[4];
    IPoly a = dodgson(g, {{i, j}, {k, l}, {m}}, ring);
    IPoly b = dodgson(g, {{i, k, m}, {j, l, m}, {}}, ring);
    IPoly c = dodgson(g, {{i, k}, {j, l}, {m}}, ring);
    IPoly d = dodgson(g, {{i, j, m}, {k, l, m}, {}}, ring);
    return canonical_sign(a * b - c * d);
}

}  // namespace graphion
