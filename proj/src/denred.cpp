#include "graphion/denred.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace graphion {

int ReductionState::isolated_vertices() const {
    Multigraph rest = graph.delete_edges(reduced);
    std::set<int> used;
    for (const auto& e : rest.edges()) {
        used.insert(e.u);
        used.insert(e.v);
    }
    int count = 0;
    for (int v : rest.vertices())
        if (!used.count(v)) ++count;
    return count;
}

ReductionState d5(const Multigraph& g, const std::array<std::string, 5>& edges, RingPtr ring) {
    if (g.n_edges() < 5) throw std::runtime_error("d5: graph needs at least 5 edges");
    if (!ring) ring = g.edge_ring();
    ReductionState st;
    st.graph = g;
    st.ring = ring;
    st.reduced.assign(edges.begin(), edges.end());
    st.poly = five_invariant(g, edges, ring);
    st.status = st.poly.is_zero() ? ReductionStatus::ended_zero : ReductionStatus::running;
    return st;
}

ReductionState reduce_step(const ReductionState& state, const std::string& label) {
    if (state.status != ReductionStatus::running)
        throw std::runtime_error("reduce_step: reduction already ended");
    if (std::find(state.reduced.begin(), state.reduced.end(), label) != state.reduced.end())
        throw std::runtime_error("reduce_step: edge already reduced: " + label);
    int v = state.ring->find(Multigraph::var_name(label));
    if (v < 0) throw std::runtime_error("reduce_step: unknown edge " + label);

    auto q = coeffs_in(state.poly, v);
    ReductionState next = state;
    if (q.higher()) {
        next.status = ReductionStatus::ended_stuck;
        return next;
    }
    IPoly result(state.ring);
    if (q.a2.is_zero()) {
        result = q.a1;  // linear: disc = beta^2
    } else if (q.a0.is_zero()) {
        result = q.a1;  // a(alpha a + beta): next denominator is beta
    } else {
        IPoly disc = q.a1 * q.a1 - q.a2 * q.a0 * Int(4);
        auto root = poly_sqrt(disc);
        if (!root) {
            next.status = ReductionStatus::ended_stuck;
            return next;
        }
        result = std::move(*root);
    }
    next.reduced.push_back(label);
    next.poly = canonical_sign(result);
    next.status = next.poly.is_zero() ? ReductionStatus::ended_zero : ReductionStatus::running;
    return next;
}

std::vector<ReductionState> reduce_sequence(const Multigraph& g, const std::vector<std::string>& order,
                                            RingPtr ring) {
    if (order.size() < 5) throw std::runtime_error("reduce_sequence: order needs at least 5 edges");
    std::set<std::string> uniq(order.begin(), order.end());
    if (uniq.size() != order.size()) throw std::runtime_error("reduce_sequence: repeated edge in order");
    if (!ring) ring = g.edge_ring();
    std::vector<ReductionState> states;
    states.push_back(d5(g, {order[0], order[1], order[2], order[3], order[4]}, ring));
    for (size_t i = 5; i < order.size(); ++i) {
        if (states.back().status != ReductionStatus::running) break;
        states.push_back(reduce_step(states.back(), order[i]));
    }
    return states;
}

namespace {

struct Shapes {
    std::vector<std::array<std::string, 3>> triangles;
    std::vector<std::array<std::string, 3>> stars;      // 3-valent vertices
    std::vector<std::array<std::string, 5>> adjacent3;  // joined 3-valent pairs
};

Shapes find_shapes(const Multigraph& g) {
    Shapes s;
    const auto& es = g.edges();
    int m = (int)es.size();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                std::multiset<int> vs{es[a].u, es[a].v, es[b].u, es[b].v, es[c].u, es[c].v};
                std::set<int> uniq(vs.begin(), vs.end());
                if (uniq.size() != 3) continue;
                bool all_twice = true;
                for (int v : uniq)
                    if (vs.count(v) != 2) all_twice = false;
                if (all_twice && es[a].u != es[a].v && es[b].u != es[b].v && es[c].u != es[c].v)
                    s.triangles.push_back({es[a].label, es[b].label, es[c].label});
            }
    auto deg = g.degrees();
    for (size_t i = 0; i < g.vertices().size(); ++i) {
        if (deg[i] != 3) continue;
        int v = g.vertices()[i];
        std::array<std::string, 3> inc;
        int k = 0;
        bool loop = false;
        for (const auto& e : es)
            if (e.u == v || e.v == v) {
                if (e.u == e.v) loop = true;
                else if (k < 3) inc[k++] = e.label;
            }
        if (k == 3 && !loop) s.stars.push_back(inc);
    }
    // adjacent 3-valent vertices: a joining edge plus 2+2 side edges
    for (size_t i = 0; i < g.vertices().size(); ++i)
        for (size_t jdx = i + 1; jdx < g.vertices().size(); ++jdx) {
            if (deg[i] != 3 || deg[jdx] != 3) continue;
            int v1 = g.vertices()[i], v2 = g.vertices()[jdx];
            std::string joining;
            int joins = 0;
            for (const auto& e : es)
                if ((e.u == v1 && e.v == v2) || (e.u == v2 && e.v == v1)) {
                    joining = e.label;
                    ++joins;
                }
            if (joins != 1) continue;
            std::array<std::string, 5> shape;
            shape[0] = joining;
            int k = 1;
            bool ok = true;
            for (const auto& e : es) {
                if (e.label == joining) continue;
                bool at1 = (e.u == v1 || e.v == v1), at2 = (e.u == v2 || e.v == v2);
                if (at1 && at2) ok = false;
                else if (at1 || at2) {
                    if (k < 5) shape[k++] = e.label;
                    else ok = false;
                }
            }
            if (ok && k == 5) {
                // order: side edges of v1 first
                std::array<std::string, 5> ordered;
                ordered[0] = joining;
                int p = 1;
                for (const auto& e : es)
                    if (e.label != joining && (e.u == v1 || e.v == v1)) ordered[p++] = e.label;
                for (const auto& e : es)
                    if (e.label != joining && (e.u == v2 || e.v == v2)) ordered[p++] = e.label;
                s.adjacent3.push_back(ordered);
            }
        }
    return s;
}

}  // namespace

OrderSuggestion suggest_order(const Multigraph& g, size_t max_nodes) {
    if (g.n_edges() < 5) throw std::runtime_error("suggest_order: graph needs at least 5 edges");
    RingPtr ring = g.edge_ring();
    Shapes shapes = find_shapes(g);

    // candidate seeds: adjacent-3-valent shapes first, then triangle pairs +
    // 3-valent pairs, then the first five edges
    std::vector<std::pair<std::array<std::string, 5>, std::string>> seeds;
    for (const auto& sh : shapes.adjacent3) seeds.push_back({sh, "adjacent-3-valent"});
    if (!shapes.triangles.empty() && !shapes.stars.empty()) {
        for (const auto& tri : shapes.triangles)
            for (const auto& st : shapes.stars) {
                std::set<std::string> used{tri[0], tri[1]};
                std::array<std::string, 5> seed{tri[0], tri[1], "", "", ""};
                int k = 2;
                for (const auto& lbl : st)
                    if (!used.count(lbl) && k < 4) {
                        seed[k++] = lbl;
                        used.insert(lbl);
                    }
                if (k != 4) continue;
                for (const auto& e : g.edges())
                    if (!used.count(e.label)) {
                        seed[4] = e.label;
                        break;
                    }
                if (!seed[4].empty()) seeds.push_back({seed, "triangle+3-valent"});
                if (seeds.size() > 24) break;
            }
    }
    {
        std::array<std::string, 5> plain;
        for (int i = 0; i < 5; ++i) plain[i] = g.edges()[i].label;
        seeds.push_back({plain, "first-edges"});
    }

    OrderSuggestion best{{}, {}, -1};
    size_t nodes = 0;
    for (const auto& [seed, seedtag] : seeds) {
        ReductionState st;
        try {
            st = d5(g, seed, ring);
        } catch (const std::exception&) {
            continue;
        }
        OrderSuggestion cur;
        for (const auto& lbl : seed) {
            cur.order.push_back(lbl);
            cur.tags.push_back("seed:" + seedtag);
        }
        // depth-first greedy with backtracking; rule-completing edges first
        std::function<bool(const ReductionState&, OrderSuggestion&)> dfs =
            [&](const ReductionState& state, OrderSuggestion& out) -> bool {
            if ((int)state.reduced.size() == g.n_edges() || state.status == ReductionStatus::ended_zero)
                return true;
            if (state.status != ReductionStatus::running) return false;
            if (++nodes > max_nodes) return true;  // budget: keep what we have
            std::set<std::string> done(state.reduced.begin(), state.reduced.end());
            std::vector<std::pair<std::string, std::string>> cands;
            auto add_completions = [&](const auto& configs, const char* tag) {
                for (const auto& cfg : configs) {
                    int have = 0;
                    std::string missing;
                    for (const auto& lbl : cfg) {
                        if (done.count(lbl)) ++have;
                        else missing = lbl;
                    }
                    if (have == (int)cfg.size() - 1 && !missing.empty()) cands.push_back({missing, tag});
                }
            };
            add_completions(shapes.triangles, "triangle");
            add_completions(shapes.stars, "3-valent");
            for (const auto& e : g.edges())
                if (!done.count(e.label)) cands.push_back({e.label, "search"});
            std::set<std::string> tried;
            for (const auto& [lbl, tag] : cands) {
                if (!tried.insert(lbl).second) continue;
                ReductionState nxt = reduce_step(state, lbl);
                if (nxt.status == ReductionStatus::ended_stuck) continue;
                out.order.push_back(lbl);
                out.tags.push_back(tag);
                if (dfs(nxt, out)) return true;
                out.order.pop_back();
                out.tags.pop_back();
            }
            return false;
        };
        if (st.status == ReductionStatus::running) dfs(st, cur);
        // replay to count reachable depth
        auto states = reduce_sequence(g, cur.order, ring);
        cur.reached = (int)states.back().reduced.size();
        if (cur.reached > best.reached) best = cur;
        if (best.reached == g.n_edges()) break;
    }
    return best;
}

std::pair<IPoly, IPoly> free_d7(const Multigraph& g, const std::array<std::string, 5>& shape,
                                const std::string& i, const std::string& j, RingPtr ring) {
    if (!ring) ring = g.edge_ring();
    const std::string &s1 = shape[0], &s2 = shape[1], &s3 = shape[2], &s4 = shape[3], &s5 = shape[4];
    const Edge& join = g.edge(s1);
    int v1 = join.u, v2 = join.v;
    auto incident = [&](const std::string& lbl, int v) {
        const Edge& e = g.edge(lbl);
        return e.u == v || e.v == v;
    };
    // shape[1..2] at one endpoint, shape[3..4] at the other
    if (incident(s2, v2) && incident(s3, v2) && incident(s4, v1) && incident(s5, v1)) std::swap(v1, v2);
    auto deg = g.degrees();
    auto degree_of = [&](int v) {
        for (size_t k = 0; k < g.vertices().size(); ++k)
            if (g.vertices()[k] == v) return deg[k];
        return -1;
    };
    if (!(incident(s2, v1) && incident(s3, v1) && incident(s4, v2) && incident(s5, v2)))
        throw std::runtime_error("free_d7: edges do not form the adjacent-3-valent shape");
    if (degree_of(v1) != 3 || degree_of(v2) != 3)
        throw std::runtime_error("free_d7: shape vertices are not 3-valent");

    IPoly f1 = dodgson(g, {{s2, s3, s4}, {s4, i, j}, {s1, s5}}, ring) -
               dodgson(g, {{s2, s3, s5}, {i, j, s5}, {s1, s4}}, ring);
    Multigraph h = g.delete_vertex(v1).delete_vertex(v2);
    IPoly f2 = dodgson(h, {{i}, {j}, {}}, ring);
    return {f1, f2};
}

CovResult change_of_variables(const ReductionState& state, const CovPartition& part) {
    const Multigraph& g = state.graph;
    CovResult res;
    std::set<std::string> g1(part.g1.begin(), part.g1.end()), g2(part.g2.begin(), part.g2.end()),
        g3(part.g3.begin(), part.g3.end());
    if (g1.size() + g2.size() + g3.size() != (size_t)g.n_edges())
        throw std::runtime_error("change_of_variables: G1,G2,G3 must partition the edges");
    for (const auto& l : g1)
        if (g2.count(l) || g3.count(l)) throw std::runtime_error("change_of_variables: parts overlap");
    for (const auto& l : g2)
        if (g3.count(l)) throw std::runtime_error("change_of_variables: parts overlap");
    {
        std::set<std::string> red(state.reduced.begin(), state.reduced.end());
        if (red != g1) throw std::runtime_error("change_of_variables: state must have reduced exactly G1");
    }

    auto edge_subgraph = [&](const std::set<std::string>& labels) {
        std::vector<Edge> es;
        std::vector<int> vs;
        for (const auto& e : g.edges())
            if (labels.count(e.label)) {
                es.push_back(e);
                vs.push_back(e.u);
                vs.push_back(e.v);
            }
        return Multigraph(vs, es);
    };
    std::set<std::string> g23 = g2;
    for (const auto& l : g3) g23.insert(l);
    Multigraph G23 = edge_subgraph(g23), G3 = edge_subgraph(g3), G12 = edge_subgraph([&] {
        std::set<std::string> s = g1;
        for (const auto& l : g2) s.insert(l);
        return s;
    }());
    if (!G23.connected()) throw std::runtime_error("change_of_variables: G2 u G3 must be connected");

    // shared vertices of G1 u G2 and G3
    std::set<int> v12(G12.vertices().begin(), G12.vertices().end());
    for (int v : G3.vertices())
        if (v12.count(v)) res.shared_vertices.push_back(v);
    int n = (int)res.shared_vertices.size();
    // vertices involved in G1 but not G2 u G3
    Multigraph G1 = edge_subgraph(g1);
    std::set<int> v23(G23.vertices().begin(), G23.vertices().end());
    int v = 0;
    for (int x : G1.vertices())
        if (!v23.count(x)) ++v;

    res.two_l_g23 = 2 * G23.betti();
    res.two_l_g3 = 2 * G3.betti();
    res.n_g1 = (int)g1.size();
    res.n_g2 = (int)g2.size();
    res.two_v = 2 * v;
    res.two_n = 2 * n;

    Partition p;
    for (int x : res.shared_vertices) p.parts.push_back({x});
    res.q = forest_poly(G3, p, state.ring);

    if (res.inequality_value() < 0) {
        res.status = CovResult::Status::hypothesis_failed;
        return res;
    }

    std::map<int, IPoly> bindings;
    for (const auto& lbl : g2) {
        int var = state.ring->find(Multigraph::var_name(lbl));
        bindings[var] = IPoly::variable(state.ring, var) * res.q;
    }
    IPoly dtilde = substitute(state.poly, bindings);
    IPoly qpow = res.q.pow((unsigned)g2.size() + 1);
    auto quot = divide_exact(dtilde, qpow);
    if (!quot) {
        res.status = CovResult::Status::anomalous_factorization;
        return res;
    }
    res.r = std::move(*quot);
    res.status = CovResult::Status::ok;
    return res;
}

}  // namespace graphion
