#include "graphion/chord.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace graphion {

ChordDiagram ChordDiagram::from_pairs(std::vector<std::pair<int, int>> pairs) {
    ChordDiagram c;
    c.n = (int)pairs.size();
    std::set<int> seen;
    for (auto& [a, b] : pairs) {
        if (a > b) std::swap(a, b);
        seen.insert(a);
        seen.insert(b);
    }
    if ((int)seen.size() != 2 * c.n || (c.n && (*seen.begin() != 1 || *seen.rbegin() != 2 * c.n)))
        throw std::runtime_error("chord diagram: pairs must form a perfect matching of 1..2n");
    std::sort(pairs.begin(), pairs.end());
    c.chords = std::move(pairs);
    return c;
}

ChordDiagram ChordDiagram::parse(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::runtime_error("chord diagram parse: '(' expected");
        size_t close = text.find(')', pos);
        if (close == std::string::npos) throw std::runtime_error("chord diagram parse: ')' missing");
        std::string body = text.substr(pos + 1, close - pos - 1);
        auto comma = body.find(',');
        if (comma == std::string::npos) throw std::runtime_error("chord diagram parse: ',' missing");
        pairs.push_back({std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1))});
        pos = close + 1;
        skip();
    }
    return from_pairs(std::move(pairs));
}

std::string ChordDiagram::str() const {
    std::ostringstream out;
    for (const auto& [a, b] : chords) out << "(" << a << "," << b << ")";
    return out.str();
}

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
    if (a.first > b.first) std::swap(a, b);
    return a.first < b.first && b.first < a.second && a.second < b.second;
}

ChordIGraph intersection_graph(const ChordDiagram& c) {
    ChordIGraph g;
    g.n = c.n;
    for (int i = 0; i < c.n; ++i)
        for (int j = i + 1; j < c.n; ++j)
            if (chords_cross(c.chords[i], c.chords[j])) g.arcs.push_back({i + 1, j + 1});
    return g;
}

bool diagram_connected(const ChordDiagram& c) {
    if (c.n == 0) return false;
    std::vector<int> comp(c.n, -1);
    std::function<void(int, int)> dfs = [&](int i, int id) {
        comp[i] = id;
        for (int j = 0; j < c.n; ++j)
            if (comp[j] < 0 && chords_cross(c.chords[i], c.chords[j])) dfs(j, id);
    };
    dfs(0, 0);
    return std::all_of(comp.begin(), comp.end(), [](int x) { return x == 0; });
}

std::vector<ChordDiagram> generate_connected(int n, int guard) {
    if (n < 1) throw std::runtime_error("generate_connected: n must be >= 1");
    if (n > guard) throw guard_error("generate_connected: n exceeds guard " + std::to_string(guard));
    std::vector<ChordDiagram> out;
    std::vector<std::pair<int, int>> chords;
    std::vector<char> used(2 * n + 1, 0);
    // union-find over chord slots for the connectivity prune
    std::vector<int> parent(n), maxpt(n);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::function<void()> rec = [&]() {
        int p = 1;
        while (p <= 2 * n && used[p]) ++p;
        if (p > 2 * n) {
            ChordDiagram c;
            c.n = n;
            c.chords = chords;
            std::sort(c.chords.begin(), c.chords.end());
            if (diagram_connected(c)) out.push_back(std::move(c));
            return;
        }
        // a finished component that can no longer be crossed must be the
        // whole diagram
        int k = (int)chords.size();
        if (k) {
            std::vector<char> closed(k, 1);
            for (int i = 0; i < k; ++i) {
                int r = find(i);
                if (maxpt[r] >= p) closed[r] = 0;
            }
            for (int i = 0; i < k; ++i) {
                int r = find(i);
                if (closed[r] && r == i) return;  // dead component: prune
            }
        }
        for (int q = p + 1; q <= 2 * n; ++q) {
            if (used[q]) continue;
            used[p] = used[q] = 1;
            int idx = (int)chords.size();
            chords.push_back({p, q});
            parent[idx] = idx;
            maxpt[idx] = q;
            for (int i = 0; i < idx; ++i)
                if (chords_cross(chords[i], chords[idx])) {
                    int a = find(i), b = find(idx);
                    if (a != b) {
                        parent[a] = b;
                        maxpt[b] = std::max(maxpt[a], maxpt[b]);
                    }
                }
            rec();
            chords.pop_back();
            used[p] = used[q] = 0;
            // union-find is rebuilt incrementally; restore by recomputing
            for (int i = 0; i <= idx && i < n; ++i) parent[i] = i;
            for (int i = 0; i < (int)chords.size(); ++i) {
                maxpt[i] = chords[i].second;
                parent[i] = i;
            }
            for (int i = 0; i < (int)chords.size(); ++i)
                for (int j = 0; j < i; ++j)
                    if (chords_cross(chords[j], chords[i])) {
                        int a = find(j), b = find(i);
                        if (a != b) {
                            parent[a] = b;
                            maxpt[b] = std::max(maxpt[a], maxpt[b]);
                        }
                    }
        }
    };
    rec();
    std::sort(out.begin(), out.end(),
              [](const ChordDiagram& a, const ChordDiagram& b) { return a.chords < b.chords; });
    return out;
}

std::vector<int> intersection_order(const ChordDiagram& c) {
    if (!diagram_connected(c)) throw std::runtime_error("intersection_order: diagram not connected");
    // recursive: indices is the chord subset, points carry the residual labels
    std::function<std::vector<int>(std::vector<int>)> rec = [&](std::vector<int> subset) -> std::vector<int> {
        if (subset.empty()) return {};
        // root = chord with the smallest point among the subset
        int root = subset[0];
        for (int i : subset)
            if (c.chords[i].first < c.chords[root].first) root = i;
        std::vector<int> rest;
        for (int i : subset)
            if (i != root) rest.push_back(i);
        // components of the remaining diagram
        std::vector<int> comp(rest.size(), -1);
        int ncomp = 0;
        for (size_t i = 0; i < rest.size(); ++i) {
            if (comp[i] >= 0) continue;
            std::function<void(size_t)> dfs = [&](size_t a) {
                comp[a] = ncomp;
                for (size_t b = 0; b < rest.size(); ++b)
                    if (comp[b] < 0 && chords_cross(c.chords[rest[a]], c.chords[rest[b]])) dfs(b);
            };
            dfs(i);
            ++ncomp;
        }
        // order components by their smallest remaining point label
        std::vector<int> firstpt(ncomp, INT32_MAX);
        for (size_t i = 0; i < rest.size(); ++i)
            firstpt[comp[i]] = std::min(firstpt[comp[i]], c.chords[rest[i]].first);
        std::vector<int> comp_order(ncomp);
        for (int i = 0; i < ncomp; ++i) comp_order[i] = i;
        std::sort(comp_order.begin(), comp_order.end(),
                  [&](int a, int b) { return firstpt[a] < firstpt[b]; });
        std::vector<int> out{root};
        for (int ci : comp_order) {
            std::vector<int> sub;
            for (size_t i = 0; i < rest.size(); ++i)
                if (comp[i] == ci) sub.push_back(rest[i]);
            auto ordered = rec(std::move(sub));
            out.insert(out.end(), ordered.begin(), ordered.end());
        }
        return out;
    };
    std::vector<int> all(c.n);
    for (int i = 0; i < c.n; ++i) all[i] = i;
    return rec(std::move(all));
}

DiagramStats stats(const ChordDiagram& c) {
    DiagramStats st;
    auto order = intersection_order(c);
    std::vector<int> pos(c.n);  // chord index -> 1-based intersection position
    for (int i = 0; i < c.n; ++i) pos[order[i]] = i + 1;
    // terminal chords: no crossing with a larger chord (chords are sorted by
    // smaller endpoint, so "larger" = later in the list)
    for (int i = 0; i < c.n; ++i) {
        bool outgoing = false;
        for (int j = i + 1; j < c.n && !outgoing; ++j)
            if (chords_cross(c.chords[i], c.chords[j])) outgoing = true;
        if (!outgoing) st.terminal.push_back(pos[i]);
    }
    std::sort(st.terminal.begin(), st.terminal.end());
    st.b = st.terminal.front();
    int k = (int)st.terminal.size();
    for (int i = 0; i < c.n - k; ++i) st.delta.push_back(0);
    for (int i = 1; i < k; ++i) st.delta.push_back(st.terminal[i] - st.terminal[i - 1]);
    st.fc_exponents = st.delta;
    return st;
}

RingPtr f_ring(int n_max) {
    auto ring = std::make_shared<Ring>();
    for (int i = 0; i <= n_max; ++i) ring->add("f" + std::to_string(i));
    return ring;
}

QPoly f_weight(const DiagramStats& st, const RingPtr& ring) {
    QPoly w = QPoly::constant(ring, Rat(1));
    for (int i : st.fc_exponents) w *= QPoly::variable(ring, ring->find("f" + std::to_string(i)));
    return w;
}

GreenSeries green_expansion(int n_max, RingPtr ring, int guard) {
    if (!ring) ring = f_ring(n_max);
    GreenSeries g(ring, -2, n_max);
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& c : generate_connected(n, guard)) {
            DiagramStats st = stats(c);
            QPoly fc = f_weight(st, ring);
            for (int i = 1; i <= st.b && i <= n_max; ++i) {
                int fb = st.b - i;
                QPoly term = fc * QPoly::variable(ring, ring->find("f" + std::to_string(fb)));
                // G = 1 - gamma_i L^i with gamma_i[x^n] = (-1)^i/i! * sum
                Rat coeff((long)((i % 2) ? -1 : 1));
                for (int t = 2; t <= i; ++t) coeff /= t;
                g.gamma[i].c[n] += term * coeff;
            }
        }
    }
    return g;
}

XSeries beta_gamma1(int n_max, RingPtr ring, int guard) {
    GreenSeries g = green_expansion(n_max, std::move(ring), guard);
    return g.gamma[1].shifted(1) * Rat(-2);
}

}  // namespace graphion
