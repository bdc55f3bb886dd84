#include "graphion/hopftree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace graphion {
namespace hopf {

namespace {

// split "(A)(B)(C)" into top-level groups
std::vector<std::string> split_children(const std::string& inner) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] == '(') {
            if (depth == 0) start = i;
            ++depth;
        } else if (inner[i] == ')') {
            --depth;
            if (depth == 0) out.push_back(inner.substr(start, i - start + 1));
            if (depth < 0) throw std::runtime_error("tree encoding: unbalanced parentheses");
        } else {
            throw std::runtime_error("tree encoding: unexpected character");
        }
    }
    if (depth != 0) throw std::runtime_error("tree encoding: unbalanced parentheses");
    return out;
}

}  // namespace

bool valid_tree(const Tree& t) {
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') return false;
    try {
        (void)split_children(t.substr(1, t.size() - 2));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

Tree canonical_tree(const Tree& t) {
    if (!valid_tree(t)) throw std::runtime_error("not a tree encoding: " + t);
    auto children = split_children(t.substr(1, t.size() - 2));
    for (auto& c : children) c = canonical_tree(c);
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    return out + ")";
}

int tree_size(const Tree& t) {
    int n = 0;
    for (char c : t)
        if (c == '(') ++n;
    return n;
}

Forest Forest::merged(const Forest& other) const {
    Forest r = *this;
    r.trees.insert(r.trees.end(), other.trees.begin(), other.trees.end());
    std::sort(r.trees.begin(), r.trees.end());
    return r;
}

int Forest::size() const {
    int n = 0;
    for (const auto& t : trees) n += tree_size(t);
    return n;
}

Tree b_plus(const Forest& f) {
    std::string out = "(";
    for (const auto& t : f.trees) out += t;  // forest is sorted, so this is canonical
    return out + ")";
}

Lin lin_single(const Forest& f, Rat c) {
    Lin l;
    if (c != 0) l[f] = c;
    return l;
}

Lin lin_add(const Lin& a, const Lin& b) {
    Lin r = a;
    for (const auto& [f, c] : b) {
        Rat& slot = r[f];
        slot += c;
        if (slot == 0) r.erase(f);
    }
    return r;
}

Lin lin_scale(const Lin& a, const Rat& c) {
    Lin r;
    if (c == 0) return r;
    for (const auto& [f, x] : a) r[f] = x * c;
    return r;
}

Lin lin_mul(const Lin& a, const Lin& b) {
    Lin r;
    for (const auto& [fa, ca] : a)
        for (const auto& [fb, cb] : b) {
            Rat& slot = r[fa.merged(fb)];
            slot += ca * cb;
            if (slot == 0) r.erase(fa.merged(fb));
        }
    return r;
}

namespace {

// all (pruned forest, remaining tree or empty) pairs of admissible cuts;
// the empty remaining part happens only for the root cut
std::vector<std::pair<Forest, std::optional<Tree>>> cuts_of(const Tree& t) {
    auto children = split_children(t.substr(1, t.size() - 2));
    std::vector<std::pair<Forest, std::optional<Tree>>> out;
    out.push_back({Forest::single(t), std::nullopt});  // cut at the root: T (x) 1
    // otherwise combine independent cuts of the child subtrees
    std::vector<std::vector<std::pair<Forest, std::optional<Tree>>>> per_child;
    for (const auto& c : children) per_child.push_back(cuts_of(c));
    std::vector<std::pair<Forest, std::optional<Tree>>> acc{{Forest::empty(), Tree("")}};
    // acc's Tree field abused as concatenation buffer for remaining children
    struct Partial {
        Forest pruned;
        std::vector<Tree> kept;
    };
    std::vector<Partial> partials{{Forest::empty(), {}}};
    for (const auto& options : per_child) {
        std::vector<Partial> next;
        for (const auto& p : partials)
            for (const auto& [pf, rest] : options) {
                Partial q = p;
                q.pruned = q.pruned.merged(pf);
                if (rest) q.kept.push_back(*rest);
                next.push_back(std::move(q));
            }
        partials = std::move(next);
    }
    for (auto& p : partials) {
        std::sort(p.kept.begin(), p.kept.end());
        std::string root = "(";
        for (const auto& k : p.kept) root += k;
        root += ")";
        out.push_back({p.pruned, root});
    }
    return out;
}

}  // namespace

Tensor coproduct(const Tree& t) {
    Tree ct = canonical_tree(t);
    Tensor out;
    for (const auto& [pruned, rest] : cuts_of(ct)) {

        Forest right = rest ? Forest::single(*rest) : Forest::empty();
        out[{pruned, right}] += 1;
    }
    return out;
}

Tensor coproduct(const Forest& f) {
    Tensor acc;
    acc[{Forest::empty(), Forest::empty()}] = 1;
    for (const auto& t : f.trees) {
        Tensor tc = coproduct(t);
        Tensor next;
        for (const auto& [ab, c1] : acc)
            for (const auto& [cd, c2] : tc) {
                auto key = std::make_pair(ab.first.merged(cd.first), ab.second.merged(cd.second));
                next[key] += c1 * c2;
            }
        acc = std::move(next);
    }
    return acc;
}

Tensor coproduct(const Lin& l) {
    Tensor out;
    for (const auto& [f, c] : l) {
        for (const auto& [key, x] : coproduct(f)) {
            Rat& slot = out[key];
            slot += c * x;
            if (slot == 0) out.erase(key);
        }
    }
    return out;
}

Tensor cocycle_residual(const Forest& f) {
    Tensor out = coproduct(Tree(b_plus(f)));
    // minus (id (x) B_+) Delta(f)
    for (const auto& [key, c] : coproduct(f)) {
        auto shifted = std::make_pair(key.first, Forest::single(b_plus(key.second)));
        Rat& slot = out[shifted];
        slot -= c;
        if (slot == 0) out.erase(shifted);
    }
    // minus B_+(f) (x) 1
    auto last = std::make_pair(Forest::single(b_plus(f)), Forest::empty());
    Rat& slot = out[last];
    slot -= 1;
    if (slot == 0) out.erase(last);
    return out;
}

std::vector<Lin> solve_combinatorial(int s, int N, int guard) {
    if (N > guard) throw guard_error("solve_combinatorial: order exceeds guard");
    int sgn = s < 0 ? -1 : 1;
    int w = 1 + s;
    // X as per-order combinations; X[0] = 1
    std::vector<Lin> X(N + 1);
    X[0] = lin_single(Forest::empty());
    for (int iter = 0; iter < N; ++iter) {
        // Y = X^w with X = 1 + Z, X^w = sum_j binom(w,j) Z^j
        std::vector<Lin> Y(N + 1);
        Y[0] = lin_single(Forest::empty());
        std::vector<std::vector<Lin>> Zpow{{}};
        // Z^j stored per order; Z^0 = 1
        std::vector<Lin> Zj(N + 1);
        Zj[0] = lin_single(Forest::empty());
        for (int j = 1; j <= N; ++j) {
            std::vector<Lin> Zj1(N + 1);
            for (int a = 1; a <= N; ++a)
                for (int b = 0; a + b <= N; ++b)
                    if (!X[a].empty() && !Zj[b].empty() && a + b >= 1)
                        Zj1[a + b] = lin_add(Zj1[a + b], lin_mul(X[a], Zj[b]));
            Zj = std::move(Zj1);
            // binom(w, j)
            Rat c(1);
            for (int i = 0; i < j; ++i) {
                c *= Rat(w - i);
                c /= Rat(i + 1);
            }
            if (c != 0)
                for (int o = 0; o <= N; ++o) Y[o] = lin_add(Y[o], lin_scale(Zj[o], c));
        }
        // X_new = 1 + sgn x B_+(Y)
        std::vector<Lin> Xn(N + 1);
        Xn[0] = lin_single(Forest::empty());
        for (int o = 0; o + 1 <= N; ++o)
            for (const auto& [f, c] : Y[o]) {
                Rat coeff = c * Rat(sgn);
                if (coeff == 0) continue;
                Forest bf = Forest::single(b_plus(f));
                Lin& slot = Xn[o + 1];
                Rat& v = slot[bf];
                v += coeff;
                if (v == 0) slot.erase(bf);
            }
        X = std::move(Xn);
    }
    return X;
}

std::string render(const Lin& l) {
    if (l.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [f, c] : l) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string fs;
        for (const auto& t : f.trees) fs += (fs.empty() ? "" : "*") + t;
        if (fs.empty()) fs = "1";
        if (a == 1) out << fs;
        else out << a.get_str() << "*" << fs;
    }
    return out.str();
}

}  // namespace hopf
}  // namespace graphion
