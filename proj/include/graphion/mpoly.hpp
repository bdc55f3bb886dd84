// Sparse multivariate polynomials with exact coefficients.
//
// Monomials are packed exponent vectors (35 variables max, exponents < 32)
// stored in three 64-bit words with the total degree in the top byte, so that
// plain word comparison gives the graded-lex order (smaller variable id =
// higher lexicographic priority).  Polynomials are term vectors sorted in
// descending graded-lex order with no zero coefficients; that ordering is the
// canonical form used for printing and for the leading-term recursions
// (exact square root, exact division).
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace graphion {

using Int = mpz_class;
using Rat = mpq_class;

struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Variable table.  Ids are assigned in insertion order and never change;
// polynomials built over the same Ring instance are compatible.
class Ring {
  public:
    static constexpr int max_vars = 35;

    int add(const std::string& name) {
        if (index_.count(name)) throw std::runtime_error("ring: duplicate variable " + name);
        if ((int)names_.size() >= max_vars) throw guard_error("ring: more than 35 variables");
        names_.push_back(name);
        index_[name] = (int)names_.size() - 1;
        return (int)names_.size() - 1;
    }
    int add_or_get(const std::string& name) {
        auto it = index_.find(name);
        return it != index_.end() ? it->second : add(name);
    }
    int find(const std::string& name) const {
        auto it = index_.find(name);
        return it != index_.end() ? it->second : -1;
    }
    const std::string& name(int id) const { return names_.at(id); }
    int size() const { return (int)names_.size(); }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<Ring>;

namespace detail {
// Word layout: w0 = [deg:8][v0..v10, 5 bits each][pad:1],
//              w1 = [v11..v22][pad:4], w2 = [v23..v34][pad:4].
constexpr int kVarsW0 = 11, kVarsW1 = 12;
inline int word_of(int v) { return v < kVarsW0 ? 0 : (v < kVarsW0 + kVarsW1 ? 1 : 2); }
inline int shift_of(int v) {
    if (v < kVarsW0) return 51 - 5 * v;
    if (v < kVarsW0 + kVarsW1) return 59 - 5 * (v - kVarsW0);
    return 59 - 5 * (v - kVarsW0 - kVarsW1);
}
// Top bit of every field (including the degree byte), per word; a carry into
// any of these during packed addition means a field overflowed.
constexpr uint64_t tops(int word) {
    uint64_t m = 0;
    if (word == 0) {
        m |= 1ull << 63;
        for (int v = 0; v < kVarsW0; ++v) m |= 1ull << (51 - 5 * v + 4);
    } else {
        for (int j = 0; j < 12; ++j) m |= 1ull << (59 - 5 * j + 4);
    }
    return m;
}
constexpr uint64_t kTops0 = tops(0), kTops12 = tops(1);
}  // namespace detail

struct Monomial {
    uint64_t w[3] = {0, 0, 0};

    static Monomial one() { return {}; }
    static Monomial var(int v, unsigned e = 1) {
        Monomial m;
        m.set_exp(v, e);
        return m;
    }

    unsigned exp(int v) const { return (w[detail::word_of(v)] >> detail::shift_of(v)) & 31u; }
    void set_exp(int v, unsigned e) {
        if (v < 0 || v >= Ring::max_vars) throw std::runtime_error("monomial: variable id out of range");
        if (e > 31) throw guard_error("monomial: exponent exceeds 31");
        unsigned old = exp(v);
        int wd = detail::word_of(v), sh = detail::shift_of(v);
        w[wd] = (w[wd] & ~(31ull << sh)) | ((uint64_t)e << sh);
        set_deg(deg() - old + e);
    }
    unsigned deg() const { return (unsigned)(w[0] >> 56); }
    bool is_one() const { return !w[0] && !w[1] && !w[2]; }

    // nullopt on field overflow (per-variable exponent or total degree).
    static std::optional<Monomial> mul(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < 3; ++i) {
            r.w[i] = a.w[i] + b.w[i];
            uint64_t carries = (a.w[i] & b.w[i]) | ((a.w[i] | b.w[i]) & ~r.w[i]);
            if (carries & (i == 0 ? detail::kTops0 : detail::kTops12)) return std::nullopt;
        }
        return r;
    }
    // a / b, nullopt unless b divides a in every variable.
    static std::optional<Monomial> div(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < 3; ++i) r.w[i] = a.w[i] - b.w[i];
        // validate: r + b must reproduce a without any field carry
        for (int i = 0; i < 3; ++i) {
            uint64_t carries = (r.w[i] & b.w[i]) | ((r.w[i] | b.w[i]) & ~a.w[i]);
            if (carries & (i == 0 ? detail::kTops0 : detail::kTops12)) return std::nullopt;
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.w[0] == b.w[0] && a.w[1] == b.w[1] && a.w[2] == b.w[2];
    }
    // graded-lex: true if a > b
    friend bool gl_greater(const Monomial& a, const Monomial& b) {
        if (a.w[0] != b.w[0]) return a.w[0] > b.w[0];
        if (a.w[1] != b.w[1]) return a.w[1] > b.w[1];
        return a.w[2] > b.w[2];
    }

  private:
    void set_deg(unsigned d) { w[0] = (w[0] & ~(255ull << 56)) | ((uint64_t)d << 56); }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (uint64_t x : m.w) {
            x ^= x >> 30;
            x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 27;
            h = (h ^ x) * 0x94d049bb133111ebull;
        }
        return (size_t)h;
    }
};

// coefficient helpers shared by the Int and Rat instantiations
inline void coeff_addmul(Int& acc, const Int& a, const Int& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void coeff_addmul(Rat& acc, const Rat& a, const Rat& b) { acc += a * b; }
inline bool coeff_is_zero(const Int& c) { return mpz_sgn(c.get_mpz_t()) == 0; }
inline bool coeff_is_zero(const Rat& c) { return mpq_sgn(c.get_mpq_t()) == 0; }
inline bool coeff_is_neg(const Int& c) { return mpz_sgn(c.get_mpz_t()) < 0; }
inline bool coeff_is_neg(const Rat& c) { return mpq_sgn(c.get_mpq_t()) < 0; }
std::string coeff_str(const Int& c);
std::string coeff_str(const Rat& c);

template <class C>
struct MPoly {
    struct Term {
        Monomial m;
        C c;
    };

    RingPtr ring;                // may be null for pure constants
    std::vector<Term> t;         // descending graded-lex, no zero coefficients

    MPoly() = default;
    explicit MPoly(RingPtr r) : ring(std::move(r)) {}

    static MPoly constant(RingPtr r, C v) {
        MPoly p(std::move(r));
        if (!coeff_is_zero(v)) p.t.push_back({Monomial::one(), std::move(v)});
        return p;
    }
    static MPoly variable(RingPtr r, int id, C coeff = C(1), unsigned e = 1) {
        MPoly p(std::move(r));
        if (!coeff_is_zero(coeff)) p.t.push_back({Monomial::var(id, e), std::move(coeff)});
        return p;
    }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].m.is_one()); }
    unsigned degree() const { return t.empty() ? 0 : t[0].m.deg(); }  // graded-lex leading = max degree
    size_t nterms() const { return t.size(); }
    const C& leading_coeff() const {
        static const C zero{};
        return t.empty() ? zero : t[0].c;
    }

    RingPtr ring_or(const MPoly& other) const { return ring ? ring : other.ring; }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& tm : r.t) tm.c = -tm.c;
        return r;
    }
    MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
    MPoly& operator-=(const MPoly& b) { return *this = *this - b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.ring_or(b));
        if (a.t.empty() || b.t.empty()) return r;
        if (a.t.size() == 1 || b.t.size() == 1) {
            const MPoly& big = a.t.size() == 1 ? b : a;
            const Term& s = a.t.size() == 1 ? a.t[0] : b.t[0];
            r.t.reserve(big.t.size());
            for (const auto& tm : big.t) {
                auto m = Monomial::mul(tm.m, s.m);
                if (!m) throw guard_error("mpoly: monomial overflow in product");
                r.t.push_back({*m, tm.c * s.c});
            }
            // multiplying every term by one monomial preserves the order
            return r;
        }
        std::unordered_map<Monomial, C, MonomialHash> acc;
        acc.reserve(a.t.size() * 2);
        for (const auto& ta : a.t)
            for (const auto& tb : b.t) {
                auto m = Monomial::mul(ta.m, tb.m);
                if (!m) throw guard_error("mpoly: monomial overflow in product");
                coeff_addmul(acc[*m], ta.c, tb.c);
            }
        r.t.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!coeff_is_zero(c)) r.t.push_back({m, std::move(c)});
        std::sort(r.t.begin(), r.t.end(), [](const Term& x, const Term& y) { return gl_greater(x.m, y.m); });
        return r;
    }
    MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

    MPoly operator*(const C& s) const {
        MPoly r(ring);
        if (coeff_is_zero(s)) return r;
        r.t = t;
        for (auto& tm : r.t) tm.c *= s;
        return r;
    }

    MPoly pow(unsigned e) const {
        MPoly r = constant(ring, C(1));
        MPoly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.t.size() != b.t.size()) return false;
        for (size_t i = 0; i < a.t.size(); ++i)
            if (!(a.t[i].m == b.t[i].m) || a.t[i].c != b.t[i].c) return false;
        return true;
    }

    unsigned deg_in(int v) const {
        unsigned d = 0;
        for (const auto& tm : t) d = std::max(d, tm.m.exp(v));
        return d;
    }
    bool involves(int v) const {
        for (const auto& tm : t)
            if (tm.m.exp(v)) return true;
        return false;
    }

  private:
    static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
        MPoly r(a.ring_or(b));
        r.t.reserve(a.t.size() + b.t.size());
        size_t i = 0, j = 0;
        while (i < a.t.size() || j < b.t.size()) {
            if (j == b.t.size() || (i < a.t.size() && gl_greater(a.t[i].m, b.t[j].m))) {
                r.t.push_back(a.t[i++]);
            } else if (i == a.t.size() || gl_greater(b.t[j].m, a.t[i].m)) {
                r.t.push_back(b.t[j]);
                if (subtract) r.t.back().c = -r.t.back().c;
                ++j;
            } else {
                C c = subtract ? C(a.t[i].c - b.t[j].c) : C(a.t[i].c + b.t[j].c);
                if (!coeff_is_zero(c)) r.t.push_back({a.t[i].m, std::move(c)});
                ++i, ++j;
            }
        }
        return r;
    }
};

using IPoly = MPoly<Int>;
using QPoly = MPoly<Rat>;

// simultaneous substitution; bindings map var id -> replacement polynomial
template <class C>
MPoly<C> substitute(const MPoly<C>& p, const std::map<int, MPoly<C>>& bindings) {
    if (bindings.empty()) return p;
    std::map<std::pair<int, unsigned>, MPoly<C>> powcache;
    auto power = [&](int v, unsigned e) -> const MPoly<C>& {
        auto key = std::make_pair(v, e);
        auto it = powcache.find(key);
        if (it == powcache.end()) it = powcache.emplace(key, bindings.at(v).pow(e)).first;
        return it->second;
    };
    MPoly<C> out(p.ring);
    for (const auto& tm : p.t) {
        Monomial kept = tm.m;
        MPoly<C> piece;
        bool have_piece = false;
        for (const auto& [v, repl] : bindings) {
            unsigned e = tm.m.exp(v);
            if (!e) continue;
            kept.set_exp(v, 0);
            const MPoly<C>& pw = power(v, e);
            piece = have_piece ? piece * pw : pw;
            have_piece = true;
        }
        MPoly<C> base(p.ring);
        base.t.push_back({kept, tm.c});
        out += have_piece ? base * piece : base;
    }
    return out;
}

template <class C>
struct QuadCoeffs {
    MPoly<C> a2, a1, a0;  // coefficients of v^2, v^1, v^0
    unsigned max_deg = 0; // degree in v actually seen
    bool higher() const { return max_deg > 2; }
};

// coefficients of p as a polynomial in variable v, up to degree 2
template <class C>
QuadCoeffs<C> coeffs_in(const MPoly<C>& p, int v) {
    QuadCoeffs<C> r{MPoly<C>(p.ring), MPoly<C>(p.ring), MPoly<C>(p.ring)};
    for (const auto& tm : p.t) {
        unsigned e = tm.m.exp(v);
        r.max_deg = std::max(r.max_deg, e);
        if (e > 2) continue;
        Monomial m = tm.m;
        m.set_exp(v, 0);
        MPoly<C>* dst = e == 2 ? &r.a2 : (e == 1 ? &r.a1 : &r.a0);
        typename MPoly<C>::Term term{m, tm.c};
        MPoly<C> one_term(p.ring);
        one_term.t.push_back(term);
        *dst += one_term;
    }
    return r;
}

// Exact square root via leading-term recursion in graded-lex order; the
// result has positive leading coefficient.  Returns nullopt if p is not the
// square of a polynomial over the integers.
std::optional<IPoly> poly_sqrt(const IPoly& p);

// Exact division; nullopt when q does not divide p.
std::optional<IPoly> divide_exact(const IPoly& p, const IPoly& q);

std::string render(const IPoly& p);
std::string render(const QPoly& p);

// Parse +,-,*,^,(), integer literals and identifiers.  Unknown identifiers
// are added to the ring when create_vars is set, otherwise rejected.
IPoly parse_poly(const RingPtr& ring, const std::string& text, bool create_vars = false);

QPoly to_rational(const IPoly& p);

// leading coefficient negative -> negate; canonical representative of ±p
template <class C>
MPoly<C> canonical_sign(const MPoly<C>& p) {
    if (!p.t.empty() && coeff_is_neg(p.t[0].c)) return -p;
    return p;
}

}  // namespace graphion
