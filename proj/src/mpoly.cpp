#include "graphion/mpoly.hpp"

#include <cctype>

namespace graphion {

std::string coeff_str(const Int& c) { return c.get_str(); }
std::string coeff_str(const Rat& c) { return c.get_str(); }

std::optional<IPoly> poly_sqrt(const IPoly& p) {
    if (p.is_zero()) return IPoly(p.ring);

    const Monomial& lm = p.t[0].m;
    const Int& lc = p.t[0].c;
    if (mpz_sgn(lc.get_mpz_t()) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(lc.get_mpz_t())) return std::nullopt;
    Monomial half = Monomial::one();
    for (int v = 0; v < Ring::max_vars; ++v) {
        unsigned e = lm.exp(v);
        if (e & 1) return std::nullopt;
        if (e) half.set_exp(v, e / 2);
    }
    Int lroot;
    mpz_sqrt(lroot.get_mpz_t(), lc.get_mpz_t());

    IPoly s(p.ring);
    s.t.push_back({half, lroot});
    IPoly r = p;
    {
        IPoly s0sq(p.ring);
        s0sq.t.push_back({*Monomial::mul(half, half), lroot * lroot});
        r -= s0sq;
    }
    Int two_lroot = 2 * lroot;
    size_t iterations = 0, limit = 8 * p.t.size() + 64;
    while (!r.is_zero()) {
        if (++iterations > limit) return std::nullopt;
        auto m = Monomial::div(r.t[0].m, half);
        if (!m) return std::nullopt;
        if (!mpz_divisible_p(r.t[0].c.get_mpz_t(), two_lroot.get_mpz_t())) return std::nullopt;
        IPoly tau(p.ring);
        tau.t.push_back({*m, r.t[0].c / two_lroot});
        // r -= tau * (2 s + tau)
        IPoly twos = s * Int(2);
        r -= tau * (twos + tau);
        // terms of s arrive in strictly decreasing order
        if (!gl_greater(s.t.back().m, *m)) return std::nullopt;
        s.t.push_back(tau.t[0]);
    }
    IPoly check = s * s;
    if (!(check == p)) return std::nullopt;
    return s;
}

std::optional<IPoly> divide_exact(const IPoly& p, const IPoly& q) {
    if (q.is_zero()) throw std::runtime_error("divide_exact: division by zero");
    IPoly r = p, quot(p.ring);
    while (!r.is_zero()) {
        auto m = Monomial::div(r.t[0].m, q.t[0].m);
        if (!m) return std::nullopt;
        if (!mpz_divisible_p(r.t[0].c.get_mpz_t(), q.t[0].c.get_mpz_t())) return std::nullopt;
        IPoly term(p.ring);
        term.t.push_back({*m, r.t[0].c / q.t[0].c});
        quot.t.push_back(term.t[0]);
        r -= term * q;
    }
    return quot;
}

namespace {

template <class C>
std::string render_impl(const MPoly<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& tm : p.t) {
        C c = tm.c;
        bool neg = coeff_is_neg(c);
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string cs = coeff_str(c);
        std::string mon;
        for (int v = 0; v < Ring::max_vars; ++v) {
            unsigned e = tm.m.exp(v);
            if (!e) continue;
            if (!mon.empty()) mon += "*";
            mon += p.ring->name(v);
            if (e > 1) mon += "^" + std::to_string(e);
        }
        if (mon.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mon;
        } else {
            out += cs + "*" + mon;
        }
    }
    return out;
}

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    size_t pos = 0;
    bool create;

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what);
    }

    IPoly expr() {
        bool neg = false;
        skip();
        if (eat('-')) neg = true;
        else eat('+');
        IPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip();
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }
    IPoly term() {
        IPoly acc = factor();
        for (;;) {
            skip();
            if (eat('*')) acc *= factor();
            else return acc;
        }
    }
    IPoly factor() {
        IPoly b = base();
        skip();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (start == pos) fail("exponent expected");
            b = b.pow(std::stoul(s.substr(start, pos - start)));
        }
        return b;
    }
    IPoly base() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        if (eat('(')) {
            IPoly e = expr();
            if (!eat(')')) fail("')' expected");
            return e;
        }
        if (std::isdigit((unsigned char)s[pos])) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            return IPoly::constant(ring, Int(s.substr(start, pos - start)));
        }
        if (std::isalpha((unsigned char)s[pos]) || s[pos] == '_') {
            size_t start = pos;
            while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            int id = create ? ring->add_or_get(name) : ring->find(name);
            if (id < 0) fail("unknown variable " + name);
            return IPoly::variable(ring, id);
        }
        fail(std::string("unexpected character '") + s[pos] + "'");
    }
};

}  // namespace

std::string render(const IPoly& p) { return render_impl(p); }
std::string render(const QPoly& p) { return render_impl(p); }

IPoly parse_poly(const RingPtr& ring, const std::string& text, bool create_vars) {
    Parser p{ring, text, 0, create_vars};
    IPoly r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

QPoly to_rational(const IPoly& p) {
    QPoly r(p.ring);
    r.t.reserve(p.t.size());
    for (const auto& tm : p.t) r.t.push_back({tm.m, Rat(tm.c)});
    return r;
}

}  // namespace graphion
