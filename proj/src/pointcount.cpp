#include "graphion/pointcount.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <set>
#include <thread>

namespace graphion {

bool is_prime(uint64_t q) {
    if (q < 2) return false;
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

ModPoly reduce_mod(const IPoly& p, uint64_t q, const std::vector<int>* ambient) {
    if (!is_prime(q)) throw std::runtime_error("reduce_mod: q = " + std::to_string(q) + " is not prime");
    ModPoly r;
    r.q = (uint32_t)q;
    if (ambient) {
        r.vars = *ambient;
    } else {
        std::set<int> vs;
        for (const auto& tm : p.t)
            for (int v = 0; v < Ring::max_vars; ++v)
                if (tm.m.exp(v)) vs.insert(v);
        r.vars.assign(vs.begin(), vs.end());
    }
    for (const auto& tm : p.t) {
        Int c = tm.c % (long)q;
        long ci = c.get_si();
        if (ci < 0) ci += (long)q;
        if (ci) r.terms.push_back({tm.m, (uint32_t)ci});
    }
    return r;
}

namespace {

using Terms = std::vector<std::pair<Monomial, uint32_t>>;

// substitute var := val into the term list (values mod q), combining terms
Terms specialize(const Terms& terms, int var, uint32_t val, uint32_t q) {
    // power table up to max exponent 31
    uint32_t pw[32];
    pw[0] = 1;
    for (int i = 1; i < 32; ++i) pw[i] = (uint32_t)((uint64_t)pw[i - 1] * val % q);
    std::unordered_map<Monomial, uint32_t, MonomialHash> acc;
    acc.reserve(terms.size());
    for (const auto& [m, c] : terms) {
        unsigned e = m.exp(var);
        Monomial m2 = m;
        if (e) m2.set_exp(var, 0);
        uint64_t c2 = (uint64_t)c * pw[e] % q;
        if (!c2) continue;
        uint32_t& slot = acc[m2];
        slot = (uint32_t)((slot + c2) % q);
    }
    Terms out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c) out.push_back({m, c});
    return out;
}

// zeros of the system over the remaining vars[idx..] by specialization
uint64_t count_rec(const std::vector<Terms>& system, const std::vector<int>& vars, size_t idx, uint32_t q) {
    // drop identically-zero polynomials; a nonzero constant kills the branch
    std::vector<const Terms*> live;
    for (const auto& t : system) {
        if (t.empty()) continue;  // 0 = 0
        if (t.size() == 1 && t[0].first.is_one()) return 0;
        live.push_back(&t);
    }
    uint64_t space = 1;
    for (size_t i = idx; i < vars.size(); ++i) space *= q;
    if (live.empty()) return space;
    if (idx == vars.size()) return 0;  // nonconstant polynomial with no vars left cannot happen
    int var = vars[idx];
    uint64_t total = 0;
    for (uint32_t val = 0; val < q; ++val) {
        std::vector<Terms> sub;
        sub.reserve(live.size());
        for (const Terms* t : live) sub.push_back(specialize(*t, var, val, q));
        total += count_rec(sub, vars, idx + 1, q);
    }
    return total;
}

int default_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}

uint64_t count_parallel(const std::vector<Terms>& system, const std::vector<int>& vars, uint32_t q,
                        int threads) {
    threads = default_threads(threads);
    // blocks of assignments of the first ceil(log_q(threads*64)) variables
    int d = 0;
    uint64_t blocks = 1;
    while (blocks < (uint64_t)threads * 64 && d < (int)vars.size()) {
        blocks *= q;
        ++d;
    }
    if (threads <= 1 || d == 0) return count_rec(system, vars, 0, q);
    std::vector<uint64_t> partial(blocks, 0);
    std::atomic<uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            uint64_t b = next.fetch_add(1);
            if (b >= blocks) return;
            std::vector<Terms> sub = system;
            uint64_t code = b;
            for (int i = 0; i < d; ++i) {
                uint32_t val = (uint32_t)(code % q);
                code /= q;
                std::vector<Terms> s2;
                s2.reserve(sub.size());
                for (const auto& t : sub) s2.push_back(specialize(t, vars[i], val, q));
                sub = std::move(s2);
            }
            partial[b] = count_rec(sub, vars, d, q);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    uint64_t total = 0;
    for (uint64_t b = 0; b < blocks; ++b) total += partial[b];  // fixed summation order
    return total;
}

std::vector<int> ambient_vars(const std::vector<IPoly>& polys) {
    std::set<int> vs;
    for (const auto& p : polys)
        for (const auto& tm : p.t)
            for (int v = 0; v < Ring::max_vars; ++v)
                if (tm.m.exp(v)) vs.insert(v);
    return {vs.begin(), vs.end()};
}

}  // namespace

CountResult count_points(const std::vector<IPoly>& polys, uint64_t q, uint64_t bound, int threads,
                         const std::vector<int>* ambient) {
    if (!is_prime(q)) throw std::runtime_error("count_points: q = " + std::to_string(q) + " is not prime");
    std::vector<int> vars = ambient ? *ambient : ambient_vars(polys);
    int n = (int)vars.size();
    double space = std::pow((double)q, n);
    if (space > (double)bound)
        throw guard_error("count_points: q^n = " + std::to_string((uint64_t)space) + " exceeds bound " +
                          std::to_string(bound) + " (consider the linear-split method)");
    std::vector<Terms> system;
    for (const auto& p : polys) system.push_back(reduce_mod(p, q).terms);
    uint64_t total = count_parallel(system, vars, (uint32_t)q, threads);
    return {q, n, Int((unsigned long)total), "brute"};
}

CountResult count_points_split(const IPoly& f, uint64_t q, const std::string& pivot_name, uint64_t bound,
                               int threads) {
    if (!is_prime(q))
        throw std::runtime_error("count_points_split: q = " + std::to_string(q) + " is not prime");
    std::vector<int> vars = ambient_vars({f});
    int n = (int)vars.size();
    int pivot = -1;
    if (!pivot_name.empty()) {
        pivot = f.ring ? f.ring->find(pivot_name) : -1;
        if (pivot < 0) throw std::runtime_error("count_points_split: unknown pivot " + pivot_name);
        if (f.deg_in(pivot) != 1) throw std::runtime_error("count_points_split: pivot is not linear");
    } else {
        // variable of lowest degree-1 occurrence count among linear variables
        size_t best = SIZE_MAX;
        for (int v : vars) {
            if (f.deg_in(v) != 1) continue;
            size_t occ = 0;
            for (const auto& tm : f.t)
                if (tm.m.exp(v)) ++occ;
            if (occ < best) {
                best = occ;
                pivot = v;
            }
        }
    }
    if (pivot < 0 || f.is_zero() || f.is_constant()) {
        CountResult r = count_points({f}, q, bound, threads);
        r.method = "brute";
        return r;
    }

    auto parts = coeffs_in(f, pivot);  // f = a1 * pivot + a0
    Int qn1 = 1;
    for (int i = 0; i < n - 1; ++i) qn1 *= (long)q;

    // [f1]_q over the ambient minus the pivot
    std::vector<int> rest;
    for (int v : vars)
        if (v != pivot) rest.push_back(v);
    auto count_system = [&](const std::vector<IPoly>& polys) -> Int {
        double space = std::pow((double)q, (int)rest.size());
        if (space > (double)bound)
            throw guard_error("count_points_split: subproblem exceeds bound");
        std::vector<Terms> system;
        for (const auto& p : polys) system.push_back(reduce_mod(p, q).terms);
        return Int((unsigned long)count_parallel(system, rest, (uint32_t)q, threads));
    };

    Int f1_count;
    if (!parts.a1.is_constant() && parts.a1.deg_in(pivot) == 0) {
        bool has_linear = false;
        for (int v : rest)
            if (parts.a1.deg_in(v) == 1) has_linear = true;
        if (has_linear) {
            CountResult sub = count_points_split(parts.a1, q, "", bound, threads);
            // sub is counted over vars(f1); pad to the ambient rest-space
            Int pad = 1;
            int missing = (int)rest.size() - sub.n;
            for (int i = 0; i < missing; ++i) pad *= (long)q;
            f1_count = sub.count * pad;
        } else {
            f1_count = count_system({parts.a1});
        }
    } else {
        f1_count = count_system({parts.a1});
    }
    Int pair_count = count_system({parts.a1, parts.a0});
    Int total = (qn1 - f1_count) + Int((long)q) * pair_count;
    return {q, n, total, "linear-split"};
}

namespace {

Int q_power(uint64_t q, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= (long)q;
    return r;
}

}  // namespace

C2Result c2_from_psi(const Multigraph& g, uint64_t q, uint64_t bound, int threads) {
    if (!g.connected() || g.n_vertices() < 3)
        throw std::runtime_error("c2_from_psi: graph must be connected with at least 3 vertices");
    IPoly psi = kirchhoff(g);
    CountResult c;
    bool multilinear = true;
    for (int v : ambient_vars({psi}))
        if (psi.deg_in(v) > 1) multilinear = false;
    double space = std::pow((double)q, g.n_edges());
    if (space <= (double)bound) {
        c = count_points({psi}, q, bound, threads);
    } else if (multilinear) {
        c = count_points_split(psi, q, "", bound, threads);
    } else {
        throw guard_error("c2_from_psi: counting infeasible under bound");
    }
    Int q2 = q_power(q, 2), q3 = q_power(q, 3);
    Int rem = c.count % q3;
    if (rem % q2 != 0)
        throw std::runtime_error("c2_from_psi: [Psi]_q not divisible by q^2 (internal error)");
    Int residue = (rem / q2) % (long)q;
    C2Result r{q, (int)residue.get_si(), c.count, 0, "psi"};
    return r;
}

C2Result c2_from_denominator(const Multigraph& g, const std::vector<std::string>& order, uint64_t q,
                             uint64_t bound, int threads) {
    if (g.n_edges() < 5) throw std::runtime_error("c2_from_denominator: graph needs >= 5 edges");
    auto states = reduce_sequence(g, order);
    if (states.back().status == ReductionStatus::ended_stuck)
        throw std::runtime_error("c2_from_denominator: reduction stuck after " +
                                 std::to_string(states.back().j()) + " edges");
    // a zero denominator at any depth forces c2 = 0
    for (const auto& st : states)
        if (st.poly.is_zero()) return {q, 0, Int(0), st.j(), "denred"};
    // D^n corresponds to an integration step only for n <= |E|-1 (the period
    // has |E|-1 projective integrations); cap the depth accordingly
    size_t use = states.size() - 1;
    while (use > 0 && states[use].j() > g.n_edges() - 1) --use;
    const ReductionState& last = states[use];
    int n = last.j();

    // count over all unreduced edge variables
    std::vector<int> ambient;
    std::set<std::string> red(last.reduced.begin(), last.reduced.end());
    for (const auto& e : g.edges())
        if (!red.count(e.label)) ambient.push_back(last.ring->find(Multigraph::var_name(e.label)));
    std::sort(ambient.begin(), ambient.end());

    double space = std::pow((double)q, (int)ambient.size());
    if (space > (double)bound) throw guard_error("c2_from_denominator: counting infeasible under bound");
    std::vector<Terms> system{reduce_mod(last.poly, q, &ambient).terms};
    uint64_t cnt = count_parallel(system, ambient, (uint32_t)q, threads);
    Int count((unsigned long)cnt);
    Int residue = count % (long)q;
    if (n % 2) residue = (Int((long)q) - residue) % (long)q;  // (-1)^n
    return {q, (int)residue.get_si(), count, n, "denred"};
}

}  // namespace graphion
