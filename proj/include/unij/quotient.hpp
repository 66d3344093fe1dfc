#pragma once

#include <vector>

#include "unij/groebner.hpp"
#include "unij/laurent.hpp"

namespace unij {

/// The ring L = Z[x^{+-1}, d^{+-1}] that the quotient tower lives in.
inline VarSetPtr ring_xd() {
    static VarSetPtr v = VarSet::make({"x", "d"});
    return v;
}

/// g_N = prod_{i=1}^{N} (x d^{i-1} - 1), the generator of the level ideal
/// I^J_N. As a polynomial in x, degree N with unit leading coefficient
/// d^{N(N-1)/2} and trailing coefficient (-1)^N.
inline LaurentPoly level_ideal_gen(int N, const VarSetPtr& vars = ring_xd()) {
    if (N < 1) input_error("level must be >= 1");
    size_t xi = vars->index_of("x"), di = vars->index_of("d");
    LaurentPoly g = LaurentPoly::constant(vars, 1);
    for (int i = 1; i <= N; ++i) {
        LaurentPoly f = LaurentPoly::variable(vars, xi);
        f *= LaurentPoly::variable(vars, di, i - 1);
        f -= LaurentPoly::constant(vars, 1);
        g *= f;
    }
    return g;
}

/// Class in L^J_N = L / <g_N>, stored by its canonical representative.
/// Because g_N has unit leading and trailing x-coefficients, the quotient is
/// a free Z[d^{+-1}]-module on {1, x, ..., x^{N-1}}; the representative is
/// the unique expansion in that basis, so class equality is representative
/// equality.
struct QuotientElemJ {
    int level = 1;
    LaurentPoly rep;

    bool operator==(const QuotientElemJ& o) const { return level == o.level && rep == o.rep; }
    bool operator!=(const QuotientElemJ& o) const { return !(*this == o); }
};

namespace detail {

/// x-degree slice of p: coefficient of x^k as a polynomial with x-exponent 0.
inline LaurentPoly x_coeff(const LaurentPoly& p, size_t xi, int k) {
    LaurentPoly r(p.vars());
    for (const auto& [e, c] : p.terms())
        if (e[xi] == k) {
            Exponents e2 = e;
            e2[xi] = 0;
            r.add_term(e2, c);
        }
    return r;
}

}  // namespace detail

/// Canonical remainder of p modulo g_N: x-exponents reduced into {0..N-1}.
/// High powers reduce by the unit leading coefficient, negative powers by
/// the unit trailing coefficient; both divisions are exact.
inline QuotientElemJ reduce_mod_ij(const LaurentPoly& p, int N) {
    const auto& vars = p.vars();
    size_t xi = vars->index_of("x"), di = vars->index_of("d");
    for (size_t i = 0; i < vars->size(); ++i)
        if (i != xi && i != di && (p.min_exponent(i) != 0 || p.max_exponent(i) != 0))
            input_error("reduce_mod_ij: polynomial uses variables besides x, d");

    LaurentPoly g = level_ideal_gen(N, vars);
    LaurentPoly lead = detail::x_coeff(g, xi, N);        // d^{N(N-1)/2}
    LaurentPoly trail = detail::x_coeff(g, xi, 0);       // (-1)^N
    LaurentPoly lead_inv = lead.pow(-1);
    LaurentPoly trail_inv = trail.pow(-1);

    LaurentPoly r = p;
    while (!r.is_zero()) {
        int hi = r.max_exponent(xi);
        if (hi < N) break;
        LaurentPoly c = detail::x_coeff(r, xi, hi);
        // r -= (c / lead) * x^{hi-N} * g
        LaurentPoly factor = c * lead_inv * LaurentPoly::variable(vars, xi, hi - N);
        r -= factor * g;
    }
    while (!r.is_zero()) {
        int lo = r.min_exponent(xi);
        if (lo >= 0) break;
        LaurentPoly c = detail::x_coeff(r, xi, lo);
        LaurentPoly factor = c * trail_inv * LaurentPoly::variable(vars, xi, lo);
        r -= factor * g;
    }
    return QuotientElemJ{N, std::move(r)};
}

/// l^J_N: project a level-(N+1) class down to level N.
inline QuotientElemJ tower_project(const QuotientElemJ& c) {
    if (c.level < 2) input_error("tower_project: no level below 1");
    return reduce_mod_ij(c.rep, c.level - 1);
}

/// psi-hat^{N,J}_M: substitute x -> d^{1-M} into the canonical
/// representative. Only defined for M <= N (the generator must die).
inline LaurentPoly specialize_quotient(const QuotientElemJ& c, int M) {
    if (M < 1 || M > c.level)
        input_error("specialize_quotient: colour M must satisfy 1 <= M <= level");
    const auto& vars = c.rep.vars();
    size_t xi = vars->index_of("x"), di = vars->index_of("d");
    auto dring = VarSet::make({"d"});
    std::vector<LaurentPoly> images;
    for (size_t i = 0; i < vars->size(); ++i) {
        if (i == xi) images.push_back(LaurentPoly::variable(dring, 0, 1 - M));
        else if (i == di) images.push_back(LaurentPoly::variable(dring, 0, 1));
        else images.push_back(LaurentPoly::constant(dring, 1));
    }
    return c.rep.substitute_monomials(dring, images);
}

/// Willetts ideal at level N: the partition family
///   f_k = prod_{i=0}^{k-1}(x d^i - 1) * prod_{i=1}^{N-1-k}(d^i - 1),
/// k = 0..N-1. Contains the level-J generator: g_N = (x d^{N-1}-1) f_{N-1}.
inline std::vector<LaurentPoly> willetts_generators(int N, const VarSetPtr& vars = ring_xd()) {
    if (N < 2) input_error("willetts ideal needs level >= 2");
    size_t xi = vars->index_of("x"), di = vars->index_of("d");
    std::vector<LaurentPoly> gens;
    for (int k = 0; k < N; ++k) {
        LaurentPoly f = LaurentPoly::constant(vars, 1);
        for (int i = 0; i < k; ++i) {
            LaurentPoly t = LaurentPoly::variable(vars, xi) * LaurentPoly::variable(vars, di, i);
            t -= LaurentPoly::constant(vars, 1);
            f *= t;
        }
        for (int i = 1; i <= N - 1 - k; ++i) {
            LaurentPoly t = LaurentPoly::variable(vars, di, i) - LaurentPoly::constant(vars, 1);
            f *= t;
        }
        gens.push_back(std::move(f));
    }
    return gens;
}

/// Q-certified membership of p in the Willetts ideal, by Buchberger over the
/// rationals: clear Laurent units, adjoin t with t*x*d = 1, take a Groebner
/// basis and test the normal form. Resource exhaustion raises Error::resource
/// (distinct from a "false" answer).
inline bool willetts_member(const LaurentPoly& p, int N, const gb::Limits& limits = {}) {
    const auto& vars = p.vars();
    size_t xi = vars->index_of("x"), di = vars->index_of("d");
    for (size_t i = 0; i < vars->size(); ++i)
        if (i != xi && i != di && (p.min_exponent(i) != 0 || p.max_exponent(i) != 0))
            input_error("willetts_member: polynomial uses variables besides x, d");
    if (p.is_zero()) return true;

    std::vector<size_t> idx = {xi, di};
    std::vector<gb::QPoly> gens;
    for (const auto& g : willetts_generators(N, vars)) gens.push_back(to_qpoly_cleared(g, idx));
    // t*x*d - 1 inverts both x and d
    {
        gb::QPoly inv;
        inv.add(gb::Mono{1, 1, 1}, Rational(1));
        inv.add(gb::Mono{0, 0, 0}, Rational(-1));
        gens.push_back(std::move(inv));
    }
    auto basis = gb::buchberger(std::move(gens), limits);
    gb::QPoly q = to_qpoly_cleared(p, idx);
    return gb::normal_form(std::move(q), basis, limits).is_zero();
}

}  // namespace unij
