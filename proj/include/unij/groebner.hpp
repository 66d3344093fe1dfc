#pragma once

#include <deque>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unij/laurent.hpp"

namespace unij {

using Rational = boost::multiprecision::cpp_rational;

/// Buchberger engine over Q with degrevlex order, sized for the Willetts
/// membership checks (a handful of variables, low degree). Resource limits
/// are reported distinctly from non-membership.
namespace gb {

using Mono = std::vector<unsigned>;

inline unsigned total_deg(const Mono& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

/// degrevlex: higher total degree wins; ties broken by the *last* nonzero
/// difference being negative.
struct DegRevLexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned da = total_deg(a), db = total_deg(b);
        if (da != db) return da > db;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

struct QPoly {
    std::map<Mono, Rational, DegRevLexGreater> terms;

    bool is_zero() const { return terms.empty(); }
    const Mono& lead_mono() const { return terms.begin()->first; }
    const Rational& lead_coeff() const { return terms.begin()->second; }

    void add(const Mono& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms.find(m);
        if (it == terms.end()) terms.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    QPoly& operator-=(const QPoly& o) {
        for (const auto& [m, c] : o.terms) add(m, -c);
        return *this;
    }

    /// this -= (coeff * x^shift) * g
    void sub_mul(const Rational& coeff, const Mono& shift, const QPoly& g) {
        Mono m(shift.size());
        for (const auto& [gm, gc] : g.terms) {
            for (size_t i = 0; i < m.size(); ++i) m[i] = gm[i] + shift[i];
            add(m, -coeff * gc);
        }
    }

    void normalize_monic() {
        if (is_zero()) return;
        Rational lc = lead_coeff();
        for (auto& [m, c] : terms) c /= lc;
    }
};

inline bool divides(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Mono lcm(const Mono& a, const Mono& b) {
    Mono m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

inline Mono quotient(const Mono& a, const Mono& b) {
    Mono m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
    return m;
}

struct Limits {
    size_t max_basis = 400;
    size_t max_reduction_steps = 2000000;
};

/// Full normal form of p modulo basis (top reduction repeated).
inline QPoly normal_form(QPoly p, const std::vector<QPoly>& basis, const Limits& lim) {
    QPoly out;
    size_t steps = 0;
    while (!p.is_zero()) {
        if (++steps > lim.max_reduction_steps) resource_error("groebner: reduction step limit exceeded");
        const Mono& lm = p.lead_mono();
        bool reduced = false;
        for (const auto& g : basis) {
            if (divides(g.lead_mono(), lm)) {
                Rational c = p.lead_coeff() / g.lead_coeff();
                p.sub_mul(c, quotient(lm, g.lead_mono()), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.add(lm, p.lead_coeff());
            p.terms.erase(p.terms.begin());
        }
    }
    return out;
}

inline QPoly s_poly(const QPoly& f, const QPoly& g) {
    Mono L = lcm(f.lead_mono(), g.lead_mono());
    QPoly s;
    s.sub_mul(Rational(-1) / f.lead_coeff(), quotient(L, f.lead_mono()), f);
    s.sub_mul(Rational(1) / g.lead_coeff(), quotient(L, g.lead_mono()), g);
    return s;
}

/// Buchberger with the coprime-lcm criterion.
inline std::vector<QPoly> buchberger(std::vector<QPoly> gens, const Limits& lim) {
    std::vector<QPoly> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        g.normalize_monic();
        basis.push_back(std::move(g));
    }
    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Mono &mi = basis[i].lead_mono(), &mj = basis[j].lead_mono();
        Mono L = lcm(mi, mj);
        if (total_deg(L) == total_deg(mi) + total_deg(mj)) continue;  // coprime leads
        QPoly s = normal_form(s_poly(basis[i], basis[j]), basis, lim);
        if (s.is_zero()) continue;
        s.normalize_monic();
        basis.push_back(std::move(s));
        if (basis.size() > lim.max_basis) resource_error("groebner: basis size limit exceeded");
        size_t k = basis.size() - 1;
        for (size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
    }
    return basis;
}

}  // namespace gb

/// Laurent polynomial -> QPoly over the given ordered variable subset, with
/// units cleared (exponents shifted to be non-negative). Clearing units does
/// not change membership in the localized ring.
inline gb::QPoly to_qpoly_cleared(const LaurentPoly& p, const std::vector<size_t>& var_idx) {
    gb::QPoly out;
    if (p.is_zero()) return out;
    std::vector<int> shift(var_idx.size(), 0);
    for (size_t k = 0; k < var_idx.size(); ++k) shift[k] = p.min_exponent(var_idx[k]);
    for (const auto& [e, c] : p.terms()) {
        gb::Mono m(var_idx.size() + 1, 0);  // one slack slot for the inverter variable t
        for (size_t k = 0; k < var_idx.size(); ++k)
            m[k] = static_cast<unsigned>(e[var_idx[k]] - shift[k]);
        out.add(m, Rational(c));
    }
    return out;
}

}  // namespace unij
