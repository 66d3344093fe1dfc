#pragma once

#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "unij/braid.hpp"
#include "unij/cyclo.hpp"
#include "unij/laurent.hpp"
#include "unij/quotient.hpp"
#include "unij/verma.hpp"

namespace unij {

struct TraceOptions {
    int jobs = 1;
    std::vector<int> framing;          // per-component override; empty = writhe
    bool check_overflow_ideal = false; // assert traced-out states carry ideal coefficients
};

/// State sum of the braid action: sum over capped basis states e with
/// e_1 = 0 of d^{-2 sum e_k} times the diagonal entry of the braid action,
/// taken over the uncapped weight spaces of every total weight the caps
/// allow. This is the partial quantum trace in the engine's variables.
class TraceEngine {
public:
    TraceEngine(VarSetPtr vars, size_t d_idx) : vars_(std::move(vars)), d_(d_idx), blocks_(vars_, d_) {}

    LaurentPoly run(const BraidWord& b, const std::vector<int>& caps_by_pos,
                    const std::vector<size_t>& colour_by_pos, int jobs = 1) {
        int n = b.strands;
        int mmax = 0;
        for (int k = 1; k < n; ++k) mmax += caps_by_pos[k] - 1;
        prebuild(colour_by_pos, mmax);

        auto run_m = [&](int m) {
            LaurentPoly acc(vars_);
            std::vector<int> caps = caps_by_pos;
            caps[0] = 1;  // e_1 = 0
            WeightSpace ws(n, m, caps);
            for (const auto& st : ws.basis()) {
                LaurentPoly diag = diagonal_entry(b, st, colour_by_pos, m);
                if (diag.is_zero()) continue;
                int esum = 0;
                for (int k = 1; k < n; ++k) esum += st[k];
                acc += diag * LaurentPoly::variable(vars_, d_, -2 * esum);
            }
            return acc;
        };

        LaurentPoly total(vars_);
        if (jobs <= 1) {
            for (int m = 0; m <= mmax; ++m) total += run_m(m);
        } else {
            std::vector<std::future<LaurentPoly>> futs;
            for (int m = 0; m <= mmax; ++m)
                futs.push_back(std::async(std::launch::async, run_m, m));
            for (auto& f : futs) total += f.get();  // summed in m order
        }
        return total;
    }

    /// Diagonal entry of the braid action at one basis state, computed on the
    /// uncapped weight space of the state's total weight.
    LaurentPoly diagonal_entry(const BraidWord& b, const BasisState& st,
                               const std::vector<size_t>& colour_by_pos, int total_weight) {
        WeightVector v;
        v.add(st, LaurentPoly::constant(vars_, 1));
        WeightVector img = braid_act(b.word, v, colour_by_pos, blocks_, total_weight);
        auto it = img.entries.find(st);
        return it == img.entries.end() ? LaurentPoly::zero(vars_) : it->second;
    }

    BlockCache& blocks() { return blocks_; }

private:
    void prebuild(const std::vector<size_t>& colours, int mmax) {
        for (size_t a : colours)
            for (size_t b2 : colours) {
                blocks_.get(a, b2, true, mmax);
                blocks_.get(a, b2, false, mmax);
            }
    }

    VarSetPtr vars_;
    size_t d_;
    BlockCache blocks_;
};

/// The graded state sum of a knot braid: exact Laurent polynomial over
/// {u, x, d} (y = 1 throughout the knot pipeline), with the framing/pivotal
/// prefactor u^{f} * u^{-(n-1)}.
struct IntersectionForm {
    int level = 2;
    LaurentPoly value;  // over {u, x, d} for knots, {u_i.., x_i.., y, d} for links
};

inline VarSetPtr knot_ring() {
    static VarSetPtr v = VarSet::make({"u", "x", "d"});
    return v;
}

inline IntersectionForm a_gamma(const BraidWord& b, int N, const TraceOptions& opt = {}) {
    if (N < 1) input_error("a_gamma: level must be >= 1");
    LinkData L = close(b);
    if (L.components != 1) input_error("a_gamma: closure is a link, not a knot (use the link pipeline)");
    auto vars = knot_ring();
    size_t ui = vars->index_of("u"), xi = vars->index_of("x"), di = vars->index_of("d");

    TraceEngine eng(vars, di);
    std::vector<int> caps(b.strands, N);
    std::vector<size_t> colours(b.strands, xi);
    LaurentPoly raw = eng.run(b, caps, colours, opt.jobs);

    if (opt.check_overflow_ideal) {
        // Traced-out overflow states (some e_k >= N) must carry coefficients
        // in the level ideal once u = x: Lemma-annulspec style assertion.
        int mmax = (b.strands - 1) * (N - 1);
        for (int m = N; m <= mmax; ++m) {
            std::vector<int> nocap(b.strands, m + 1);
            nocap[0] = 1;
            WeightSpace ws(b.strands, m, nocap);
            for (const auto& st : ws.basis()) {
                bool overflow = false;
                for (int k = 1; k < b.strands; ++k) overflow |= (st[k] >= N);
                if (!overflow) continue;
                LaurentPoly diag = eng.diagonal_entry(b, st, colours, m);
                if (diag.is_zero()) continue;
                int esum = 0;
                for (int k = 1; k < b.strands; ++k) esum += st[k];
                LaurentPoly contrib = diag * LaurentPoly::variable(vars, di, -2 * esum);
                auto xd = ring_xd();
                std::vector<LaurentPoly> images = {LaurentPoly::variable(xd, 0),
                                                   LaurentPoly::variable(xd, 0),
                                                   LaurentPoly::variable(xd, 1)};
                if (!reduce_mod_ij(contrib.substitute_monomials(xd, images), N).rep.is_zero())
                    internal_error("overflow state escaped the level ideal");
            }
        }
    }

    int f = opt.framing.empty() ? L.self_writhe[0] : opt.framing[0];
    LaurentPoly pref = LaurentPoly::variable(vars, ui, f - (b.strands - 1));
    return IntersectionForm{N, pref * raw};
}

/// Link pipeline: caps per strand come from the component colours, the value
/// keeps u_i, x_i, y and d. Colour N_c caps the strands of component c.
struct LinkForm {
    std::vector<int> colours;  // per component
    LaurentPoly value;
    VarSetPtr vars;
    LinkData link;
};

inline LinkForm link_form(const BraidWord& b, const std::vector<int>& colours,
                          const TraceOptions& opt = {}) {
    LinkData L = close(b);
    if (static_cast<int>(colours.size()) != L.components)
        input_error("link_form: need one colour per component");
    int l = L.components;
    std::vector<std::string> names;
    for (int i = 1; i <= l; ++i) names.push_back("u" + std::to_string(i));
    for (int i = 1; i <= l; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("y");
    names.push_back("d");
    auto vars = VarSet::make(names);
    size_t yi = vars->index_of("y"), di = vars->index_of("d");

    TraceEngine eng(vars, di);
    std::vector<int> caps(b.strands);
    std::vector<size_t> colvar(b.strands);
    for (int k = 0; k < b.strands; ++k) {
        int c = L.strand_component[k];
        caps[k] = colours[c];
        colvar[k] = vars->index_of("x" + std::to_string(c + 1));
    }
    LaurentPoly raw = eng.run(b, caps, colvar, opt.jobs);
    raw *= LaurentPoly::variable(vars, yi);

    LaurentPoly pref = LaurentPoly::constant(vars, 1);
    for (int c = 0; c < l; ++c) {
        int f = opt.framing.empty() ? L.self_writhe[c] : opt.framing[c];
        int lk = 0;
        for (int j = 0; j < l; ++j)
            if (j != c) lk += L.linking[c][j];
        pref *= LaurentPoly::variable(vars, vars->index_of("u" + std::to_string(c + 1)), f - lk);
    }
    for (int k = 1; k < b.strands; ++k) {
        int c = L.strand_component[k];
        pref *= LaurentPoly::variable(vars, vars->index_of("u" + std::to_string(c + 1)), -1);
    }
    return LinkForm{colours, pref * raw, vars, L};
}

/// Coloured Jones polynomial of a link, normalized so the unknot gives 1:
/// specialize u_i, x_i -> d^{1-N_i} and y -> [N_{C(1)}]_d, then divide by
/// the closure-strand quantum dimension.
inline LaurentPoly link_jones(const BraidWord& b, const std::vector<int>& colours,
                              const TraceOptions& opt = {}) {
    LinkForm F = link_form(b, colours, opt);
    auto dring = VarSet::make({"d"});
    const auto& vars = F.vars;
    int l = static_cast<int>(colours.size());
    std::vector<LaurentPoly> images(vars->size(), LaurentPoly::constant(dring, 1));
    for (int c = 0; c < l; ++c) {
        images[vars->index_of("u" + std::to_string(c + 1))] = LaurentPoly::variable(dring, 0, 1 - colours[c]);
        images[vars->index_of("x" + std::to_string(c + 1))] = LaurentPoly::variable(dring, 0, 1 - colours[c]);
    }
    // The value is linear in y; its image [N_{C(1)}]_d cancels against the
    // unknot normalization, so strip y and specialize the rest.
    size_t yi = vars->index_of("y");
    LaurentPoly val = F.value;
    if (!val.is_zero() && (val.min_exponent(yi) != 1 || val.max_exponent(yi) != 1))
        internal_error("link_form value must be linear in y");
    LaurentPoly stripped(vars);
    for (const auto& [e, c] : val.terms()) {
        Exponents e2 = e;
        e2[yi] = 0;
        stripped.add_term(e2, c);
    }
    images[yi] = LaurentPoly::constant(dring, 1);
    return stripped.substitute_monomials(dring, images);
}

/// Class of the intersection form in L^J_N (knots: u = x, y = 1).
struct UnifiedJones {
    int level = 1;
    QuotientElemJ cls;
};

inline UnifiedJones unified_jones(const BraidWord& b, int N, const TraceOptions& opt = {}) {
    IntersectionForm F = a_gamma(b, N, opt);
    auto xd = ring_xd();
    // u -> x
    std::vector<LaurentPoly> images = {LaurentPoly::variable(xd, 0), LaurentPoly::variable(xd, 0),
                                       LaurentPoly::variable(xd, 1)};
    LaurentPoly p = F.value.substitute_monomials(xd, images);
    return UnifiedJones{N, reduce_mod_ij(p, N)};
}

/// J_M of a knot, through the level-M quotient; unknot-normalized.
inline LaurentPoly coloured_jones(const BraidWord& b, int M, const TraceOptions& opt = {}) {
    if (M < 1) input_error("coloured_jones: colour must be >= 1");
    return specialize_quotient(unified_jones(b, M, opt).cls, M);
}

/// The first N_max floors of the universal invariant, with the tower
/// compatibility l^J_N enforced.
struct UniversalTruncation {
    int n_max = 1;
    std::vector<UnifiedJones> floors;  // levels 1..n_max
};

inline UniversalTruncation universal_truncation(const BraidWord& b, int n_max,
                                                const TraceOptions& opt = {}) {
    if (n_max < 1) input_error("universal_truncation: N_max must be >= 1");
    UniversalTruncation T;
    T.n_max = n_max;
    for (int N = 1; N <= n_max; ++N) T.floors.push_back(unified_jones(b, N, opt));
    for (int N = 1; N < n_max; ++N) {
        QuotientElemJ down = tower_project(T.floors[N].cls);
        if (down != T.floors[N - 1].cls)
            internal_error("universal truncation: tower compatibility failed at level " +
                           std::to_string(N));
    }
    return T;
}

/// ADO / coloured Alexander value at level N.
struct AdoValue {
    int level = 2;
    CycloPoly value;
};

/// Knot ADO: u -> s1^{1-N}, x -> s1, d -> zeta^{-1} (zeta = xi_N, a root of
/// Phi_{2N}); y was already 1. Links keep s_i and y formal.
inline AdoValue ado(const BraidWord& b, int N, const TraceOptions& opt = {}) {
    if (N < 2) input_error("ado: level must be >= 2");
    auto ctx = std::make_shared<const CycloContext>(N);
    LinkData L = close(b);
    if (L.components == 1) {
        IntersectionForm F = a_gamma(b, N, opt);
        auto svars = VarSet::make({"s1"});
        std::map<std::string, RootImage> assign;
        assign["u"] = RootImage::s_var(svars, 0, 1 - N);
        assign["x"] = RootImage::s_var(svars, 0, 1);
        assign["d"] = RootImage::zeta(-1, svars);
        return AdoValue{N, evaluate_at_root(F.value, ctx, svars, assign)};
    }
    std::vector<int> colours(L.components, N);
    LinkForm F = link_form(b, colours, opt);
    std::vector<std::string> names;
    for (int i = 1; i <= L.components; ++i) names.push_back("s" + std::to_string(i));
    names.push_back("y");
    auto svars = VarSet::make(names);
    std::map<std::string, RootImage> assign;
    for (int i = 1; i <= L.components; ++i) {
        assign["u" + std::to_string(i)] = RootImage::s_var(svars, i - 1, 1 - N);
        assign["x" + std::to_string(i)] = RootImage::s_var(svars, i - 1, 1);
    }
    assign["y"] = RootImage::s_var(svars, svars->index_of("y"), 1);
    assign["d"] = RootImage::zeta(-1, svars);
    return AdoValue{N, evaluate_at_root(F.value, ctx, svars, assign)};
}

/// Substitute the pA2 image of y into a link ADO value:
/// y -> [lambda_{C(1)}] = (s_c - s_c^{-1}) / (zeta - zeta^{-1}).
inline CycloPoly ado_specialize_y(const AdoValue& v, size_t closure_colour_idx) {
    const auto& svars = v.value.svars();
    auto yi = svars->index(std::string("y"));
    if (!yi) input_error("ado_specialize_y: value has no formal y");
    CycloElem one = CycloElem::from_int(v.value.ctx(), 1);
    CycloPoly bracket(v.value.ctx(), svars);
    {
        Exponents ep(svars->size(), 0), em(svars->size(), 0);
        ep[closure_colour_idx] = 1;
        em[closure_colour_idx] = -1;
        bracket.add_term(ep, one);
        bracket.add_term(em, -one);
    }
    CycloPoly out(v.value.ctx(), svars);
    for (const auto& [e, c] : v.value.terms()) {
        int k = e[*yi];
        if (k < 0) input_error("ado_specialize_y: negative y power");
        CycloPoly term(v.value.ctx(), svars);
        Exponents base = e;
        base[*yi] = 0;
        term.add_term(base, c);
        for (int rep = 0; rep < k; ++rep) term = term * bracket;
        out += term.divided_by_unit_power(k);
    }
    return out;
}

/// Consistency report between two braid representatives of the same knot.
struct ConsistencyReport {
    bool unified_equal = false;
    bool diff_in_level_ideal = false;
    bool diff_in_willetts = false;
    bool willetts_resource_limited = false;

    bool all_pass() const { return unified_equal && diff_in_level_ideal; }
};

inline ConsistencyReport habiro_consistency(const BraidWord& b1, const BraidWord& b2, int N,
                                            const TraceOptions& opt = {}) {
    ConsistencyReport rep;
    UnifiedJones u1 = unified_jones(b1, N, opt), u2 = unified_jones(b2, N, opt);
    rep.unified_equal = (u1.cls == u2.cls);

    auto xd = ring_xd();
    auto to_xd = [&](const IntersectionForm& F) {
        std::vector<LaurentPoly> images = {LaurentPoly::variable(xd, 0), LaurentPoly::variable(xd, 0),
                                           LaurentPoly::variable(xd, 1)};
        return F.value.substitute_monomials(xd, images);
    };
    LaurentPoly diff = to_xd(a_gamma(b1, N, opt)) - to_xd(a_gamma(b2, N, opt));
    rep.diff_in_level_ideal = reduce_mod_ij(diff, N).rep.is_zero();
    try {
        rep.diff_in_willetts = willetts_member(diff, N);
    } catch (const Error& e) {
        if (e.kind == Error::Kind::resource) rep.willetts_resource_limited = true;
        else throw;
    }
    return rep;
}

}  // namespace unij
