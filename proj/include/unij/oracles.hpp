#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "unij/braid.hpp"
#include "unij/laurent.hpp"
#include "unij/qnum.hpp"

namespace unij {

/// Kauffman bracket state sum for the closure of a braid word, normalized by
/// (-A^3)^{-w}. Returns the polynomial in the bracket variable A; the unknot
/// gives 1, an l-component unlink gives (-A^2-A^{-2})^{l-1}. Runs the full
/// 2^{|word|} smoothing expansion, so the word length is limited.
inline LaurentPoly kauffman_jones(const BraidWord& b, size_t max_crossings = 22) {
    size_t L = b.word.size();
    if (L > max_crossings) resource_error("kauffman_jones: state-sum size limit exceeded");
    auto vars = VarSet::make({"A"});
    LaurentPoly total(vars);
    LaurentPoly delta = LaurentPoly::variable(vars, 0, 2) * BigInt(-1) -
                        LaurentPoly::variable(vars, 0, -2);

    // wires identified by ints; union-find over wire ids
    for (size_t bits = 0; bits < (size_t(1) << L); ++bits) {
        std::vector<int> parent;
        auto mk = [&] { parent.push_back(static_cast<int>(parent.size())); return static_cast<int>(parent.size()) - 1; };
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
            return x;
        };
        auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

        std::vector<int> top(b.strands), cur(b.strands);
        for (int i = 0; i < b.strands; ++i) top[i] = cur[i] = mk();
        int apow = 0;
        for (size_t ci = 0; ci < L; ++ci) {
            int g = b.word[ci];
            int k = std::abs(g) - 1;
            bool smooth_identity;
            if (((bits >> ci) & 1) == 0) {
                // A-smoothing
                apow += 1;
                smooth_identity = (g > 0);
            } else {
                apow -= 1;
                smooth_identity = (g < 0);
            }
            if (!smooth_identity) {
                // cup-cap: join the two incoming wires, fresh wire above
                unite(cur[k], cur[k + 1]);
                int w = mk();
                cur[k] = cur[k + 1] = w;
            }
        }
        for (int i = 0; i < b.strands; ++i) unite(cur[i], top[i]);
        std::map<int, bool> roots;
        for (int x = 0; x < static_cast<int>(parent.size()); ++x) roots[find(x)] = true;
        int loops = static_cast<int>(roots.size());

        LaurentPoly term = LaurentPoly::variable(vars, 0, apow);
        term *= delta.pow(loops - 1);
        total += term;
    }
    // writhe normalization (-A^3)^{-w}
    int w = b.writhe();
    LaurentPoly norm = LaurentPoly::variable(vars, 0, -3 * w);
    if (w % 2 != 0) norm *= BigInt(-1);
    return total * norm;
}

/// Frozen dictionary from the Kauffman bracket variable to the engine's d:
/// d = -A^2, so A^{2e} maps to (-1)^e d^e. Odd A-exponents are rejected.
inline LaurentPoly kauffman_to_d(const LaurentPoly& p) {
    auto dring = VarSet::make({"d"});
    LaurentPoly out(dring);
    size_t ai = p.vars()->index_of("A");
    for (const auto& [e, c] : p.terms()) {
        if (e[ai] % 2 != 0) input_error("kauffman_to_d: odd bracket exponent");
        int half = e[ai] / 2;
        Exponents e2(1, half);
        out.add_term(e2, (half % 2 == 0) ? c : -c);
    }
    return out;
}

/// Reduced Burau matrices and the Alexander polynomial of a knot closure:
///   Delta(t) * (1 + t + ... + t^{n-1}) = +- t^e det(Burau_red(beta) - I).
/// Output normalized to the symmetric form with positive value at t = 1.
inline LaurentPoly burau_alexander(const BraidWord& b) {
    LinkData L = close(b);
    if (L.components != 1) input_error("burau_alexander: closure is not a knot");
    auto vars = VarSet::make({"t"});
    int n = b.strands;
    if (n == 1) return LaurentPoly::constant(vars, 1);
    int dim = n - 1;

    auto ident = [&] {
        std::vector<std::vector<LaurentPoly>> M(dim, std::vector<LaurentPoly>(dim, LaurentPoly::zero(vars)));
        for (int i = 0; i < dim; ++i) M[i][i] = LaurentPoly::constant(vars, 1);
        return M;
    };
    LaurentPoly t = LaurentPoly::variable(vars, 0);
    LaurentPoly tinv = LaurentPoly::variable(vars, 0, -1);
    LaurentPoly one = LaurentPoly::constant(vars, 1);

    // columns are images of basis vectors e_1..e_{n-1} (1-based strand gaps)
    auto gen = [&](int i, bool inv) {
        auto M = ident();
        int k = i - 1;  // 0-based column of e_i
        if (!inv) {
            // e_{i-1} -> e_{i-1} + t e_i ; e_i -> -t e_i ; e_{i+1} -> e_i + e_{i+1}
            M[k][k] = -t;
            if (k - 1 >= 0) M[k][k - 1] = t;
            if (k + 1 < dim) M[k][k + 1] = one;
        } else {
            M[k][k] = -tinv;
            if (k - 1 >= 0) M[k][k - 1] = one;
            if (k + 1 < dim) M[k][k + 1] = tinv;
        }
        return M;
    };
    auto mul = [&](const auto& A, const auto& B) {
        std::vector<std::vector<LaurentPoly>> C(dim, std::vector<LaurentPoly>(dim, LaurentPoly::zero(vars)));
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k) {
                if (A[i][k].is_zero()) continue;
                for (int j = 0; j < dim; ++j) {
                    if (B[k][j].is_zero()) continue;
                    C[i][j] += A[i][k] * B[k][j];
                }
            }
        return C;
    };

    auto B = ident();
    for (int g : b.word) B = mul(B, gen(std::abs(g), g < 0));
    for (int i = 0; i < dim; ++i) B[i][i] -= one;

    // cofactor determinant (dim <= a handful for our braid sizes)
    std::function<LaurentPoly(const std::vector<std::vector<LaurentPoly>>&)> det =
        [&](const std::vector<std::vector<LaurentPoly>>& M) -> LaurentPoly {
        size_t k = M.size();
        if (k == 0) return one;
        if (k == 1) return M[0][0];
        LaurentPoly acc(vars);
        for (size_t r = 0; r < k; ++r) {
            if (M[r][0].is_zero()) continue;
            std::vector<std::vector<LaurentPoly>> sub;
            for (size_t rr = 0; rr < k; ++rr) {
                if (rr == r) continue;
                sub.emplace_back(M[rr].begin() + 1, M[rr].end());
            }
            LaurentPoly term = M[r][0] * det(sub);
            if (r % 2 == 1) term *= BigInt(-1);
            acc += term;
        }
        return acc;
    };
    LaurentPoly D = det(B);

    LaurentPoly denom(vars);
    for (int i = 0; i < n; ++i) denom += LaurentPoly::variable(vars, 0, i);
    LaurentPoly alex = divide_exact_univar(D, denom, 0);

    // symmetric normalization: centre the exponent window, make value at 1 positive
    if (alex.is_zero()) internal_error("burau_alexander: vanishing determinant for a knot");
    int lo = alex.min_exponent(0), hi = alex.max_exponent(0);
    if ((lo + hi) % 2 != 0) internal_error("burau_alexander: asymmetric exponent span");
    alex = alex.shifted(0, -(lo + hi) / 2);
    BigInt at1 = 0;
    for (const auto& [e, c] : alex.terms()) at1 += c;
    if (at1 < 0) alex *= BigInt(-1);
    return alex;
}

}  // namespace unij
