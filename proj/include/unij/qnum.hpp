#pragma once

#include <vector>

#include "unij/laurent.hpp"

namespace unij {

/// Balanced quantum integer [n] = v^{n-1} + v^{n-3} + ... + v^{1-n} in the
/// variable `var` of `vars`. [0] = 0.
inline LaurentPoly quantum_bracket(int n, const VarSetPtr& vars, size_t var) {
    if (n < 0) input_error("quantum_bracket: n must be >= 0");
    LaurentPoly p(vars);
    for (int t = 0; t < n; ++t) {
        Exponents e(vars->size(), 0);
        e[var] = n - 1 - 2 * t;
        p.add_term(e, 1);
    }
    return p;
}

inline LaurentPoly quantum_factorial(int n, const VarSetPtr& vars, size_t var) {
    LaurentPoly p = LaurentPoly::constant(vars, 1);
    for (int k = 1; k <= n; ++k) p *= quantum_bracket(k, vars, var);
    return p;
}

/// Balanced Gauss binomial [n]! / ([k]! [n-k]!); the division is exact.
inline LaurentPoly gauss_binomial(int n, int k, const VarSetPtr& vars, size_t var) {
    if (k < 0 || n < 0 || k > n) input_error("gauss_binomial: need 0 <= k <= n");
    LaurentPoly num = quantum_factorial(n, vars, var);
    LaurentPoly den = quantum_factorial(k, vars, var) * quantum_factorial(n - k, vars, var);
    return divide_exact_univar(num, den, var);
}

/// Cyclotomic polynomial Phi_M in `var`, by exact division of v^M - 1 by all
/// Phi_e over proper divisors e of M.
inline LaurentPoly cyclotomic_poly(int M, const VarSetPtr& vars, size_t var) {
    if (M < 1) input_error("cyclotomic_poly: M must be >= 1");
    LaurentPoly p = LaurentPoly::variable(vars, var, M) - LaurentPoly::constant(vars, 1);
    for (int e = 1; e < M; ++e) {
        if (M % e != 0) continue;
        p = divide_exact_univar(p, cyclotomic_poly(e, vars, var), var);
    }
    return p;
}

/// Coefficient vector (ascending degree) of a polynomial that only uses `var`
/// with non-negative exponents.
inline std::vector<BigInt> univar_coeffs(const LaurentPoly& p, size_t var) {
    std::vector<BigInt> out;
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) internal_error("univar_coeffs: polynomial is not univariate");
        if (e[var] < 0) internal_error("univar_coeffs: negative exponent");
        if (out.size() <= static_cast<size_t>(e[var])) out.resize(e[var] + 1);
        out[e[var]] = c;
    }
    return out;
}

}  // namespace unij
