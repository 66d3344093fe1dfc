#include "doctest.h"

#include <random>

#include "unij/cyclo.hpp"
#include "unij/laurent.hpp"
#include "unij/parse.hpp"
#include "unij/qnum.hpp"

using namespace unij;

namespace {

LaurentPoly random_poly(const VarSetPtr& vars, std::mt19937_64& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> coef(-9, 9);
    LaurentPoly p(vars);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(vars->size());
        for (auto& x : e) x = expo(rng);
        p.add_term(e, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("poly arithmetic examples") {
    auto vars = VarSet::make({"x", "d"});
    LaurentPoly x = LaurentPoly::variable(vars, 0);
    LaurentPoly d = LaurentPoly::variable(vars, 1);
    LaurentPoly one = LaurentPoly::constant(vars, 1);

    CHECK((x - one) * (x + one) == x * x - one);
    LaurentPoly p = parse_poly("3*x^2*d^-1 - 7", vars);
    CHECK(p + LaurentPoly::zero(vars) == p);
    CHECK((x - one) * (x * d - one) == parse_poly("x^2*d - x*d - x + 1", vars));
}

TEST_CASE("canonical rendering and parsing round-trip") {
    auto vars = VarSet::make({"x", "d"});
    LaurentPoly p = parse_poly("x^2*d^-1 - 3", vars);
    CHECK(p.str() == "x^2*d^-1 - 3");
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly q = random_poly(vars, rng);
        CHECK(parse_poly(q.str(), vars) == q);
    }
    CHECK(LaurentPoly::zero(vars).str() == "0");
    CHECK_THROWS_AS(parse_poly("x + * 3", vars), Error);
    CHECK_THROWS_AS(parse_poly("w^2", vars), Error);
}

TEST_CASE("ring axioms hold on random polynomials") {
    auto vars = VarSet::make({"x", "d"});
    std::mt19937_64 rng(99);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly a = random_poly(vars, rng), b = random_poly(vars, rng), c = random_poly(vars, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("variable-set mismatch is an error") {
    auto v1 = VarSet::make({"x", "d"});
    auto v2 = VarSet::make({"x", "y"});
    LaurentPoly a = LaurentPoly::variable(v1, 0);
    LaurentPoly b = LaurentPoly::variable(v2, 0);
    CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("quantum bracket") {
    auto vars = VarSet::make({"d"});
    CHECK(quantum_bracket(2, vars, 0) == parse_poly("d + d^-1", vars));
    CHECK(quantum_bracket(0, vars, 0).is_zero());
    CHECK(quantum_bracket(3, vars, 0) == parse_poly("d^2 + 1 + d^-2", vars));
    // symmetry under d <-> d^-1
    std::vector<LaurentPoly> inv_img = {LaurentPoly::variable(vars, 0, -1)};
    for (int n = 0; n <= 9; ++n) {
        LaurentPoly b = quantum_bracket(n, vars, 0);
        CHECK(b.substitute_monomials(vars, inv_img) == b);
    }
}

TEST_CASE("gauss binomial") {
    auto vars = VarSet::make({"d"});
    CHECK(gauss_binomial(2, 1, vars, 0) == quantum_bracket(2, vars, 0));
    CHECK(gauss_binomial(5, 0, vars, 0) == LaurentPoly::constant(vars, 1));
    CHECK(gauss_binomial(4, 2, vars, 0) == parse_poly("d^4 + d^2 + 2 + d^-2 + d^-4", vars));
    CHECK_THROWS_AS(gauss_binomial(2, 3, vars, 0), Error);

    // symmetry and the quantum Pascal recurrence
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            LaurentPoly lhs = gauss_binomial(n, k, vars, 0);
            CHECK(lhs == gauss_binomial(n, n - k, vars, 0));
            if (k >= 1 && k <= n - 1) {
                // [n;k] = d^k [n-1;k] + d^{k-n} [n-1;k-1]
                LaurentPoly rhs = LaurentPoly::variable(vars, 0, k) * gauss_binomial(n - 1, k, vars, 0) +
                                  LaurentPoly::variable(vars, 0, k - n) * gauss_binomial(n - 1, k - 1, vars, 0);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("cyclotomic polynomials") {
    auto vars = VarSet::make({"q"});
    CHECK(cyclotomic_poly(1, vars, 0) == parse_poly("q - 1", vars));
    CHECK(cyclotomic_poly(4, vars, 0) == parse_poly("q^2 + 1", vars));
    CHECK(cyclotomic_poly(6, vars, 0) == parse_poly("q^2 - q + 1", vars));
    for (int M = 1; M <= 30; ++M) {
        LaurentPoly prod = LaurentPoly::constant(vars, 1);
        for (int e = 1; e <= M; ++e)
            if (M % e == 0) prod *= cyclotomic_poly(e, vars, 0);
        CHECK(prod == LaurentPoly::variable(vars, 0, M) - LaurentPoly::constant(vars, 1));
    }
}

TEST_CASE("evaluate_at_root examples") {
    auto ctx = std::make_shared<const CycloContext>(2);  // Phi_4 = q^2+1, zeta^2 = -1
    auto vars = VarSet::make({"x", "d"});
    auto svars = VarSet::make({"s1"});

    std::map<std::string, RootImage> assign;
    assign["d"] = RootImage::zeta(-1, svars);
    assign["x"] = RootImage::s_var(svars, 0, 1);

    LaurentPoly d = LaurentPoly::variable(vars, 1);
    CycloPoly img = evaluate_at_root(d, ctx, svars, assign);
    // zeta^{-1} = zeta^3 = -zeta under zeta^2 = -1
    CycloPoly expect = CycloPoly::from_elem(ctx, svars, -CycloElem::zeta_pow(ctx, 1));
    CHECK(img == expect);

    CHECK(evaluate_at_root(LaurentPoly::constant(vars, 1), ctx, svars, assign) ==
          CycloPoly::from_elem(ctx, svars, CycloElem::from_int(ctx, 1)));

    LaurentPoly xd = LaurentPoly::variable(vars, 0) * d;
    CycloPoly got = evaluate_at_root(xd, ctx, svars, assign);
    CycloPoly want(ctx, svars);
    want.add_term(Exponents{1}, -CycloElem::zeta_pow(ctx, 1));
    CHECK(got == want);

    CHECK_THROWS_AS(evaluate_at_root(xd, ctx, svars, {{"x", RootImage::zeta(0, svars)}}), Error);
}

TEST_CASE("evaluate_at_root is a ring homomorphism") {
    auto ctx = std::make_shared<const CycloContext>(3);
    auto vars = VarSet::make({"x", "d"});
    auto svars = VarSet::make({"s1"});
    std::map<std::string, RootImage> assign;
    assign["d"] = RootImage::zeta(-1, svars);
    assign["x"] = RootImage::s_var(svars, 0, 1, 2);  // s1 * zeta^2

    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
        LaurentPoly a = random_poly(vars, rng), b = random_poly(vars, rng);
        auto phi = [&](const LaurentPoly& p) { return evaluate_at_root(p, ctx, svars, assign); };
        CHECK(phi(a * b) == phi(a) * phi(b));
        CHECK(phi(a + b) == phi(a) + phi(b));
    }
}

TEST_CASE("cyclotomic context basics") {
    CycloContext c2(2);
    CHECK(c2.degree() == 2);  // Phi_4
    CycloContext c3(3);
    CHECK(c3.degree() == 2);  // Phi_6
    auto ctx = std::make_shared<const CycloContext>(5);
    // zeta^{2N} = 1
    CHECK(CycloElem::zeta_pow(ctx, 10) == CycloElem::from_int(ctx, 1));
    CHECK(CycloElem::zeta_pow(ctx, 5) == -CycloElem::from_int(ctx, 1));
    CHECK(CycloElem::zeta_pow(ctx, 3) * CycloElem::zeta_pow(ctx, -3) == CycloElem::from_int(ctx, 1));
}
