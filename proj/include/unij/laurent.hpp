#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace unij {

using BigInt = boost::multiprecision::cpp_int;

/// Error kinds map onto the CLI exit-code contract (input=2, resource=3).
class Error : public std::runtime_error {
public:
    enum class Kind { input, internal, resource };
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

[[noreturn]] inline void input_error(const std::string& msg) { throw Error(Error::Kind::input, msg); }
[[noreturn]] inline void internal_error(const std::string& msg) { throw Error(Error::Kind::internal, msg); }
[[noreturn]] inline void resource_error(const std::string& msg) { throw Error(Error::Kind::resource, msg); }

/// Ordered, immutable set of variable names. Polynomials built over a VarSet
/// keep a shared reference; the order fixes exponent-vector layout and the
/// canonical term order.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t i = 0; i < names_.size(); ++i)
            for (size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) input_error("duplicate variable name: " + names_[i]);
    }

    static std::shared_ptr<const VarSet> make(std::vector<std::string> names) {
        return std::make_shared<const VarSet>(std::move(names));
    }

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<size_t> index(std::string_view v) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == v) return i;
        return std::nullopt;
    }

    size_t index_of(std::string_view v) const {
        auto i = index(v);
        if (!i) input_error("unknown variable: " + std::string(v));
        return *i;
    }

    bool operator==(const VarSet& o) const { return names_ == o.names_; }
    bool operator!=(const VarSet& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;
using Exponents = std::vector<int>;

/// Sparse exact Laurent polynomial: map from exponent vector to big-integer
/// coefficient. No stored zero coefficients; all arithmetic exact.
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static LaurentPoly zero(VarSetPtr vars) { return LaurentPoly(std::move(vars)); }

    static LaurentPoly constant(VarSetPtr vars, BigInt c) {
        LaurentPoly p(std::move(vars));
        if (c != 0) p.terms_[Exponents(p.vars_->size(), 0)] = std::move(c);
        return p;
    }

    static LaurentPoly monomial(VarSetPtr vars, Exponents e, BigInt c) {
        LaurentPoly p(std::move(vars));
        if (e.size() != p.vars_->size()) internal_error("exponent vector length mismatch");
        if (c != 0) p.terms_[std::move(e)] = std::move(c);
        return p;
    }

    /// x_i^power as a polynomial.
    static LaurentPoly variable(VarSetPtr vars, size_t i, int power = 1) {
        Exponents e(vars->size(), 0);
        e.at(i) = power;
        return monomial(std::move(vars), std::move(e), 1);
    }

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const auto& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    }

    /// Single term with coefficient +-1? (used where exact division by a
    /// leading coefficient must be a unit)
    bool is_unit_monomial() const {
        return terms_.size() == 1 &&
               (terms_.begin()->second == 1 || terms_.begin()->second == -1);
    }

    BigInt constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) internal_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_same_vars(b);
        LaurentPoly r(a.vars_);
        Exponents e(a.vars_ ? a.vars_->size() : 0);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& operator*=(const BigInt& k) {
        if (k == 0) { terms_.clear(); return *this; }
        for (auto& [e, c] : terms_) c *= k;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const BigInt& k) { return a *= k; }
    friend LaurentPoly operator*(const BigInt& k, LaurentPoly a) { return a *= k; }

    bool operator==(const LaurentPoly& o) const {
        return same_vars(o) && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(int k) const {
        if (k < 0) {
            if (terms_.size() != 1) input_error("negative power of a non-monomial");
            Exponents e = terms_.begin()->first;
            const BigInt& c = terms_.begin()->second;
            if (c != 1 && c != -1) input_error("negative power of a non-unit coefficient");
            for (auto& x : e) x *= k;
            return monomial(vars_, std::move(e), (k % 2 == 0) ? BigInt(1) : c);
        }
        LaurentPoly r = constant(vars_, 1);
        LaurentPoly base = *this;
        for (int b = k; b > 0; b >>= 1) {
            if (b & 1) r *= base;
            base = (b >> 1) ? base * base : base;
        }
        return r;
    }

    int min_exponent(size_t var) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[var] < m) m = e[var];
            first = false;
        }
        return terms_.empty() ? 0 : m;
    }
    int max_exponent(size_t var) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[var] > m) m = e[var];
            first = false;
        }
        return terms_.empty() ? 0 : m;
    }

    /// Multiply by x_var^k (unit shift).
    LaurentPoly shifted(size_t var, int k) const {
        LaurentPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            Exponents e2 = e;
            e2[var] += k;
            r.terms_.emplace(std::move(e2), c);
        }
        return r;
    }

    bool uses_only(const std::vector<size_t>& allowed) const {
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0 && std::find(allowed.begin(), allowed.end(), i) == allowed.end())
                    return false;
        return true;
    }

    /// Ring homomorphism sending each variable to a monomial of a target
    /// ring (images must be monomials with unit coefficient so that negative
    /// exponents stay meaningful).
    LaurentPoly substitute_monomials(const VarSetPtr& target,
                                     const std::vector<LaurentPoly>& images) const {
        if (images.size() != vars_->size()) internal_error("substitution image count mismatch");
        for (const auto& im : images)
            if (!im.is_unit_monomial()) input_error("substitution image must be a unit monomial");
        LaurentPoly r(target);
        for (const auto& [e, c] : terms_) {
            Exponents acc(target->size(), 0);
            bool neg = false;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                const auto& [ie, ic] = *images[i].terms().begin();
                for (size_t j = 0; j < acc.size(); ++j) acc[j] += ie[j] * e[i];
                if (ic == -1 && (e[i] % 2 != 0)) neg = !neg;
            }
            r.add_term(acc, neg ? -c : c);
        }
        return r;
    }

    /// Reinterpret over a superset ring (every variable of *this must exist
    /// in `target`).
    LaurentPoly embed(const VarSetPtr& target) const {
        std::vector<LaurentPoly> images;
        images.reserve(vars_->size());
        for (size_t i = 0; i < vars_->size(); ++i)
            images.push_back(variable(target, target->index_of(vars_->name(i))));
        return substitute_monomials(target, images);
    }

    /// Canonical text: terms in descending lexicographic exponent order,
    /// e.g. `x^2*d^-1 - 3`. This is the bit-exact golden-test surface.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigInt a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool all_zero = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
            if (a != 1 || all_zero) os << a.str();
            bool printed = (a != 1 || all_zero);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (printed) os << "*";
                os << vars_->name(i);
                if (e[i] != 1) os << "^" << e[i];
                printed = true;
            }
        }
        return os.str();
    }

    bool same_vars(const LaurentPoly& o) const {
        if (vars_ == o.vars_) return true;
        return vars_ && o.vars_ && *vars_ == *o.vars_;
    }

private:
    void check_same_vars(const LaurentPoly& o) const {
        if (!same_vars(o)) input_error("variable-set mismatch between polynomials");
    }

    VarSetPtr vars_;
    TermMap terms_;
};

/// Exact division a / b for univariate-in-`var` content (coefficients may use
/// the other variables as units). Fails hard if the division is not exact.
/// Used by gauss binomials, cyclotomic recursion and quotient reduction,
/// where exactness is guaranteed by construction.
inline LaurentPoly divide_exact_univar(const LaurentPoly& a, const LaurentPoly& b, size_t var) {
    if (b.is_zero()) internal_error("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly::zero(a.vars());

    // collect b's terms by var-degree
    int bmax = b.max_exponent(var);
    LaurentPoly rem = a;
    LaurentPoly quot(a.vars());

    // leading coefficient of b in `var` (a polynomial in the rest)
    LaurentPoly blead(b.vars());
    for (const auto& [e, c] : b.terms())
        if (e[var] == bmax) {
            Exponents e2 = e;
            e2[var] = 0;
            blead.add_term(e2, c);
        }
    if (!blead.is_unit_monomial() && !blead.is_constant())
        internal_error("divide_exact_univar: leading coefficient not invertible");

    while (!rem.is_zero()) {
        int rmax = rem.max_exponent(var);
        LaurentPoly rlead(rem.vars());
        for (const auto& [e, c] : rem.terms())
            if (e[var] == rmax) {
                Exponents e2 = e;
                e2[var] = 0;
                rlead.add_term(e2, c);
            }
        // factor = rlead / blead, exact
        LaurentPoly factor(rem.vars());
        if (blead.is_unit_monomial()) {
            factor = rlead * blead.pow(-1);
        } else {
            BigInt bc = blead.constant_value();
            for (const auto& [e, c] : rlead.terms()) {
                if (c % bc != 0) internal_error("inexact polynomial division");
                factor.add_term(e, c / bc);
            }
        }
        LaurentPoly xshift = LaurentPoly::variable(rem.vars(), var, rmax - bmax);
        LaurentPoly piece = factor * xshift;
        quot += piece;
        rem -= piece * b;
        if (!rem.is_zero() && rem.max_exponent(var) >= rmax)
            internal_error("inexact polynomial division (no degree progress)");
    }
    return quot;
}

}  // namespace unij
