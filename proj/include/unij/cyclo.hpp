#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include "unij/laurent.hpp"
#include "unij/qnum.hpp"

namespace unij {

/// Arithmetic context for the ring Z[q]/Phi_{2N}(q). The residue class of q
/// is zeta = xi_N = e^{2*pi*i/2N}, a primitive 2N-th root of unity, so
/// zeta^{2N} = 1 and zeta^N = -1.
class CycloContext {
public:
    explicit CycloContext(int level) : level_(level) {
        if (level < 2) input_error("CycloContext: level must be >= 2");
        auto vars = VarSet::make({"q"});
        phi_ = univar_coeffs(cyclotomic_poly(2 * level, vars, 0), 0);
        if (phi_.back() != 1) internal_error("cyclotomic modulus not monic");
    }

    int level() const { return level_; }
    size_t degree() const { return phi_.size() - 1; }
    const std::vector<BigInt>& modulus() const { return phi_; }

    bool operator==(const CycloContext& o) const { return level_ == o.level_; }

private:
    int level_;
    std::vector<BigInt> phi_;  // ascending coefficients of Phi_{2N}, monic
};

using CycloContextPtr = std::shared_ptr<const CycloContext>;

/// Element of Z[zeta] = Z[q]/Phi_{2N}(q), stored as the reduced residue.
class CycloElem {
public:
    CycloElem() = default;
    explicit CycloElem(CycloContextPtr ctx) : ctx_(std::move(ctx)), c_(ctx_->degree(), 0) {}

    static CycloElem from_int(CycloContextPtr ctx, BigInt v) {
        CycloElem e(std::move(ctx));
        if (e.c_.empty()) internal_error("degenerate cyclotomic context");
        e.c_[0] = std::move(v);
        return e;
    }

    /// zeta^k for any integer k (zeta^{2N} = 1).
    static CycloElem zeta_pow(CycloContextPtr ctx, long k) {
        int n2 = 2 * ctx->level();
        long r = ((k % n2) + n2) % n2;
        std::vector<BigInt> raw(static_cast<size_t>(r) + 1, 0);
        raw[static_cast<size_t>(r)] = 1;
        CycloElem e(std::move(ctx));
        e.c_ = reduce(raw, *e.ctx_);
        return e;
    }

    const CycloContextPtr& ctx() const { return ctx_; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    friend CycloElem operator+(CycloElem a, const CycloElem& b) {
        a.check(b);
        for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) {
        a.check(b);
        for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    CycloElem operator-() const {
        CycloElem r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
        a.check(b);
        std::vector<BigInt> raw(2 * a.c_.size(), 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                raw[i + j] += a.c_[i] * b.c_[j];
            }
        }
        CycloElem r(a.ctx_);
        r.c_ = reduce(raw, *a.ctx_);
        return r;
    }
    CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
    CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

    bool operator==(const CycloElem& o) const { return ctx_ && o.ctx_ && *ctx_ == *o.ctx_ && c_ == o.c_; }
    bool operator!=(const CycloElem& o) const { return !(*this == o); }

    /// Rendering in powers of z (= zeta).
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            BigInt a = c_[i];
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1 || i == 0) os << a.str();
            if (i > 0) {
                if (a != 1) os << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void check(const CycloElem& o) const {
        if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_)) input_error("cyclotomic context mismatch");
    }

    static std::vector<BigInt> reduce(std::vector<BigInt> raw, const CycloContext& ctx) {
        const auto& phi = ctx.modulus();
        size_t deg = phi.size() - 1;
        if (raw.size() < deg) raw.resize(deg, 0);
        for (size_t i = raw.size(); i-- > deg;) {
            if (raw[i] == 0) continue;
            BigInt lead = raw[i];
            raw[i] = 0;
            for (size_t j = 0; j < deg; ++j) raw[i - deg + j] -= lead * phi[j];
        }
        raw.resize(deg);
        return raw;
    }

    CycloContextPtr ctx_;
    std::vector<BigInt> c_;
};

/// Laurent polynomial in colour variables s_1..s_l with CycloElem
/// coefficients, together with a denominator power of (zeta - zeta^{-1}).
/// The denominator only enters through quantum-number images of y; no general
/// division is performed.
class CycloPoly {
public:
    CycloPoly() = default;
    CycloPoly(CycloContextPtr ctx, VarSetPtr svars)
        : ctx_(std::move(ctx)), svars_(std::move(svars)) {}

    static CycloPoly zero(CycloContextPtr ctx, VarSetPtr svars) {
        return CycloPoly(std::move(ctx), std::move(svars));
    }
    static CycloPoly from_elem(CycloContextPtr ctx, VarSetPtr svars, const CycloElem& e) {
        CycloPoly p(std::move(ctx), std::move(svars));
        p.add_term(Exponents(p.svars_->size(), 0), e);
        return p;
    }

    const CycloContextPtr& ctx() const { return ctx_; }
    const VarSetPtr& svars() const { return svars_; }
    const std::map<Exponents, CycloElem>& terms() const { return terms_; }
    int denom_power() const { return denom_pow_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const CycloElem& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend CycloPoly operator+(const CycloPoly& a, const CycloPoly& b) {
        a.check(b);
        if (a.denom_pow_ != b.denom_pow_) {
            // bring to the common denominator exactly
            CycloPoly x = a, y = b;
            int target = std::max(a.denom_pow_, b.denom_pow_);
            x.raise_denom(target);
            y.raise_denom(target);
            return x + y;
        }
        CycloPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
        a.check(b);
        CycloPoly r(a.ctx_, a.svars_);
        r.denom_pow_ = a.denom_pow_ + b.denom_pow_;
        Exponents e(a.svars_->size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    CycloPoly& operator*=(const CycloPoly& o) { return *this = *this * o; }
    CycloPoly& operator+=(const CycloPoly& o) { return *this = *this + o; }

    bool operator==(const CycloPoly& o) const {
        if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_)) return false;
        if (denom_pow_ == o.denom_pow_) return terms_ == o.terms_;
        CycloPoly x = *this, y = o;
        int target = std::max(denom_pow_, o.denom_pow_);
        x.raise_denom(target);
        y.raise_denom(target);
        return x.terms_ == y.terms_;
    }
    bool operator!=(const CycloPoly& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        if (terms_.empty()) return "0";
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*" << svars_->name(i);
                if (e[i] != 1) os << "^" << e[i];
            }
        }
        if (denom_pow_ > 0) os << " / (z - z^-1)^" << denom_pow_;
        return os.str();
    }

    /// Divide the represented value by (zeta - zeta^{-1})^k: the numerator is
    /// untouched, only the denominator tag grows.
    CycloPoly divided_by_unit_power(int k) const {
        if (k < 0) internal_error("divided_by_unit_power: negative power");
        CycloPoly r = *this;
        r.denom_pow_ += k;
        return r;
    }

    /// Multiply through by (zeta - zeta^{-1})^k and bump the denominator.
    void raise_denom(int target) {
        if (target < denom_pow_) internal_error("raise_denom: cannot lower denominator");
        if (target == denom_pow_) return;
        CycloElem unit = CycloElem::zeta_pow(ctx_, 1) - CycloElem::zeta_pow(ctx_, -1);
        CycloElem f = CycloElem::from_int(ctx_, 1);
        for (int i = denom_pow_; i < target; ++i) f *= unit;
        for (auto& [e, c] : terms_) c = c * f;
        denom_pow_ = target;
    }

private:
    void check(const CycloPoly& o) const {
        if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_) || !svars_ || !o.svars_ || !(*svars_ == *o.svars_))
            input_error("cyclotomic polynomial context mismatch");
    }

    CycloContextPtr ctx_;
    VarSetPtr svars_;
    std::map<Exponents, CycloElem> terms_;
    int denom_pow_ = 0;
};

/// Image of one variable under a root-of-unity specialization: a power of
/// zeta times a monomial in the colour variables, or a quantum-number image
/// with a (zeta-zeta^{-1}) denominator.
struct RootImage {
    long zeta_power = 0;
    Exponents s_exponents;  // over the target colour VarSet

    static RootImage zeta(long k, const VarSetPtr& svars) {
        return RootImage{k, Exponents(svars->size(), 0)};
    }
    static RootImage s_var(const VarSetPtr& svars, size_t idx, int power = 1, long zeta_k = 0) {
        Exponents e(svars->size(), 0);
        e[idx] = power;
        return RootImage{zeta_k, std::move(e)};
    }
};

/// Exact ring homomorphism Z[vars] -> CycloPoly given a RootImage per
/// variable. Every variable of p must be assigned.
inline CycloPoly evaluate_at_root(const LaurentPoly& p, const CycloContextPtr& ctx,
                                  const VarSetPtr& svars,
                                  const std::map<std::string, RootImage>& assignment) {
    CycloPoly out(ctx, svars);
    const auto& vars = *p.vars();
    std::vector<const RootImage*> images(vars.size(), nullptr);
    for (size_t i = 0; i < vars.size(); ++i) {
        auto it = assignment.find(vars.name(i));
        if (it == assignment.end()) input_error("evaluate_at_root: unassigned variable " + vars.name(i));
        images[i] = &it->second;
    }
    for (const auto& [e, c] : p.terms()) {
        long zk = 0;
        Exponents se(svars->size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            zk += images[i]->zeta_power * e[i];
            for (size_t j = 0; j < se.size(); ++j) se[j] += images[i]->s_exponents[j] * e[i];
        }
        CycloElem coeff = CycloElem::zeta_pow(ctx, zk);
        for (auto& v : coeff.coeffs()) (void)v;
        CycloElem scaled = coeff * CycloElem::from_int(ctx, c);
        out.add_term(se, scaled);
    }
    return out;
}

}  // namespace unij
