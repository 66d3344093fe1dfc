#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "unij/laurent.hpp"
#include "unij/qnum.hpp"

namespace unij {

/// Basis state of a tensor-power weight space: (e_1, ..., e_n), e_k >= 0.
using BasisState = std::vector<int>;

/// Weight space of total weight m in an n-fold tensor power of Verma
/// modules. caps[k] > 0 bounds e_k <= caps[k] - 1; caps[k] == 0 leaves the
/// strand uncapped. Basis enumeration is lexicographic, hence deterministic.
class WeightSpace {
public:
    WeightSpace(int strands, int weight, std::vector<int> caps)
        : strands_(strands), weight_(weight), caps_(std::move(caps)) {
        if (strands < 1 || weight < 0) input_error("WeightSpace: bad parameters");
        if (caps_.empty()) caps_.assign(strands_, 0);
        if (static_cast<int>(caps_.size()) != strands_) input_error("WeightSpace: caps size mismatch");
        BasisState st(strands_, 0);
        enumerate(0, weight_, st);
        for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    }

    int strands() const { return strands_; }
    int weight() const { return weight_; }
    const std::vector<int>& caps() const { return caps_; }
    const std::vector<BasisState>& basis() const { return basis_; }
    size_t dim() const { return basis_.size(); }

    std::optional<size_t> index(const BasisState& st) const {
        auto it = index_.find(st);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

private:
    void enumerate(int pos, int rem, BasisState& st) {
        if (pos == strands_) {
            if (rem == 0) basis_.push_back(st);
            return;
        }
        int hi = rem;
        if (caps_[pos] > 0) hi = std::min(hi, caps_[pos] - 1);
        for (int e = 0; e <= hi; ++e) {
            st[pos] = e;
            enumerate(pos + 1, rem - e, st);
        }
        st[pos] = 0;
    }

    int strands_, weight_;
    std::vector<int> caps_;
    std::vector<BasisState> basis_;
    std::map<BasisState, size_t> index_;
};

inline WeightSpace enumerate_basis(int n, int m, std::vector<int> caps = {}) {
    return WeightSpace(n, m, std::move(caps));
}

/// Sparse vector in a weight space with Laurent-polynomial coefficients.
struct WeightVector {
    std::map<BasisState, LaurentPoly> entries;

    void add(const BasisState& st, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = entries.find(st);
        if (it == entries.end()) entries.emplace(st, c);
        else {
            it->second += c;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
};

/// Braiding block for one crossing sign and an ordered colour pair (a, b):
/// the two x-variables carried by the strands entering the crossing.
///
/// Positive sign on v_i (x) v_j transfers n = 0..i, landing on the pair
/// (j+n, i-n) with the colour labels swapped; the coefficient is
///   (-1)^n x_a^{j+n} x_b^{i-2n} d^{2(i-n)(j+n) - n j}
///        * [j+n; n]_d * prod_{t=0}^{n-1} (x_b^2 d^{2(j+t)} - 1),
/// with [m; k]_d the balanced Gauss binomial. The factor product carries the
/// divided-power divisibility: a step from j across level M contains
/// (x_b d^{M-1} - 1), and the binomial dies at 2N-th roots of unity when the
/// step leaves the level-N cap.
///
/// The negative block is the exact two-sided inverse, obtained by solving
/// the (triangular, unit-diagonal) positive block of the swapped colour
/// pair on each fixed-total-weight slice.
class RMatrixBlock {
public:
    struct Entry {
        int first, second;   // target pair (position k, position k+1)
        LaurentPoly coeff;
    };

    RMatrixBlock(VarSetPtr vars, size_t xa, size_t xb, size_t d, bool positive, int max_weight)
        : vars_(std::move(vars)), xa_(xa), xb_(xb), d_(d), positive_(positive), mmax_(max_weight) {
        if (positive_) {
            build_positive();
        } else {
            build_negative();
        }
        self_check();
    }

    bool positive() const { return positive_; }
    int max_weight() const { return mmax_; }
    size_t colour_left() const { return xa_; }
    size_t colour_right() const { return xb_; }

    const std::vector<Entry>& apply(int i, int j) const {
        auto it = entries_.find({i, j});
        if (it == entries_.end())
            input_error("RMatrixBlock: pair weight exceeds cached maximum");
        return it->second;
    }

private:
    LaurentPoly coeff_pos(int i, int j, int n, size_t xa, size_t xb) const {
        // unit part
        Exponents e(vars_->size(), 0);
        e[xa] += j + n;
        e[xb] += i - 2 * n;
        e[d_] += 2 * (i - n) * (j + n) - n * j;
        LaurentPoly c = LaurentPoly::monomial(vars_, e, (n % 2 == 0) ? 1 : -1);
        c *= gauss_binomial(j + n, n, vars_, d_);
        for (int t = 0; t < n; ++t) {
            LaurentPoly f = LaurentPoly::variable(vars_, xb, 2);
            f *= LaurentPoly::variable(vars_, d_, 2 * (j + t));
            f -= LaurentPoly::constant(vars_, 1);
            c *= f;
        }
        return c;
    }

    void build_positive() {
        for (int m = 0; m <= mmax_; ++m)
            for (int i = 0; i <= m; ++i) {
                int j = m - i;
                std::vector<Entry> out;
                for (int n = 0; n <= i; ++n)
                    out.push_back(Entry{j + n, i - n, coeff_pos(i, j, n, xa_, xb_)});
                entries_[{i, j}] = std::move(out);
            }
    }

    void build_negative() {
        // sigma^-_{(a,b)} = (sigma^+_{(b,a)})^{-1}, sliced by pair weight
        for (int m = 0; m <= mmax_; ++m) {
            int dim = m + 1;
            // forward matrix F[t][s]: sigma^+_{(b,a)} sends source pair with
            // first index s to targets with first index t; t >= m - s.
            std::vector<std::vector<LaurentPoly>> F(dim, std::vector<LaurentPoly>(dim, LaurentPoly::zero(vars_)));
            for (int s = 0; s <= m; ++s) {
                int i = s, j = m - s;
                for (int n = 0; n <= i; ++n) F[j + n][s] = coeff_pos(i, j, n, xb_, xa_);
            }
            // solve F * X = I column by column; in variables s' = m - s the
            // system is lower triangular with unit-monomial diagonal
            std::vector<std::vector<LaurentPoly>> X(dim, std::vector<LaurentPoly>(dim, LaurentPoly::zero(vars_)));
            for (int col = 0; col <= m; ++col) {
                for (int t = 0; t <= m; ++t) {
                    // row t determines x[m - t]
                    int solve_s = m - t;
                    LaurentPoly rhs = (t == col) ? LaurentPoly::constant(vars_, 1)
                                                 : LaurentPoly::zero(vars_);
                    for (int s = solve_s + 1; s <= m; ++s)
                        if (!X[s][col].is_zero() && !F[t][s].is_zero()) rhs -= F[t][s] * X[s][col];
                    const LaurentPoly& diag = F[t][solve_s];
                    if (!diag.is_unit_monomial())
                        internal_error("R-matrix block: non-unit diagonal in inverse solve");
                    X[solve_s][col] = rhs * diag.pow(-1);
                }
            }
            for (int s = 0; s <= m; ++s) {
                int i = s, j = m - s;
                std::vector<Entry> out;
                for (int t = 0; t <= m; ++t)
                    if (!X[t][s].is_zero()) out.push_back(Entry{t, m - t, X[t][s]});
                entries_[{i, j}] = std::move(out);
            }
        }
    }

    /// Build-time structural checks: weight preservation and triangularity
    /// are enforced by construction for the positive block; for the negative
    /// block verify the two-sided inverse contract exactly.
    void self_check() const {
        for (const auto& [src, outs] : entries_) {
            for (const auto& e : outs) {
                if (e.first + e.second != src.first + src.second)
                    internal_error("R-matrix block: weight not preserved");
                if (positive_ && e.second > src.first)
                    internal_error("R-matrix block: triangularity violated");
            }
        }
        if (!positive_) {
            // compose with the forward block of the swapped colours
            for (int m = 0; m <= mmax_; ++m)
                for (int i = 0; i <= m; ++i) {
                    int j = m - i;
                    std::map<std::pair<int, int>, LaurentPoly> acc;
                    for (const auto& mid : apply(i, j)) {
                        int i2 = mid.first, j2 = mid.second;
                        for (int n = 0; n <= i2; ++n) {
                            LaurentPoly c = coeff_pos(i2, j2, n, xb_, xa_) * mid.coeff;
                            auto key = std::make_pair(j2 + n, i2 - n);
                            auto it = acc.find(key);
                            if (it == acc.end()) acc.emplace(key, std::move(c));
                            else it->second += c;
                        }
                    }
                    for (const auto& [tgt, c] : acc) {
                        bool is_id = (tgt.first == i && tgt.second == j);
                        if (is_id ? c != LaurentPoly::constant(vars_, 1) : !c.is_zero())
                            internal_error("R-matrix block: inverse contract failed");
                    }
                }
        }
    }

    VarSetPtr vars_;
    size_t xa_, xb_, d_;
    bool positive_;
    int mmax_;
    std::map<std::pair<int, int>, std::vector<Entry>> entries_;
};

/// Cache of braiding blocks keyed by (colour pair, sign, max weight).
class BlockCache {
public:
    explicit BlockCache(VarSetPtr vars, size_t d_idx) : vars_(std::move(vars)), d_(d_idx) {}

    const RMatrixBlock& get(size_t xa, size_t xb, bool positive, int mmax) {
        auto key = std::make_tuple(xa, xb, positive, mmax);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, std::make_unique<RMatrixBlock>(vars_, xa, xb, d_, positive, mmax)).first;
        return *it->second;
    }

    const VarSetPtr& vars() const { return vars_; }
    size_t d_index() const { return d_; }

private:
    VarSetPtr vars_;
    size_t d_;
    std::map<std::tuple<size_t, size_t, bool, int>, std::unique_ptr<RMatrixBlock>> cache_;
};

/// Apply one braid letter to a sparse weight vector. `colours` holds the
/// x-variable index carried by each strand position and is permuted along
/// with the strands.
inline WeightVector apply_letter(const WeightVector& v, int letter, std::vector<size_t>& colours,
                                 BlockCache& blocks, int pair_weight_max) {
    int k = std::abs(letter) - 1;
    bool pos = letter > 0;
    WeightVector out;
    const RMatrixBlock& blk = blocks.get(colours[k], colours[k + 1], pos, pair_weight_max);
    for (const auto& [st, c] : v.entries) {
        int i = st[k], j = st[k + 1];
        for (const auto& e : blk.apply(i, j)) {
            BasisState tgt = st;
            tgt[k] = e.first;
            tgt[k + 1] = e.second;
            out.add(tgt, c * e.coeff);
        }
    }
    std::swap(colours[k], colours[k + 1]);
    return out;
}

/// Full braid action on a weight vector living in the uncapped weight space
/// of total weight m. Exact; preserves the total weight.
inline WeightVector braid_act(const std::vector<int>& word, const WeightVector& v0,
                              std::vector<size_t> colours, BlockCache& blocks, int total_weight) {
    WeightVector v = v0;
    for (int g : word) v = apply_letter(v, g, colours, blocks, total_weight);
    return v;
}

}  // namespace unij
