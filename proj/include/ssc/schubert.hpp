#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ssc/common.hpp"
#include "ssc/ferrers.hpp"
#include "ssc/subspace.hpp"

namespace ssc {

// ============================================================================
// Schubert conditions and cells with respect to the standard flag
// V_i = span{e_{n-i+1}, ..., e_n}
// ============================================================================

/// Strictly increasing condition (d_1, ..., d_k) with 1 <= d_1 < ... < d_k <= n.
/// A k-space W satisfies it when dim(W cap V_{d_i}) >= i for all i.
struct SchubertCondition {
    std::vector<uint32_t> d;
    uint32_t n = 0;
    uint32_t k = 0;

    SchubertCondition(std::vector<uint32_t> d_, uint32_t n_) : d(std::move(d_)), n(n_) {
        k = (uint32_t)d.size();
        if (k == 0 || k > n) throw std::invalid_argument("condition length out of range");
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] < 1 || d[i] > n) throw std::invalid_argument("condition entry out of range");
            if (i && d[i] <= d[i - 1]) throw std::invalid_argument("condition must strictly increase");
        }
    }
};

/// Pivot columns (p_1 < ... < p_k), 1-based, of a k x n RREF basis.
struct PivotVector {
    std::vector<uint32_t> p;

    PivotVector() = default;
    explicit PivotVector(std::vector<uint32_t> p_) : p(std::move(p_)) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 1) throw std::invalid_argument("pivot entries are 1-based");
            if (i && p[i] <= p[i - 1]) throw std::invalid_argument("pivots must strictly increase");
        }
    }

    [[nodiscard]] std::size_t size() const { return p.size(); }
    friend bool operator==(const PivotVector&, const PivotVector&) = default;
    friend bool operator<(const PivotVector& a, const PivotVector& b) { return a.p < b.p; }
};

/// V_i = span{e_{n-i+1}, ..., e_n}: the i-dim member of the standard flag.
inline Subspace standard_flag_space(uint32_t i, uint32_t n, uint32_t q) {
    if (i < 1 || i > n) throw std::invalid_argument("flag index out of range");
    MatrixGF m(q, i, n);
    for (uint32_t r = 0; r < i; ++r) m.at(r, n - i + r) = 1;
    return Subspace::from_matrix(m);
}

inline Subspace standard_flag_space(uint32_t i, uint32_t n, const FieldCtx& f) {
    return standard_flag_space(i, n, f.q());
}

/// p_i = n + 1 - d_{k+1-i}; an involution between pivots and conditions.
inline SchubertCondition pivot_to_condition(const PivotVector& p, uint32_t n) {
    const std::size_t k = p.size();
    if (k == 0 || p.p.back() > n) throw std::invalid_argument("pivot vector out of range");
    std::vector<uint32_t> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = n + 1 - p.p[k - 1 - i];
    return SchubertCondition(std::move(d), n);
}

inline PivotVector condition_to_pivot(const SchubertCondition& d) {
    const std::size_t k = d.d.size();
    std::vector<uint32_t> p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = d.n + 1 - d.d[k - 1 - i];
    return PivotVector(std::move(p));
}

/// Membership in the Schubert variety: all k flag inequalities, checked by
/// actual intersection computations against the standard flag.
inline bool satisfies_schubert(const Subspace& W, const SchubertCondition& d) {
    if (W.ambient() != d.n) throw std::invalid_argument("ambient mismatch");
    for (std::size_t i = 0; i < d.d.size(); ++i) {
        const Subspace Vi = standard_flag_space(d.d[i], d.n, W.q());
        if (intersection_dim(W, Vi) < i + 1) return false;
    }
    return true;
}

/// The condition carving Omega_{V_u, l} out of Gr_q(k, n):
/// d = (u-l+1, ..., u, n-k+l+1, ..., n).
inline SchubertCondition omega_ul_condition(uint32_t u, uint32_t l, uint32_t k, uint32_t n) {
    if (l < 1 || l > k || l > u || u > n || k > n)
        throw std::invalid_argument("need 1 <= l <= min(k, u), u <= n, k <= n");
    if (l < k && u > n - k + l) throw std::invalid_argument("condition blocks collide");
    std::vector<uint32_t> d;
    d.reserve(k);
    for (uint32_t i = u - l + 1; i <= u; ++i) d.push_back(i);
    for (uint32_t i = n - k + l + 1; i <= n; ++i) d.push_back(i);
    return SchubertCondition(std::move(d), n);
}

/// dim(W cap U) >= l, by direct intersection; U need not be a flag space.
inline bool in_omega_ul(const Subspace& W, const Subspace& U, uint32_t l) {
    if (W.ambient() != U.ambient()) throw std::invalid_argument("ambient mismatch");
    return intersection_dim(W, U) >= l;
}

/// Pivot vector of the canonical RREF basis; labels W's Schubert cell.
inline PivotVector cell_of(const Subspace& W) { return PivotVector(W.pivots()); }

/// Free-entry dot pattern of the cell's RREF template: row i gets one dot per
/// non-pivot column right of p_i. Counts are automatically non-increasing.
inline FerrersDiagram echelon_ferrers_of(const PivotVector& p, uint32_t n) {
    const std::size_t k = p.size();
    if (k == 0 || p.p.back() > n) throw std::invalid_argument("pivot vector out of range");
    std::vector<bool> is_piv(n + 1, false);
    for (uint32_t c : p.p) is_piv[c] = true;
    std::vector<uint32_t> dots(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (uint32_t c = p.p[i] + 1; c <= n; ++c)
            if (!is_piv[c]) ++dots[i];
    return FerrersDiagram(std::move(dots));
}

[[nodiscard]] inline std::uint64_t cell_size(const PivotVector& p, uint32_t n, uint32_t q) {
    return upow_checked(q, (uint32_t)echelon_ferrers_of(p, n).dots());
}

/// All subspaces with exactly the given pivots, in odometer order over the
/// free entries (top-left slot most significant).
inline std::vector<Subspace> enumerate_cell(const PivotVector& p, uint32_t n, uint32_t q) {
    std::uint64_t count;
    try {
        count = cell_size(p, n, q);
    } catch (const std::overflow_error&) {
        throw cap_exceeded("cell enumeration");
    }
    if (count > desk_caps().subspace_enum) throw cap_exceeded("cell enumeration");
    std::vector<Subspace> out;
    out.reserve(count);
    detail::CellOdometer odo(q, p.p, n);
    while (!odo.done) {
        out.push_back(Subspace::from_matrix(odo.mat));
        odo.advance();
    }
    return out;
}

inline std::vector<Subspace> enumerate_cell(const PivotVector& p, uint32_t n, const FieldCtx& f) {
    return enumerate_cell(p, n, f.q());
}

}  // namespace ssc
