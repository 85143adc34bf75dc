#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ssc/common.hpp"
#include "ssc/fields.hpp"
#include "ssc/matrix.hpp"
#include "ssc/subspace.hpp"

namespace ssc {

// ============================================================================
// q-systems: F_q-subspaces of F_{q^k}^r
// ============================================================================

/// An F_q-subspace of F_{q^k}^r of dimension u, given by an F_q-independent
/// basis (u vectors of length r). Independence is enforced; spanning all of
/// F_{q^k}^r over the extension field (nondegeneracy) is only reported.
struct QSystem {
    FieldCtx field;  // the extension field F_{q^k}
    uint32_t r = 0;
    std::vector<std::vector<ExtElement>> basis;  // u rows of length r

    QSystem(FieldCtx f, uint32_t r_, std::vector<std::vector<ExtElement>> b);

    [[nodiscard]] uint32_t u() const { return (uint32_t)basis.size(); }
};

/// Coordinate expansion F_{q^k}^r -> F_q^{rk}: coordinate j contributes the
/// power-basis coefficients of v[j] as the j-th block of length k.
inline std::vector<uint32_t> field_reduce_vec(const std::vector<ExtElement>& v,
                                              const FieldCtx& field) {
    const uint32_t k = field.k();
    std::vector<uint32_t> out;
    out.reserve(v.size() * k);
    for (const ExtElement& e : v) {
        if (e.c.size() != k) throw std::invalid_argument("element has wrong coefficient length");
        for (uint32_t i = 0; i < k; ++i) out.push_back(e.c[i]);
    }
    return out;
}

namespace detail {

inline bool qsys_vec_is_zero(const std::vector<ExtElement>& v, const FieldCtx& field) {
    for (const ExtElement& e : v)
        if (!field.is_zero(e)) return false;
    return true;
}

/// Rows of the coordinate expansion of the F_{q^k}-line through rep:
/// row i = expansion of alpha^i * rep (alpha = the power-basis generator).
inline MatrixGF line_expansion_rows(const std::vector<ExtElement>& rep, const FieldCtx& field) {
    const uint32_t k = field.k();
    const uint32_t r = (uint32_t)rep.size();
    MatrixGF m(field.q(), k, (std::size_t)r * k);
    ExtElement scale = field.one();
    ExtElement alpha = field.zero();
    alpha.c[k > 1 ? 1 : 0] = 1;
    for (uint32_t i = 0; i < k; ++i) {
        for (uint32_t j = 0; j < r; ++j) {
            const ExtElement val = field.mul(scale, rep[j]);
            for (uint32_t d = 0; d < k; ++d) m.at(i, (std::size_t)j * k + d) = val.c[d];
        }
        if (i + 1 < k) scale = field.mul(scale, alpha);
    }
    return m;
}

}  // namespace detail

/// u x rk matrix whose rows are the coordinate expansions of the basis.
inline MatrixGF expand_system(const QSystem& U) {
    const uint32_t k = U.field.k();
    MatrixGF m(U.field.q(), U.basis.size(), (std::size_t)U.r * k);
    for (std::size_t i = 0; i < U.basis.size(); ++i) {
        const std::vector<uint32_t> row = field_reduce_vec(U.basis[i], U.field);
        for (std::size_t j = 0; j < row.size(); ++j) m.at(i, j) = row[j];
    }
    return m;
}

inline QSystem::QSystem(FieldCtx f, uint32_t r_, std::vector<std::vector<ExtElement>> b)
    : field(std::move(f)), r(r_), basis(std::move(b)) {
    if (r == 0) throw std::invalid_argument("ambient dimension r must be positive");
    if (basis.empty()) throw std::invalid_argument("empty basis");
    for (const auto& row : basis) {
        if (row.size() != r) throw std::invalid_argument("basis vector of wrong length");
        for (const ExtElement& e : row)
            if (e.c.size() != field.k())
                throw std::invalid_argument("element has wrong coefficient length");
    }
    if (rank(expand_system(*this)) != basis.size())
        throw std::invalid_argument("basis is not F_q-linearly independent");
}

// ============================================================================
// Projective points and the field-reduction map on points
// ============================================================================

/// A point of P^{r-1} over F_{q^k}: normalized representative (first nonzero
/// coordinate 1) plus its weight dim_{F_q}(U ∩ span_{F_{q^k}}(rep)).
struct LinearSetPoint {
    std::vector<ExtElement> rep;
    uint32_t weight = 0;
};

/// Scales a nonzero vector so its first nonzero coordinate is 1.
inline std::vector<ExtElement> normalize_point_rep(std::vector<ExtElement> v,
                                                   const FieldCtx& field) {
    for (const ExtElement& e : v) {
        if (field.is_zero(e)) continue;
        const ExtElement s = field.inv(e);
        for (ExtElement& x : v) x = field.mul(x, s);
        return v;
    }
    throw std::invalid_argument("zero vector has no projective point");
}

/// The k-dimensional F_q-subspace {expansion of lambda * rep : lambda} of
/// F_q^{rk}; independent of the chosen representative.
inline Subspace field_reduce_point(const std::vector<ExtElement>& rep, const FieldCtx& field) {
    if (detail::qsys_vec_is_zero(rep, field))
        throw std::invalid_argument("zero vector has no projective point");
    return Subspace::from_matrix(detail::line_expansion_rows(rep, field));
}

inline Subspace field_reduce_point(const LinearSetPoint& p, const FieldCtx& field) {
    return field_reduce_point(p.rep, field);
}

/// All images of projective points of P^{r-1}_{q^k}: a partition of the
/// nonzero vectors of F_q^{rk} into (q^{rk}-1)/(q^k-1) subspaces of dim k.
inline std::vector<Subspace> desarguesian_spread(uint32_t r, const FieldCtx& field) {
    if (r == 0) throw std::invalid_argument("ambient dimension r must be positive");
    const uint64_t qk = field.element_count();
    // point count = q^{k(r-1)} + ... + q^k + 1
    uint64_t points = 0, term = 1;
    for (uint32_t i = 0; i < r; ++i) {
        points += term;
        if (i + 1 < r) {
            if (term > desk_caps().materialize / qk + 1) throw cap_exceeded("spread enumeration");
            term *= qk;
        }
    }
    if (points > desk_caps().materialize) throw cap_exceeded("spread enumeration");

    std::vector<Subspace> out;
    out.reserve(points);
    // normalized representatives: first nonzero coordinate at position lead,
    // equal to 1, later coordinates running over all of F_{q^k}
    for (uint32_t lead = 0; lead < r; ++lead) {
        const uint32_t tail = r - lead - 1;
        std::vector<uint64_t> enc(tail, 0);
        while (true) {
            std::vector<ExtElement> rep(r, field.zero());
            rep[lead] = field.one();
            for (uint32_t j = 0; j < tail; ++j) rep[lead + 1 + j] = field.from_encoding(enc[j]);
            out.push_back(field_reduce_point(rep, field));
            uint32_t j = tail;
            while (j > 0) {
                if (++enc[j - 1] < qk) break;
                enc[j - 1] = 0;
                --j;
            }
            if (j == 0) break;
        }
    }
    return out;
}

// ============================================================================
// Built-in q-system family and linear sets
// ============================================================================

/// The u=k system {(s, s^q, s^{q^2}, ..., s^{q^{r-1}}) : s in F_{q^k}} with
/// F_q-basis given by s = alpha^j.
inline QSystem gabidulin_system(const FieldCtx& field, uint32_t r) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    const uint32_t k = field.k();
    ExtElement alpha = field.zero();
    alpha.c[k > 1 ? 1 : 0] = 1;
    std::vector<std::vector<ExtElement>> basis;
    ExtElement s = field.one();
    for (uint32_t j = 0; j < k; ++j) {
        std::vector<ExtElement> row(r);
        for (uint32_t c = 0; c < r; ++c) row[c] = field.frobenius(s, c);
        basis.push_back(std::move(row));
        if (j + 1 < k) s = field.mul(s, alpha);
    }
    return QSystem(field, r, std::move(basis));
}

/// The points spanned by nonzero vectors of U, each with its weight; the
/// weight of rep is u + k - rank of the stacked expansions of U and the
/// F_{q^k}-line of rep.
inline std::vector<LinearSetPoint> linear_set_points(const QSystem& U) {
    const FieldCtx& F = U.field;
    const uint32_t q = F.q(), k = F.k(), u = U.u();
    uint64_t total;
    try {
        total = upow_checked(q, u);
    } catch (const std::overflow_error&) {
        throw cap_exceeded("linear set enumeration");
    }
    if (total > desk_caps().materialize) throw cap_exceeded("linear set enumeration");

    std::map<std::vector<uint64_t>, std::vector<ExtElement>> reps;
    for (uint64_t e = 1; e < total; ++e) {
        std::vector<ExtElement> vec(U.r, F.zero());
        uint64_t rest = e;
        for (uint32_t i = 0; i < u; ++i) {
            const uint32_t ci = (uint32_t)(rest % q);
            rest /= q;
            if (!ci) continue;
            for (uint32_t j = 0; j < U.r; ++j)
                vec[j] = F.add(vec[j], F.scalar_mul(ci, U.basis[i][j]));
        }
        std::vector<ExtElement> rep = normalize_point_rep(std::move(vec), F);
        std::vector<uint64_t> key(U.r);
        for (uint32_t j = 0; j < U.r; ++j) key[j] = F.encoding(rep[j]);
        reps.emplace(std::move(key), std::move(rep));
    }

    const MatrixGF Umat = expand_system(U);
    std::vector<LinearSetPoint> out;
    out.reserve(reps.size());
    for (auto& [key, rep] : reps) {
        const MatrixGF line = detail::line_expansion_rows(rep, F);
        MatrixGF stacked(q, Umat.rows + line.rows, Umat.cols);
        std::copy(Umat.a.begin(), Umat.a.end(), stacked.a.begin());
        std::copy(line.a.begin(), line.a.end(), stacked.a.begin() + (std::ptrdiff_t)Umat.a.size());
        const uint32_t w = u + k - (uint32_t)rank(stacked);
        out.push_back(LinearSetPoint{std::move(rep), w});
    }
    return out;
}

/// True iff every point of the linear set has weight 1; equivalently the
/// linear set attains its maximum size (q^u-1)/(q-1).
inline bool is_scattered(const QSystem& U) {
    for (const LinearSetPoint& p : linear_set_points(U))
        if (p.weight != 1) return false;
    return true;
}

inline std::vector<LinearSetPoint> weight_one_points(const QSystem& U) {
    std::vector<LinearSetPoint> out;
    for (LinearSetPoint& p : linear_set_points(U))
        if (p.weight == 1) out.push_back(std::move(p));
    return out;
}

/// Necessary dimension condition for a scattered system of rank u in
/// F_{q^k}^r: u can be at most rk/2.
inline bool scattered_rank_check(uint32_t u, uint32_t r, uint32_t k) {
    return 2ULL * u <= (uint64_t)r * k;
}

// ============================================================================
// Reported (not enforced) structural checks
// ============================================================================

namespace detail {

/// Rank of a matrix of extension-field elements over F_{q^k}.
inline uint32_t ext_rank(std::vector<std::vector<ExtElement>> m, const FieldCtx& F) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    uint32_t rk = 0;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = pr; i < rows; ++i)
            if (!F.is_zero(m[i][c])) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[pr], m[piv]);
        const ExtElement s = F.inv(m[pr][c]);
        for (std::size_t j = c; j < cols; ++j) m[pr][j] = F.mul(m[pr][j], s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || F.is_zero(m[i][c])) continue;
            const ExtElement f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[pr][j]));
        }
        ++pr;
        ++rk;
    }
    return rk;
}

}  // namespace detail

struct QSystemChecks {
    bool u_rank_ok = false;     // F_q-rank of the expansion equals u
    bool nondegenerate = false; // extension-field span is all of F_{q^k}^r
};

inline QSystemChecks q_system_checks(const QSystem& U) {
    QSystemChecks out;
    out.u_rank_ok = rank(expand_system(U)) == U.basis.size();
    out.nondegenerate = detail::ext_rank(U.basis, U.field) == U.r;
    return out;
}

}  // namespace ssc
