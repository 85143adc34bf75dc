#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ssc/common.hpp"
#include "ssc/fields.hpp"
#include "ssc/linear_sets.hpp"
#include "ssc/matrix.hpp"
#include "ssc/subspace.hpp"
#include "ssc/subspace_code.hpp"

namespace ssc {

// ============================================================================
// The two families of maximum intersecting sets
// ============================================================================

struct ConstructionResult {
    SubspaceCode code;
    Subspace U;            // the reference subspace the code intersects
    std::string warning;   // nonempty for degenerate outcomes
};

/// The system {(x, x^q, x, x, ..., x) : x in F_{q^k}}; coincides with the
/// Frobenius-orbit system at r = 2.
inline QSystem replicated_system(const FieldCtx& field, uint32_t r) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    const uint32_t k = field.k();
    ExtElement alpha = field.zero();
    alpha.c[k > 1 ? 1 : 0] = 1;
    std::vector<std::vector<ExtElement>> basis;
    ExtElement s = field.one();
    for (uint32_t j = 0; j < k; ++j) {
        std::vector<ExtElement> row(r, s);
        row[1] = field.frobenius(s, 1);
        basis.push_back(std::move(row));
        if (j + 1 < k) s = field.mul(s, alpha);
    }
    return QSystem(field, r, std::move(basis));
}

/// For each a of norm 1, the k-dim subspace spanned by the expansions of
/// {(s, a s, s^{q^2}, ..., s^{q^{r-1}}) : s in F_{q^k}}. Together with
/// U = the expanded Frobenius-orbit system, an intersecting set of size
/// (q^k - 1)/(q - 1): every codeword meets U in dimension exactly 1 and
/// pairwise intersections are trivial.
inline ConstructionResult norm_one_code(const FieldCtx& field, uint32_t r) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    const uint32_t k = field.k(), q = field.q();
    const uint32_t n = r * k;
    ExtElement alpha = field.zero();
    alpha.c[k > 1 ? 1 : 0] = 1;

    SubspaceCode code(q, k, n);
    for (const ExtElement& a : field.norm_one_elements()) {
        MatrixGF m(q, k, n);
        ExtElement s = field.one();
        for (uint32_t j = 0; j < k; ++j) {
            for (uint32_t c = 0; c < r; ++c) {
                ExtElement val;
                if (c == 0)
                    val = s;
                else if (c == 1)
                    val = field.mul(a, s);
                else
                    val = field.frobenius(s, c);
                for (uint32_t d = 0; d < k; ++d) m.at(j, (std::size_t)c * k + d) = val.c[d];
            }
            if (j + 1 < k) s = field.mul(s, alpha);
        }
        code.insert(Subspace::from_matrix(m), "a=" + std::to_string(field.encoding(a)));
    }
    ConstructionResult out{std::move(code),
                           Subspace::from_matrix(expand_system(gabidulin_system(field, r))), {}};
    return out;
}

/// One codeword per weight-one point of the linear set of U: the expanded
/// F_{q^k}-line of the point. The reference subspace is the expansion of U
/// itself (dimension u). For a scattered U the size is (q^u - 1)/(q - 1).
inline ConstructionResult scattered_code(const QSystem& U) {
    const FieldCtx& F = U.field;
    const uint32_t k = F.k(), q = F.q();
    const uint32_t n = U.r * k;
    SubspaceCode code(q, k, n);
    for (const LinearSetPoint& p : weight_one_points(U)) {
        std::string label = "P=[";
        for (uint32_t j = 0; j < U.r; ++j) {
            if (j) label += ",";
            label += std::to_string(F.encoding(p.rep[j]));
        }
        label += "]";
        code.insert(field_reduce_point(p, F), std::move(label));
    }
    ConstructionResult out{std::move(code), Subspace::from_matrix(expand_system(U)), {}};
    if (out.code.size() == 0) out.warning = "no weight-one points: empty code";
    return out;
}

// ============================================================================
// Coordinate-wise Frobenius maps and equivalence of codes
// ============================================================================

/// The F_q-linear (semilinear over F_{q^k}) map applying the exps[j]-th
/// Frobenius power to coordinate j.
struct CoordFrobeniusMap {
    std::vector<uint32_t> exps;  // one exponent per coordinate

    [[nodiscard]] std::vector<ExtElement> apply(const std::vector<ExtElement>& v,
                                                const FieldCtx& field) const {
        if (v.size() != exps.size()) throw std::invalid_argument("vector length mismatch");
        std::vector<ExtElement> out(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) out[j] = field.frobenius(v[j], exps[j]);
        return out;
    }
};

/// The map (x_1, x_2, x_3, ..., x_r) -> (x_1, x_2, x_3^{q^{k-2}}, ...,
/// x_r^{q^{k-r+1}}), exponents reduced mod k; identity at r = 2. It carries
/// the Frobenius-orbit system onto the replicated system.
inline CoordFrobeniusMap psi_map(const FieldCtx& field, uint32_t r) {
    if (r < 2) throw std::invalid_argument("need r >= 2");
    const uint32_t k = field.k();
    CoordFrobeniusMap m;
    m.exps.assign(r, 0);
    for (uint32_t j = 2; j < r; ++j) m.exps[j] = (k - (j % k)) % k;
    return m;
}

/// rk x rk matrix M over F_q with expansion(v) * M = expansion(map(v))
/// (row-vector convention); block diagonal, one k x k block per coordinate.
inline MatrixGF phi_lift(const CoordFrobeniusMap& map, const FieldCtx& field, uint32_t r) {
    if (map.exps.size() != r) throw std::invalid_argument("map arity mismatch");
    const uint32_t k = field.k(), q = field.q();
    const std::size_t n = (std::size_t)r * k;
    MatrixGF M(q, n, n);
    for (uint32_t j = 0; j < r; ++j) {
        for (uint32_t i = 0; i < k; ++i) {
            ExtElement e = field.zero();
            e.c[i] = 1;
            const ExtElement img = field.frobenius(e, map.exps[j]);
            for (uint32_t d = 0; d < k; ++d)
                M.at((std::size_t)j * k + i, (std::size_t)j * k + d) = img.c[d];
        }
    }
    return M;
}

/// Image of a subspace under an ambient linear map (row-vector convention).
inline Subspace map_subspace(const Subspace& S, const MatrixGF& M) {
    if (M.rows != S.ambient()) throw std::invalid_argument("map/ambient mismatch");
    MatrixGF m(S.q(), S.dim(), M.cols);
    for (std::size_t i = 0; i < S.dim(); ++i) {
        const std::vector<uint32_t> img = vec_mat_mul(S.basis().row(i), M);
        for (std::size_t j = 0; j < img.size(); ++j) m.at(i, j) = img[j];
    }
    return Subspace::from_matrix(m);
}

/// True iff the invertible map M carries U onto U2 and the codeword set of S
/// exactly onto that of S2.
inline bool check_equivalence(const SubspaceCode& S, const Subspace& U, const SubspaceCode& S2,
                              const Subspace& U2, const MatrixGF& M) {
    if (M.rows != M.cols) throw std::invalid_argument("map must be square");
    if (!is_invertible(M)) throw std::invalid_argument("map is not invertible");
    if (S.ambient() != M.rows || S2.ambient() != M.rows || U.ambient() != M.rows ||
        U2.ambient() != M.rows)
        throw std::invalid_argument("ambient dimensions disagree");
    if (map_subspace(U, M) != U2) return false;
    if (S.size() != S2.size() || S.dim() != S2.dim()) return false;
    std::vector<Subspace> images;
    images.reserve(S.size());
    for (const Subspace& w : S.words()) images.push_back(map_subspace(w, M));
    std::sort(images.begin(), images.end());
    return images == S2.words();
}

}  // namespace ssc
