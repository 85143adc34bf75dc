#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssc/common.hpp"
#include "ssc/ferrers.hpp"
#include "ssc/fields.hpp"
#include "ssc/multilevel.hpp"
#include "ssc/schubert.hpp"
#include "ssc/subspace.hpp"
#include "ssc/subspace_code.hpp"

namespace ssc {

// ============================================================================
// Size bounds
// ============================================================================

/// (q^u - 1)/(q - 1): the number of points of a u-dim projective space over
/// F_q; an upper bound for intersecting sets (l = 1, t = 0) at u < rk.
inline std::uint64_t upper_bound_basic(uint32_t k, uint32_t r, uint32_t u, uint32_t q) {
    if (u < 1 || (std::uint64_t)u >= (std::uint64_t)r * k)
        throw std::invalid_argument("need 1 <= u < rk");
    return (upow_checked(q, u) - 1) / (q - 1);
}

/// Gaussian binomial (u choose l)_q, applicable only when t + 1 <= l;
/// nullopt marks an inapplicable bound.
inline std::optional<std::uint64_t> upper_bound_general(uint32_t u, uint32_t l, uint32_t t,
                                                        uint32_t q) {
    if (t + 1 > l) return std::nullopt;
    return gaussian_binomial(u, l, q);
}

/// A lower bound given as an exponent: the guaranteed size is q^exponent.
/// conjectural marks dependence on the open maximality conjecture for
/// Ferrers-diagram codes.
struct ExponentLowerBound {
    std::uint64_t exponent = 0;
    bool conjectural = true;

    [[nodiscard]] std::uint64_t value(uint32_t q) const {
        return upow_checked(q, (uint32_t)exponent);
    }
};

/// Multilevel lower bound for (l, t)-intersecting sets: exponent given by the
/// closed-form minimum dot count of the dedicated diagram.
inline ExponentLowerBound lower_bound_multilevel(uint32_t k, uint32_t r, uint32_t u, uint32_t l,
                                                 uint32_t t, uint32_t q) {
    (void)q;
    return ExponentLowerBound{closed_form_nu_min(k, r, u, l, t), true};
}

// ============================================================================
// Verification of (l, t)-intersecting sets
// ============================================================================

struct BoundComparison {
    std::string name;
    std::uint64_t value = 0;
    bool isUpper = true;
    bool met = false;         // upper: size <= value; lower: size >= value
    bool conjectural = false;
};

struct VerificationReport {
    bool valid = false;
    std::uint64_t size = 0;
    uint32_t minDistance = 0;
    uint32_t worstPairIntersectionDim = 0;
    std::vector<uint32_t> perCodewordUIntersectionDims;
    std::vector<BoundComparison> boundComparisons;
};

/// Exhaustive check that S is an (l, t)-intersecting set with respect to U:
/// every codeword meets U in dimension >= l and pairwise intersections have
/// dimension <= t. Also reports the minimum subspace distance (2k for fewer
/// than two codewords, by convention) and the applicable size bounds.
inline VerificationReport verify_intersecting(const SubspaceCode& S, const Subspace& U,
                                              uint32_t l, uint32_t t) {
    if (S.ambient() != U.ambient()) throw std::invalid_argument("ambient mismatch");
    if (S.q() != U.q()) throw std::invalid_argument("field mismatch");
    const uint32_t k = S.dim();
    const uint32_t n = S.ambient();
    const uint32_t q = S.q();
    const uint32_t u = (uint32_t)U.dim();

    VerificationReport rep;
    rep.size = S.size();

    bool u_ok = true;
    for (const Subspace& w : S.words()) {
        const uint32_t d = (uint32_t)intersection_dim(w, U);
        rep.perCodewordUIntersectionDims.push_back(d);
        if (d < l) u_ok = false;
    }

    uint32_t worst = 0;
    uint32_t min_dist = 2 * k;  // convention for fewer than two codewords
    const auto& words = S.words();
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const uint32_t d = (uint32_t)intersection_dim(words[i], words[j]);
            worst = std::max(worst, d);
            min_dist = std::min(min_dist, 2 * (k - d));
        }
    }
    rep.worstPairIntersectionDim = worst;
    rep.minDistance = min_dist;
    rep.valid = u_ok && worst <= t;

    // applicable size bounds
    if (l == 1 && t == 0 && u >= 1 && u < n) {
        BoundComparison b;
        b.name = "upper_basic";
        b.value = (upow_checked(q, u) - 1) / (q - 1);
        b.isUpper = true;
        b.met = rep.size <= b.value;
        rep.boundComparisons.push_back(std::move(b));
    }
    if (t + 1 <= l && l <= u) {
        BoundComparison b;
        b.name = "upper_general";
        b.value = gaussian_binomial(u, l, q);
        b.isUpper = true;
        b.met = rep.size <= b.value;
        rep.boundComparisons.push_back(std::move(b));
    }
    if (k >= 1 && n % k == 0) {
        try {
            const ExponentLowerBound lb = lower_bound_multilevel(k, n / k, u, l, t, q);
            BoundComparison b;
            b.name = "lower_ferrers";
            b.value = lb.value(q);
            b.isUpper = false;
            b.met = rep.size >= b.value;
            b.conjectural = lb.conjectural;
            rep.boundComparisons.push_back(std::move(b));
        } catch (const std::invalid_argument&) {
            // parameters outside the diagram's range: no lower bound row
        } catch (const std::overflow_error&) {
        }
    }
    return rep;
}

// ============================================================================
// Exact maximum size by clique search at desk scale
// ============================================================================

/// Maximum size of an (l, t)-intersecting set with respect to U among
/// k-subspaces of F_q^n: maximum clique over the eligible subspaces with
/// edges between pairs intersecting in dimension <= t. Deterministic vertex
/// order (canonical enumeration order).
inline std::uint64_t exact_mq_search(const Subspace& U, uint32_t k, uint32_t l, uint32_t t,
                                     const FieldCtx& field) {
    const uint32_t n = (uint32_t)U.ambient();
    const uint32_t q = field.q();
    if (U.q() != q) throw std::invalid_argument("field mismatch");
    std::uint64_t total;
    try {
        total = gaussian_binomial(n, k, q);
    } catch (const std::overflow_error&) {
        throw cap_exceeded("subspace enumeration for exact search");
    }
    if (total > desk_caps().clique_vertices)
        throw cap_exceeded("subspace enumeration for exact search");

    std::vector<Subspace> vertices;
    SubspaceStream stream(k, n, q);
    while (!stream.exhausted()) {
        Subspace W = stream.next();
        if (intersection_dim(W, U) >= l) vertices.push_back(std::move(W));
    }

    std::vector<std::vector<bool>> adj(vertices.size(), std::vector<bool>(vertices.size(), false));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (intersection_dim(vertices[i], vertices[j]) <= t) adj[i][j] = adj[j][i] = true;
    return detail::max_clique(adj, nullptr);
}

/// Same search with the standard reference subspace spanned by the last u
/// coordinate vectors of F_q^{rk}.
inline std::uint64_t exact_mq_search(uint32_t k, uint32_t r, uint32_t u, uint32_t l, uint32_t t,
                                     const FieldCtx& field) {
    const uint32_t n = r * k;
    if (u < 1 || u > n) throw std::invalid_argument("need 1 <= u <= rk");
    return exact_mq_search(standard_flag_space(u, n, field.q()), k, l, t, field);
}

}  // namespace ssc
