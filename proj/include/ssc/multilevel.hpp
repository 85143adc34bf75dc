#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "ssc/common.hpp"
#include "ssc/ferrers.hpp"
#include "ssc/matrix.hpp"
#include "ssc/schubert.hpp"
#include "ssc/subspace_code.hpp"

namespace ssc {

// ============================================================================
// Ferrers-diagram rank-metric codes
// ============================================================================

/// Words are rows() x cols() matrices supported on the diagram (zeros
/// off-diagram), pairwise rank distance >= delta.
struct FerrersCode {
    FerrersDiagram diagram;
    uint32_t delta = 1;
    std::vector<MatrixGF> words;

    [[nodiscard]] std::size_t size() const { return words.size(); }
    /// Exponent of the Singleton-like bound q^{nu_min}.
    [[nodiscard]] std::uint64_t bound_exponent() const { return singleton_bound(diagram, delta); }
    [[nodiscard]] bool attains_bound(uint32_t q) const {
        return (std::uint64_t)words.size() == upow_checked(q, (uint32_t)bound_exponent());
    }
};

enum class FerrersMethod { MrdRestrict, Greedy, Exhaustive };

namespace detail {

inline bool on_diagram(const FerrersDiagram& F, std::size_t i, std::size_t j) {
    return i < F.rows() && j >= F.cols() - F.rowDots[i];
}

inline std::vector<std::pair<std::size_t, std::size_t>> diagram_cells(const FerrersDiagram& F) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < F.rows(); ++i)
        for (std::size_t j = F.cols() - F.rowDots[i]; j < F.cols(); ++j) cells.emplace_back(i, j);
    return cells;
}

inline MatrixGF supported_matrix(const FerrersDiagram& F, uint32_t q,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                                 std::uint64_t enc) {
    MatrixGF m(q, F.rows(), F.cols());
    for (const auto& [i, j] : cells) {
        m.at(i, j) = (uint32_t)(enc % q);
        enc /= q;
    }
    return m;
}

// Subcode of a linearized-polynomial MRD code supported on the diagram.
// The MRD code consists of the maps x -> sum a_t x^{q^t}, t <= mm - delta,
// restricted to an mm-dimensional subspace of F_{q^kk} (kk = max dimension),
// written as kk x mm matrices; its minimum rank distance is delta. The
// diagram-supported words form an F_q-subspace found by a kernel computation.
inline std::vector<MatrixGF> mrd_restrict_words(const FerrersDiagram& F, uint32_t delta,
                                                uint32_t q) {
    const std::size_t R = F.rows(), C = F.cols();
    if (F.dots() == 0 || delta < 1) return {MatrixGF(q, R, C)};
    const bool transpose = R < C;
    const std::size_t kk = transpose ? C : R;
    const std::size_t mm = transpose ? R : C;
    if (delta > mm) return {MatrixGF(q, R, C)};  // rank can never reach delta
    const FieldCtx F_big(q, (uint32_t)kk);

    // F_q-basis of the MRD code, flattened in the original R x C orientation
    std::vector<std::vector<uint32_t>> basis;
    for (std::size_t t = 0; t + delta <= mm; ++t) {
        for (std::size_t ci = 0; ci < kk; ++ci) {
            // coefficient a_t = alpha^ci
            ExtElement a = F_big.zero();
            a.c[ci] = 1;
            MatrixGF M(q, kk, mm);
            for (std::size_t col = 0; col < mm; ++col) {
                // column = coordinates of a * (alpha^col)^{q^t}
                ExtElement xb = F_big.zero();
                xb.c[col] = 1;
                ExtElement val = F_big.mul(a, F_big.frobenius(xb, (uint32_t)t));
                for (std::size_t row = 0; row < kk; ++row) M.at(row, col) = val.c[row];
            }
            if (transpose) M = M.transposed();
            basis.push_back(M.a);
        }
    }
    if (basis.empty()) return {MatrixGF(q, R, C)};

    // kernel of the off-diagram evaluation map
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j)
            if (!on_diagram(F, i, j)) off.emplace_back(i, j);

    std::vector<std::vector<uint32_t>> kernel;
    if (off.empty()) {
        kernel.resize(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            kernel[i].assign(basis.size(), 0);
            kernel[i][i] = 1;
        }
    } else {
        MatrixGF constraints(q, off.size(), basis.size());
        for (std::size_t r = 0; r < off.size(); ++r)
            for (std::size_t b = 0; b < basis.size(); ++b)
                constraints.at(r, b) = basis[b][off[r].first * C + off[r].second];
        RrefResult rr = rref(constraints);
        std::vector<bool> is_piv(basis.size(), false);
        for (std::size_t c : rr.pivots) is_piv[c] = true;
        for (std::size_t fc = 0; fc < basis.size(); ++fc) {
            if (is_piv[fc]) continue;
            std::vector<uint32_t> v(basis.size(), 0);
            v[fc] = 1;
            for (std::size_t ri = 0; ri < rr.pivots.size(); ++ri)
                v[rr.pivots[ri]] = (uint32_t)((q - rr.mat.at(ri, fc)) % q);
            kernel.push_back(std::move(v));
        }
    }

    const std::size_t dim = kernel.size();
    std::uint64_t count;
    try {
        count = upow_checked(q, (uint32_t)dim);
    } catch (const std::overflow_error&) {
        throw cap_exceeded("ferrers code materialization");
    }
    if (count > desk_caps().materialize) throw cap_exceeded("ferrers code materialization");

    std::vector<MatrixGF> words;
    words.reserve(count);
    std::vector<uint32_t> coef(dim, 0);
    for (std::uint64_t it = 0;; ++it) {
        MatrixGF w(q, R, C);
        for (std::size_t d = 0; d < dim; ++d) {
            if (!coef[d]) continue;
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (!kernel[d][b]) continue;
                const uint64_t f = (uint64_t)coef[d] * kernel[d][b] % q;
                for (std::size_t idx = 0; idx < w.a.size(); ++idx)
                    w.a[idx] = (uint32_t)((w.a[idx] + f * basis[b][idx]) % q);
            }
        }
        words.push_back(std::move(w));
        std::size_t d = 0;
        for (; d < dim; ++d) {
            if (++coef[d] < q) break;
            coef[d] = 0;
        }
        if (d == dim) break;
    }
    std::sort(words.begin(), words.end(),
              [](const MatrixGF& a, const MatrixGF& b) { return a.a < b.a; });
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

// Exact maximum code by branch-and-bound clique search over all supported
// matrices; requires q^dots within the exhaustive sub-cap.
std::size_t max_clique(const std::vector<std::vector<bool>>& adj,
                       std::vector<std::size_t>* witness);

inline std::vector<MatrixGF> exhaustive_words(const FerrersDiagram& F, uint32_t delta,
                                              uint32_t q) {
    const auto cells = diagram_cells(F);
    std::uint64_t total;
    try {
        total = upow_checked(q, (uint32_t)cells.size());
    } catch (const std::overflow_error&) {
        throw cap_exceeded("exhaustive ferrers search");
    }
    if (total > desk_caps().ferrers_exhaustive) throw cap_exceeded("exhaustive ferrers search");
    std::vector<MatrixGF> mats;
    mats.reserve(total);
    for (std::uint64_t e = 0; e < total; ++e) mats.push_back(supported_matrix(F, q, cells, e));
    std::vector<std::vector<bool>> adj(mats.size(), std::vector<bool>(mats.size(), false));
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (rank_distance(mats[i], mats[j]) >= delta) adj[i][j] = adj[j][i] = true;
    std::vector<std::size_t> witness;
    max_clique(adj, &witness);
    std::vector<MatrixGF> words;
    words.reserve(witness.size());
    for (std::size_t i : witness) words.push_back(mats[i]);
    std::sort(words.begin(), words.end(),
              [](const MatrixGF& a, const MatrixGF& b) { return a.a < b.a; });
    return words;
}

inline std::vector<MatrixGF> greedy_words(const FerrersDiagram& F, uint32_t delta, uint32_t q,
                                          std::uint64_t seed) {
    const auto cells = diagram_cells(F);
    std::uint64_t total;
    try {
        total = upow_checked(q, (uint32_t)cells.size());
    } catch (const std::overflow_error&) {
        throw cap_exceeded("greedy ferrers search");
    }
    if (total > desk_caps().materialize) throw cap_exceeded("greedy ferrers search");
    std::vector<std::uint64_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    std::vector<MatrixGF> words;
    for (std::uint64_t e : order) {
        MatrixGF cand = supported_matrix(F, q, cells, e);
        bool ok = true;
        for (const MatrixGF& w : words)
            if (rank_distance(cand, w) < delta) { ok = false; break; }
        if (ok) words.push_back(std::move(cand));
    }
    std::sort(words.begin(), words.end(),
              [](const MatrixGF& a, const MatrixGF& b) { return a.a < b.a; });
    return words;
}

}  // namespace detail

/// Builds a Ferrers code of minimum rank distance >= delta on F.
/// mrd-restrict: diagram-supported subcode of a Gabidulin-style MRD code
/// (linear, deterministic, distance guaranteed; may undershoot q^{nu_min}).
/// exhaustive: exact maximum via clique search (q^dots <= 4096).
/// greedy: first-fit over supported matrices in encoding order (seed 0) or
/// seeded shuffled order.
inline FerrersCode construct_ferrers_code(const FerrersDiagram& F, uint32_t delta,
                                          const FieldCtx& field, FerrersMethod method,
                                          std::uint64_t seed = 0) {
    if (delta < 1) throw std::invalid_argument("delta must be positive");
    const uint32_t q = field.q();
    if (F.dots() > desk_caps().ferrers_dots &&
        (method == FerrersMethod::Greedy || method == FerrersMethod::Exhaustive))
        throw cap_exceeded("ferrers dot count");
    FerrersCode code;
    code.diagram = F;
    code.delta = delta;
    if (F.dots() == 0) {
        code.words = {MatrixGF(q, F.rows(), F.cols())};
        return code;
    }
    if (delta == 1) {
        // every supported matrix qualifies
        const auto cells = detail::diagram_cells(F);
        std::uint64_t total;
        try {
            total = upow_checked(q, (uint32_t)cells.size());
        } catch (const std::overflow_error&) {
            throw cap_exceeded("ferrers code materialization");
        }
        if (total > desk_caps().materialize) throw cap_exceeded("ferrers code materialization");
        code.words.reserve(total);
        for (std::uint64_t e = 0; e < total; ++e)
            code.words.push_back(detail::supported_matrix(F, q, cells, e));
        return code;
    }
    switch (method) {
        case FerrersMethod::MrdRestrict:
            code.words = detail::mrd_restrict_words(F, delta, q);
            break;
        case FerrersMethod::Exhaustive:
            code.words = detail::exhaustive_words(F, delta, q);
            break;
        case FerrersMethod::Greedy:
            code.words = detail::greedy_words(F, delta, q, seed);
            break;
    }
    return code;
}

/// Embeds each word into the free slots of the RREF template with pivots p:
/// subspace distances of the lift are exactly twice the rank distances.
inline SubspaceCode lift(const FerrersCode& code, const PivotVector& p, uint32_t n) {
    if (echelon_ferrers_of(p, n) != code.diagram)
        throw std::invalid_argument("diagram does not match the cell of p");
    const std::size_t k = p.size();
    const uint32_t q = code.words.empty() ? 2 : code.words.front().q;
    std::vector<bool> is_piv(n + 1, false);
    for (uint32_t c : p.p) is_piv[c] = true;
    // free columns per row, ascending; row i uses the rightmost rowDots[i]
    // entries of word row i (top-right justification)
    std::vector<std::vector<uint32_t>> free_cols(k);
    for (std::size_t i = 0; i < k; ++i)
        for (uint32_t c = p.p[i] + 1; c <= n; ++c)
            if (!is_piv[c]) free_cols[i].push_back(c - 1);
    SubspaceCode out(q, k, n);
    for (const MatrixGF& w : code.words) {
        MatrixGF m(q, k, n);
        for (std::size_t i = 0; i < k; ++i) {
            m.at(i, p.p[i] - 1) = 1;
            const std::size_t d = free_cols[i].size();
            for (std::size_t t = 0; t < d; ++t)
                m.at(i, free_cols[i][t]) = w.at(i, w.cols - d + t);
        }
        out.insert(Subspace::from_matrix(m));
    }
    return out;
}

// ============================================================================
// Multilevel assembly and the disjoint-cells size bound
// ============================================================================

/// Sum of q^{j_i - 1} over selected cells, where j_i counts the last pivot's
/// position within the last u coordinates from the right (last column has
/// j = 1). Valid for distance-2k unions only; requires pairwise disjoint
/// pivot sets, every last pivot within the last u columns, and at most
/// min(u, r) cells.
inline std::uint64_t multilevel_bound_2k(const std::vector<PivotVector>& cells, uint32_t n,
                                         uint32_t u, uint32_t q) {
    if (cells.empty()) return 0;
    const std::size_t k = cells.front().size();
    std::set<uint32_t> used;
    for (const auto& c : cells) {
        if (c.size() != k) throw std::invalid_argument("cells of unequal dimension");
        for (uint32_t p : c.p) {
            if (p > n) throw std::invalid_argument("pivot out of range");
            if (!used.insert(p).second) throw std::invalid_argument("overlapping pivot sets");
        }
    }
    const uint32_t r = n / (uint32_t)k;
    if (cells.size() > std::min(u, r)) throw std::invalid_argument("too many cells selected");
    std::uint64_t total = 0;
    for (const auto& c : cells) {
        const uint32_t last = c.p.back();
        const uint32_t j = n - last + 1;
        if (j > u) throw std::invalid_argument("last pivot outside the last u columns");
        total += upow_checked(q, j - 1);
    }
    return total;
}

/// Maximum of multilevel_bound_2k over all admissible cell selections. The
/// i-th smallest last-pivot column can be pushed down to max(ik, n-u+i), and
/// every admissible selection of last pivots c_1 < ... < c_s is exactly one
/// with c_i >= ik (i disjoint k-sets must fit below c_i).
inline std::uint64_t best_multilevel_bound_2k(uint32_t q, uint32_t k, uint32_t r, uint32_t u) {
    const uint32_t n = r * k;
    std::uint64_t total = 0;
    const uint32_t s = std::min(u, r);
    for (uint32_t i = 1; i <= s; ++i) {
        const uint32_t c = std::max(i * k, n - u + i);
        total += upow_checked(q, n - c);
    }
    return total;
}

/// Union of lifted Ferrers codes of distance k-t over the cells compatible
/// with Omega_{V_u, l}, greedily ordered by descending bound exponent (ties:
/// lexicographic pivot order). Per cell: mrd-restrict, upgraded by exhaustive
/// or greedy search when it misses q^{nu_min} and the caps allow. Cells whose
/// lifted words break the cross-cell distance are discarded whole.
inline SubspaceCode multilevel_assemble(uint32_t k, uint32_t r, uint32_t u, uint32_t l,
                                        uint32_t t, const FieldCtx& field,
                                        std::uint64_t seed = 0) {
    if (k < 1 || r < 1) throw std::invalid_argument("need k, r >= 1");
    const uint32_t n = r * k;
    if (l < 1 || l > k || l > u || u > n) throw std::invalid_argument("need 1 <= l <= min(k, u) <= u <= n");
    if (t >= k) throw std::invalid_argument("need t < k");
    const uint32_t q = field.q();
    const uint32_t delta = k - t;

    // eligible cells: at least l pivots among the last u columns
    std::vector<PivotVector> cells;
    {
        std::vector<uint32_t> piv(k);
        for (uint32_t i = 0; i < k; ++i) piv[i] = i + 1;
        while (!piv.empty()) {
            uint32_t in_last_u = 0;
            for (uint32_t p : piv)
                if (p > n - u) ++in_last_u;
            if (in_last_u >= l) cells.emplace_back(piv);
            detail::next_combination(piv, n);
        }
    }
    std::stable_sort(cells.begin(), cells.end(), [&](const PivotVector& a, const PivotVector& b) {
        const std::uint64_t ea = singleton_bound(echelon_ferrers_of(a, n), delta);
        const std::uint64_t eb = singleton_bound(echelon_ferrers_of(b, n), delta);
        if (ea != eb) return ea > eb;
        return a.p < b.p;
    });

    SubspaceCode out(q, k, n);
    std::vector<Subspace> accepted;
    for (const PivotVector& p : cells) {
        const FerrersDiagram F = echelon_ferrers_of(p, n);
        FerrersCode fc = construct_ferrers_code(F, delta, field, FerrersMethod::MrdRestrict);
        if (delta > 1 && F.dots() > 0) {
            const std::uint64_t target = upow_checked(q, (uint32_t)fc.bound_exponent());
            if ((std::uint64_t)fc.size() < target) {
                bool improved = false;
                if (F.dots() <= desk_caps().ferrers_dots) {
                    try {
                        FerrersCode ex = construct_ferrers_code(F, delta, field,
                                                                FerrersMethod::Exhaustive);
                        if (ex.size() > fc.size()) { fc = std::move(ex); }
                        improved = true;
                    } catch (const cap_exceeded&) {
                    }
                    if (!improved) {
                        try {
                            FerrersCode gr = construct_ferrers_code(F, delta, field,
                                                                    FerrersMethod::Greedy, seed);
                            if (gr.size() > fc.size()) fc = std::move(gr);
                        } catch (const cap_exceeded&) {
                        }
                    }
                }
            }
        }
        SubspaceCode lifted = lift(fc, p, n);
        bool compatible = true;
        for (const Subspace& w : lifted.words()) {
            for (const Subspace& x : accepted) {
                if (intersection_dim(w, x) > t) { compatible = false; break; }
            }
            if (!compatible) break;
        }
        if (!compatible) continue;
        for (const Subspace& w : lifted.words()) {
            accepted.push_back(w);
            out.insert(w);
        }
    }
    return out;
}

// ============================================================================
// Exact maximum clique (branch and bound with greedy coloring)
// ============================================================================

namespace detail {

inline void clique_expand(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& R,
                          std::vector<std::size_t>& P, std::vector<std::size_t>& best,
                          std::vector<std::size_t>* witness) {
    if (P.empty()) {
        if (R.size() > best.size()) {
            best = R;
            if (witness) *witness = R;
        }
        return;
    }
    // greedy coloring of P in order; color numbers bound the clique extension
    std::vector<std::size_t> color(P.size());
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t idx = 0; idx < P.size(); ++idx) {
        const std::size_t v = P[idx];
        std::size_t c = 0;
        for (;; ++c) {
            if (c == classes.size()) {
                classes.emplace_back();
                break;
            }
            bool clash = false;
            for (std::size_t w : classes[c])
                if (adj[v][w]) { clash = true; break; }
            if (!clash) break;
        }
        classes[c].push_back(v);
        color[idx] = c + 1;
    }
    for (std::size_t idx = P.size(); idx-- > 0;) {
        if (R.size() + color[idx] <= best.size()) return;
        const std::size_t v = P[idx];
        R.push_back(v);
        std::vector<std::size_t> Pnext;
        for (std::size_t j = 0; j < idx; ++j)
            if (adj[v][P[j]]) Pnext.push_back(P[j]);
        clique_expand(adj, R, Pnext, best, witness);
        R.pop_back();
    }
}

inline std::size_t max_clique(const std::vector<std::vector<bool>>& adj,
                              std::vector<std::size_t>* witness) {
    std::vector<std::size_t> P(adj.size());
    std::iota(P.begin(), P.end(), 0);
    std::vector<std::size_t> R, best;
    clique_expand(adj, R, P, best, witness);
    return best.size();
}

}  // namespace detail

}  // namespace ssc
