#pragma once

#include <compare>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "ssc/common.hpp"
#include "ssc/matrix.hpp"

namespace ssc {

// ============================================================================
// Subspace: a k-dimensional F_q-subspace of F_q^n in canonical RREF form
// ============================================================================

class Subspace {
public:
    /// Canonicalizes the rowspace of m; a dim-0 result is allowed only here
    /// so that intersections can report the zero space.
    static Subspace from_matrix(const MatrixGF& m) {
        RrefResult r = rref(m);
        Subspace s;
        s.basis_ = std::move(r.mat);
        s.pivots_.reserve(r.pivots.size());
        for (std::size_t c : r.pivots) s.pivots_.push_back((uint32_t)c + 1);  // 1-based
        return s;
    }

    [[nodiscard]] std::size_t dim() const { return basis_.rows; }
    [[nodiscard]] std::size_t ambient() const { return basis_.cols; }
    [[nodiscard]] uint32_t q() const { return basis_.q; }
    [[nodiscard]] const MatrixGF& basis() const { return basis_; }
    /// 1-based pivot columns, strictly increasing.
    [[nodiscard]] const std::vector<uint32_t>& pivots() const { return pivots_; }

    [[nodiscard]] bool contains(const std::vector<uint32_t>& v) const {
        if (v.size() != ambient()) throw std::invalid_argument("ambient mismatch");
        // reduce v against the RREF basis
        std::vector<uint32_t> w = v;
        const uint32_t q = basis_.q;
        for (std::size_t i = 0; i < basis_.rows; ++i) {
            const std::size_t p = pivots_[i] - 1;
            if (w[p]) {
                const uint32_t f = w[p];
                for (std::size_t j = 0; j < w.size(); ++j) {
                    uint64_t sub = (uint64_t)f * basis_.at(i, j) % q;
                    w[j] = (uint32_t)((w[j] + q - sub) % q);
                }
            }
        }
        for (uint32_t x : w)
            if (x) return false;
        return true;
    }

    friend bool operator==(const Subspace&, const Subspace&) = default;

    // Canonical order: by (ambient, dim, row-major basis entries); makes code
    // serialization deterministic. Entries compare lexicographically.
    friend bool operator<(const Subspace& x, const Subspace& y) {
        if (x.ambient() != y.ambient()) return x.ambient() < y.ambient();
        if (x.dim() != y.dim()) return x.dim() < y.dim();
        return x.basis_.a < y.basis_.a;
    }

private:
    MatrixGF basis_;
    std::vector<uint32_t> pivots_;
};

/// Canonical subspace from spanning rows; rejects the zero rowspace.
inline Subspace subspace_from_rows(const MatrixGF& m) {
    Subspace s = Subspace::from_matrix(m);
    if (s.dim() == 0) throw std::invalid_argument("zero rowspace");
    return s;
}

inline Subspace subspace_sum(const Subspace& U, const Subspace& V) {
    if (U.ambient() != V.ambient() || U.q() != V.q())
        throw std::invalid_argument("ambient mismatch");
    MatrixGF stack(U.q(), U.dim() + V.dim(), U.ambient());
    std::copy(U.basis().a.begin(), U.basis().a.end(), stack.a.begin());
    std::copy(V.basis().a.begin(), V.basis().a.end(),
              stack.a.begin() + (std::ptrdiff_t)(U.dim() * U.ambient()));
    return Subspace::from_matrix(stack);
}

/// Intersection via the Zassenhaus double-block elimination.
inline Subspace subspace_intersect(const Subspace& U, const Subspace& V) {
    if (U.ambient() != V.ambient() || U.q() != V.q())
        throw std::invalid_argument("ambient mismatch");
    const std::size_t n = U.ambient();
    MatrixGF z(U.q(), U.dim() + V.dim(), 2 * n);
    for (std::size_t i = 0; i < U.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            z.at(i, j) = U.basis().at(i, j);
            z.at(i, n + j) = U.basis().at(i, j);
        }
    for (std::size_t i = 0; i < V.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) z.at(U.dim() + i, j) = V.basis().at(i, j);
    RrefResult r = rref(z);
    // rows whose left block vanished span the intersection in the right block
    std::vector<std::vector<uint32_t>> rows;
    for (std::size_t i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (r.mat.at(i, j)) left_zero = false;
        if (!left_zero) continue;
        std::vector<uint32_t> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = r.mat.at(i, n + j);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return Subspace::from_matrix(MatrixGF(U.q(), 0, n));
    return Subspace::from_matrix(MatrixGF(U.q(), rows));
}

inline std::size_t intersection_dim(const Subspace& U, const Subspace& V) {
    return subspace_intersect(U, V).dim();
}

/// Subspace distance 2(k - dim(U cap V)) between equal-dimension subspaces.
inline std::size_t subspace_distance(const Subspace& U, const Subspace& V) {
    if (U.ambient() != V.ambient()) throw std::invalid_argument("ambient mismatch");
    if (U.dim() != V.dim()) throw std::invalid_argument("dimension mismatch");
    return 2 * (U.dim() - intersection_dim(U, V));
}

// ============================================================================
// Enumeration of Gr_q(k, n) in lexicographic order of basis encodings
// ============================================================================

namespace detail {

// One Schubert cell's RREF matrices as an odometer over free entries,
// most significant free slot first in row-major order.
struct CellOdometer {
    MatrixGF mat;
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;  // row-major order
    bool done = false;

    CellOdometer(uint32_t q, const std::vector<uint32_t>& piv1 /*1-based*/, std::size_t n) {
        const std::size_t k = piv1.size();
        mat = MatrixGF(q, k, n);
        std::vector<bool> is_piv(n + 1, false);
        for (uint32_t p : piv1) is_piv[p] = true;
        for (std::size_t i = 0; i < k; ++i) mat.at(i, piv1[i] - 1) = 1;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (j + 1 > piv1[i] && !is_piv[j + 1]) free_slots.emplace_back(i, j);
    }

    void advance() {
        for (std::size_t t = free_slots.size(); t-- > 0;) {
            auto [i, j] = free_slots[t];
            if (++mat.at(i, j) < mat.q) return;
            mat.at(i, j) = 0;
        }
        done = true;
    }
};

inline void next_combination(std::vector<uint32_t>& c, uint32_t n) {
    // strictly increasing 1-based k-subsets of [1, n]; empties c past the last
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - (uint32_t)(k - 1 - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return;
        }
    }
    c.clear();
}

}  // namespace detail

/// Streams all k-dim subspaces of F_q^n exactly once, ordered by the
/// row-major entry sequence of the canonical basis. Cells interleave, so the
/// stream merges one odometer per pivot vector.
class SubspaceStream {
public:
    SubspaceStream(std::size_t k, std::size_t n, uint32_t q) : k_(k), n_(n), q_(q) {
        if (k == 0 || k > n) throw std::invalid_argument("k out of range [1, n]");
        std::vector<uint32_t> piv(k);
        for (std::size_t i = 0; i < k; ++i) piv[i] = (uint32_t)i + 1;
        while (!piv.empty()) {
            cells_.emplace_back(q, piv, n);
            heap_.push_back(cells_.size() - 1);
            detail::next_combination(piv, (uint32_t)n);
        }
        std::make_heap(heap_.begin(), heap_.end(), Cmp{this});
    }

    [[nodiscard]] bool exhausted() const { return heap_.empty(); }

    Subspace next() {
        if (heap_.empty()) throw std::logic_error("stream exhausted");
        std::pop_heap(heap_.begin(), heap_.end(), Cmp{this});
        const std::size_t idx = heap_.back();
        Subspace out = Subspace::from_matrix(cells_[idx].mat);
        cells_[idx].advance();
        if (cells_[idx].done) {
            heap_.pop_back();
        } else {
            std::push_heap(heap_.begin(), heap_.end(), Cmp{this});
        }
        return out;
    }

private:
    struct Cmp {
        const SubspaceStream* s;
        bool operator()(std::size_t a, std::size_t b) const {
            // min-heap on the entry sequence
            return s->cells_[b].mat.a < s->cells_[a].mat.a;
        }
    };

    std::size_t k_, n_;
    uint32_t q_;
    std::vector<detail::CellOdometer> cells_;
    std::vector<std::size_t> heap_;
};

/// All of Gr_q(k, n), materialized; guarded by the desk-scale cap.
inline std::vector<Subspace> enumerate_subspaces(std::size_t k, std::size_t n, uint32_t q) {
    uint64_t count;
    try {
        count = gaussian_binomial((uint32_t)n, (uint32_t)k, q);
    } catch (const std::overflow_error&) {
        throw cap_exceeded("subspace enumeration");
    }
    if (count > desk_caps().subspace_enum) throw cap_exceeded("subspace enumeration");
    std::vector<Subspace> out;
    out.reserve(count);
    SubspaceStream s(k, n, q);
    while (!s.exhausted()) out.push_back(s.next());
    return out;
}

inline std::vector<Subspace> enumerate_subspaces(std::size_t k, std::size_t n, const FieldCtx& f) {
    return enumerate_subspaces(k, n, f.q());
}

}  // namespace ssc
