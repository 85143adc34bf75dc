#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ssc/fields.hpp"

namespace ssc {

/// Dense matrix over the prime field F_q, row-major, entries reduced mod q.
struct MatrixGF {
    uint32_t q = 2;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<uint32_t> a;

    MatrixGF() = default;
    MatrixGF(uint32_t q_, std::size_t r, std::size_t c)
        : q(q_), rows(r), cols(c), a(r * c, 0) {}
    MatrixGF(uint32_t q_, std::vector<std::vector<uint32_t>> rws) : q(q_) {
        rows = rws.size();
        cols = rows ? rws[0].size() : 0;
        a.reserve(rows * cols);
        for (const auto& r : rws) {
            if (r.size() != cols) throw std::invalid_argument("ragged rows");
            for (uint32_t v : r) a.push_back(v % q);
        }
    }

    [[nodiscard]] uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

    [[nodiscard]] std::vector<uint32_t> row(std::size_t i) const {
        return {a.begin() + (std::ptrdiff_t)(i * cols), a.begin() + (std::ptrdiff_t)((i + 1) * cols)};
    }

    [[nodiscard]] MatrixGF transposed() const {
        MatrixGF t(q, cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const MatrixGF&, const MatrixGF&) = default;
};

struct RrefResult {
    MatrixGF mat;                      // RREF, zero rows dropped
    std::vector<std::size_t> pivots;   // 0-based pivot columns, strictly increasing
    std::size_t rank = 0;
};

/// Reduced row echelon form; returns the canonical form with zero rows removed.
inline RrefResult rref(const MatrixGF& m) {
    MatrixGF w = m;
    const uint32_t q = w.q;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
        std::size_t sel = r;
        while (sel < w.rows && w.at(sel, c) == 0) ++sel;
        if (sel == w.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(sel, j));
        const uint32_t inv = detail::scalar_inv(w.at(r, c), q);
        for (std::size_t j = c; j < w.cols; ++j)
            w.at(r, j) = (uint32_t)((uint64_t)w.at(r, j) * inv % q);
        for (std::size_t i = 0; i < w.rows; ++i) {
            if (i == r || w.at(i, c) == 0) continue;
            const uint32_t f = w.at(i, c);
            for (std::size_t j = c; j < w.cols; ++j) {
                uint64_t sub = (uint64_t)f * w.at(r, j) % q;
                w.at(i, j) = (uint32_t)((w.at(i, j) + q - sub) % q);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    RrefResult res;
    res.rank = r;
    res.pivots = std::move(pivots);
    res.mat = MatrixGF(q, r, w.cols);
    std::copy(w.a.begin(), w.a.begin() + (std::ptrdiff_t)(r * w.cols), res.mat.a.begin());
    return res;
}

[[nodiscard]] inline std::size_t rank(const MatrixGF& m) { return rref(m).rank; }

inline MatrixGF mat_sub(const MatrixGF& A, const MatrixGF& B) {
    if (A.q != B.q || A.rows != B.rows || A.cols != B.cols)
        throw std::invalid_argument("shape mismatch");
    MatrixGF d(A.q, A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i)
        d.a[i] = (uint32_t)((A.a[i] + (uint64_t)A.q - B.a[i]) % A.q);
    return d;
}

/// Rank of the entry-wise difference: the rank metric on equal-shape matrices.
inline std::size_t rank_distance(const MatrixGF& A, const MatrixGF& B) {
    return rank(mat_sub(A, B));
}

/// Row vector times matrix over F_q.
inline std::vector<uint32_t> vec_mat_mul(const std::vector<uint32_t>& v, const MatrixGF& M) {
    if (v.size() != M.rows) throw std::invalid_argument("dimension mismatch");
    std::vector<uint32_t> out(M.cols, 0);
    for (std::size_t i = 0; i < M.rows; ++i) {
        if (!v[i]) continue;
        for (std::size_t j = 0; j < M.cols; ++j)
            out[j] = (uint32_t)((out[j] + (uint64_t)v[i] * M.at(i, j)) % M.q);
    }
    return out;
}

inline MatrixGF mat_mul(const MatrixGF& A, const MatrixGF& B) {
    if (A.q != B.q || A.cols != B.rows) throw std::invalid_argument("shape mismatch");
    MatrixGF C(A.q, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t t = 0; t < A.cols; ++t) {
            const uint32_t v = A.at(i, t);
            if (!v) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = (uint32_t)((C.at(i, j) + (uint64_t)v * B.at(t, j)) % A.q);
        }
    return C;
}

inline MatrixGF identity_matrix(uint32_t q, std::size_t n) {
    MatrixGF I(q, n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

inline bool is_invertible(const MatrixGF& m) {
    return m.rows == m.cols && rank(m) == m.rows;
}

}  // namespace ssc
