#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssc/subspace.hpp"

namespace ssc {

/// A set of distinct k-dim subspaces of F_q^n, kept sorted in canonical
/// order, with optional per-codeword provenance labels.
class SubspaceCode {
public:
    SubspaceCode(uint32_t q, std::size_t dim, std::size_t ambient)
        : q_(q), dim_(dim), ambient_(ambient) {}

    [[nodiscard]] uint32_t q() const { return q_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t ambient() const { return ambient_; }
    [[nodiscard]] std::size_t size() const { return words_.size(); }
    [[nodiscard]] const std::vector<Subspace>& words() const { return words_; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    /// Codewords dropped as duplicates of earlier insertions.
    [[nodiscard]] std::size_t duplicates_dropped() const { return dups_; }

    /// Inserts keeping canonical order; duplicate codewords are counted and
    /// dropped. Returns false on a duplicate.
    bool insert(Subspace w, std::string label = {}) {
        if (w.ambient() != ambient_ || w.q() != q_)
            throw std::invalid_argument("codeword ambient mismatch");
        if (w.dim() != dim_) throw std::invalid_argument("codeword dimension mismatch");
        auto it = std::lower_bound(words_.begin(), words_.end(), w);
        if (it != words_.end() && *it == w) {
            ++dups_;
            return false;
        }
        labels_.insert(labels_.begin() + (it - words_.begin()), std::move(label));
        words_.insert(it, std::move(w));
        return true;
    }

    [[nodiscard]] bool contains(const Subspace& w) const {
        auto it = std::lower_bound(words_.begin(), words_.end(), w);
        return it != words_.end() && *it == w;
    }

    friend bool operator==(const SubspaceCode& a, const SubspaceCode& b) {
        return a.q_ == b.q_ && a.dim_ == b.dim_ && a.ambient_ == b.ambient_ &&
               a.words_ == b.words_;
    }

private:
    uint32_t q_;
    std::size_t dim_;
    std::size_t ambient_;
    std::vector<Subspace> words_;
    std::vector<std::string> labels_;
    std::size_t dups_ = 0;
};

/// Minimum pairwise subspace distance; 2k for codes with fewer than two
/// codewords, by convention.
inline std::size_t min_distance(const SubspaceCode& c) {
    if (c.size() < 2) return 2 * c.dim();
    std::size_t best = SIZE_MAX;
    const auto& w = c.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            best = std::min(best, subspace_distance(w[i], w[j]));
    return best;
}

}  // namespace ssc
