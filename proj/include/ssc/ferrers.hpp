#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ssc {

/// Top-right-justified dot pattern with non-increasing per-row dot counts.
/// A dot sits at (row i, column j), 0-based in a rows() x cols() grid, iff
/// j >= cols() - rowDots[i].
struct FerrersDiagram {
    std::vector<std::uint32_t> rowDots;

    FerrersDiagram() = default;
    explicit FerrersDiagram(std::vector<std::uint32_t> dots) : rowDots(std::move(dots)) {
        for (std::size_t i = 1; i < rowDots.size(); ++i)
            if (rowDots[i] > rowDots[i - 1])
                throw std::invalid_argument("row dot counts must be non-increasing");
    }

    [[nodiscard]] std::size_t rows() const { return rowDots.size(); }
    [[nodiscard]] std::uint32_t cols() const { return rowDots.empty() ? 0 : rowDots[0]; }
    [[nodiscard]] std::uint64_t dots() const {
        return std::accumulate(rowDots.begin(), rowDots.end(), std::uint64_t{0});
    }

    friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;
};

/// nu_i: dots lying neither in the first i rows nor in the rightmost
/// delta-1-i columns.
inline std::uint64_t nu(const FerrersDiagram& F, std::uint32_t delta, std::uint32_t i) {
    if (delta < 1 || i > delta - 1) throw std::invalid_argument("need 0 <= i <= delta-1");
    const std::uint32_t cut = delta - 1 - i;
    std::uint64_t total = 0;
    for (std::size_t j = i; j < F.rowDots.size(); ++j)
        total += F.rowDots[j] > cut ? F.rowDots[j] - cut : 0;
    return total;
}

inline std::uint64_t nu_min(const FerrersDiagram& F, std::uint32_t delta) {
    if (delta < 1) throw std::invalid_argument("delta must be positive");
    std::uint64_t best = nu(F, delta, 0);
    for (std::uint32_t i = 1; i < delta; ++i) best = std::min(best, nu(F, delta, i));
    return best;
}

/// Exponent of the Singleton-like size bound: any code on F with min rank
/// distance delta has at most q^{nu_min} words.
inline std::uint64_t singleton_bound(const FerrersDiagram& F, std::uint32_t delta) {
    return nu_min(F, delta);
}

/// The k x (r-1)k echelon-Ferrers diagram of the Schubert cell used by the
/// single-cell lower-bound construction: top k-l rows carry (r-1)k dots,
/// bottom l rows carry u-l dots. Requires 1 <= l <= min(k,u), u <= rk/2.
inline FerrersDiagram lower_bound_diagram(std::uint32_t k, std::uint32_t r, std::uint32_t u,
                                          std::uint32_t l) {
    if (l < 1 || l > k || l > u) throw std::invalid_argument("need 1 <= l <= min(k, u)");
    if (2 * u > r * k) throw std::invalid_argument("need u <= rk/2");
    std::vector<std::uint32_t> dots;
    dots.reserve(k);
    for (std::uint32_t i = 0; i < k - l; ++i) dots.push_back((r - 1) * k);
    for (std::uint32_t i = 0; i < l; ++i) dots.push_back(u - l);
    return FerrersDiagram(std::move(dots));
}

/// Closed form for nu_min(lower_bound_diagram(k,r,u,l), k-t): the minimum of
/// the case formulas at the indices 0, k-t-1, k-l, k+l-t-1-u, each included
/// only when its guard admits it. Requires t < k.
inline std::uint64_t closed_form_nu_min(std::uint32_t k, std::uint32_t r, std::uint32_t u,
                                        std::uint32_t l, std::uint32_t t) {
    if (t >= k) throw std::invalid_argument("need t < k");
    if (l < 1 || l > k || l > u) throw std::invalid_argument("need 1 <= l <= min(k, u)");
    if (2 * u > r * k) throw std::invalid_argument("need u <= rk/2");
    using S = std::int64_t;
    const S K = k, R = r, U = u, L = l, T1 = (S)t + 1;
    std::uint64_t best = UINT64_MAX;
    auto consider = [&](S v) { best = std::min(best, (std::uint64_t)v); };

    // index 0
    if (T1 >= L + K - U)
        consider((R * K - K - U + L) * (K - L) + K * (T1 - L - K + U));
    else
        consider((R * K - 2 * K + T1) * (K - L));
    // index k-t-1
    if (T1 >= L)
        consider(L * (U - L) + (R - 1) * K * (T1 - L));
    else
        consider(T1 * (U - L));
    // index k-l, present only when t+1 < l
    if (T1 < L) {
        if (T1 <= 2 * L - U)
            consider(0);
        else
            consider(L * (U - 2 * L + T1));
    }
    // index k+l-t-1-u, present only when t+1 < l+k-u
    if (T1 < L + K - U) {
        if (T1 <= 2 * L - U)
            consider(0);
        else
            consider(((R - 1) * K - U + L) * (U + T1 - 2 * L));
    }
    return best;
}

}  // namespace ssc
