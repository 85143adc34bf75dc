#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssc {

// Desk-scale enumeration caps. SSC_MAX_ENUM (a positive integer) replaces the
// element-count caps; the structural Ferrers caps are fixed.
struct EnumCaps {
    std::uint64_t field_elements = 1u << 16;      // exhaustive field scans
    std::uint64_t subspace_enum = 10'000'000;     // Grassmannian / cell enumeration
    std::uint64_t clique_vertices = 100'000;      // exact search vertex count
    std::uint64_t materialize = 10'000'000;       // codeword materialization
    std::uint32_t ferrers_dots = 20;              // exhaustive/greedy dot cap
    std::uint64_t ferrers_exhaustive = 4096;      // q^dots cap for exact clique
};

inline const EnumCaps& desk_caps() {
    static const EnumCaps caps = [] {
        EnumCaps c;
        if (const char* env = std::getenv("SSC_MAX_ENUM")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) {
                c.field_elements = v;
                c.subspace_enum = v;
                c.clique_vertices = v;
                c.materialize = v;
            }
        }
        return c;
    }();
    return caps;
}

class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error("cap exceeded: " + what) {}
};

// b^e with overflow detection.
inline std::uint64_t upow_checked(std::uint64_t b, std::uint32_t e) {
    unsigned __int128 r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        r *= b;
        if (r >> 64) throw std::overflow_error("power overflows 64 bits");
    }
    return (std::uint64_t)r;
}

// Gaussian binomial (n choose k)_q, exact, via the q-Pascal recurrence
// (i,j)_q = (i-1,j-1)_q + q^j (i-1,j)_q.
inline std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint64_t q) {
    if (k > n) return 0;
    std::vector<unsigned __int128> row(n + 1, 0);
    std::vector<unsigned __int128> qpow(n + 1, 1);
    const unsigned __int128 lim = (unsigned __int128)1 << 64;
    for (std::uint32_t j = 1; j <= n; ++j) {
        qpow[j] = qpow[j - 1] * q;
        if (qpow[j] >= lim) qpow[j] = lim;  // saturate; only matters if the term is used
    }
    row[0] = 1;
    for (std::uint32_t i = 1; i <= n; ++i) {
        for (std::uint32_t j = std::min(i, n); j >= 1; --j) {
            if (row[j] != 0 && qpow[j] >= lim) throw std::overflow_error("gaussian binomial overflows 64 bits");
            row[j] = row[j - 1] + qpow[j] * row[j];
            if (row[j] >> 64) throw std::overflow_error("gaussian binomial overflows 64 bits");
        }
    }
    return (std::uint64_t)row[k];
}

}  // namespace ssc
