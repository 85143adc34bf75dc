#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ssc/common.hpp"

namespace ssc {

using std::uint32_t;
using std::uint64_t;

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// Element of F_{q^k}: coefficients in the power basis {1, a, ..., a^{k-1}},
/// constant term first. Length always equals the context's k.
struct ExtElement {
    std::vector<uint32_t> c;

    friend bool operator==(const ExtElement&, const ExtElement&) = default;
    // Encoding order: compare from the highest-degree coefficient down, which
    // equals base-q integer order with the constant term least significant.
    friend bool operator<(const ExtElement& a, const ExtElement& b) {
        for (std::size_t i = a.c.size(); i-- > 0;)
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        return false;
    }
};

namespace detail {

// Dense little-endian polynomials over F_q, trimmed (no trailing zeros).
using Poly = std::vector<uint32_t>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, uint32_t q) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (uint32_t)((out[i + j] + (uint64_t)a[i] * b[j]) % q);
    }
    poly_trim(out);
    return out;
}

// a mod m, m monic.
inline Poly poly_mod(Poly a, const Poly& m, uint32_t q) {
    const std::size_t dm = m.size() - 1;
    poly_trim(a);
    while (a.size() > dm) {
        const uint64_t c = a.back();
        if (c) {
            const std::size_t shift = a.size() - 1 - dm;
            for (std::size_t i = 0; i <= dm; ++i) {
                uint64_t v = a[shift + i] + (uint64_t)(q - 1) * c % q * m[i];
                a[shift + i] = (uint32_t)(v % q);
            }
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

inline Poly poly_add(const Poly& a, const Poly& b, uint32_t q) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        uint64_t v = (i < a.size() ? a[i] : 0) + (uint64_t)(i < b.size() ? b[i] : 0);
        out[i] = (uint32_t)(v % q);
    }
    poly_trim(out);
    return out;
}

inline uint32_t scalar_inv(uint32_t x, uint32_t q) {
    // extended Euclid on (x, q); q prime, x != 0 mod q
    std::int64_t t = 0, nt = 1, r = q, nr = x % q;
    while (nr != 0) {
        std::int64_t f = r / nr;
        t -= f * nt; std::swap(t, nt);
        r -= f * nr; std::swap(r, nr);
    }
    if (t < 0) t += q;
    return (uint32_t)t;
}

inline Poly poly_scale(Poly a, uint32_t s, uint32_t q) {
    for (auto& x : a) x = (uint32_t)((uint64_t)x * s % q);
    poly_trim(a);
    return a;
}

// quotient-free division step support: a - b * x^shift * c
inline void poly_submul(Poly& a, const Poly& b, std::size_t shift, uint32_t c, uint32_t q) {
    if (!c) return;
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        uint64_t sub = (uint64_t)b[i] * c % q;
        a[i + shift] = (uint32_t)((a[i + shift] + q - sub) % q);
    }
    poly_trim(a);
}

inline Poly poly_divmod(Poly& a, const Poly& b, uint32_t q) {
    // returns quotient, leaves remainder in a; b nonzero
    Poly quo;
    const uint32_t linv = scalar_inv(b.back(), q);
    if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const uint32_t c = (uint32_t)((uint64_t)a.back() * linv % q);
        quo[shift] = c;
        poly_submul(a, b, shift, c, q);  // cancels the leading term and trims
    }
    poly_trim(quo);
    return quo;
}

inline Poly poly_gcd(Poly a, Poly b, uint32_t q) {
    poly_trim(a); poly_trim(b);
    while (!b.empty()) {
        poly_divmod(a, b, q);
        std::swap(a, b);
    }
    if (!a.empty()) a = poly_scale(a, scalar_inv(a.back(), q), q);
    return a;
}

// x^e mod m by repeated squaring, e a (possibly huge) power expressed as q^reps.
inline Poly poly_powmod(const Poly& base, uint64_t e, const Poly& m, uint32_t q) {
    Poly r{1};
    Poly b = poly_mod(base, m, q);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, b, q), m, q);
        e >>= 1;
        if (e) b = poly_mod(poly_mul(b, b, q), m, q);
    }
    return r;
}

inline bool poly_is_one(const Poly& p) { return p.size() == 1 && p[0] == 1; }

// Irreducibility over F_q. Trial division when the divisor space is desk-scale,
// otherwise the powering test (x^{q^d} = x mod f, gcd(x^{q^{d/p}} - x, f) = 1).
inline bool poly_irreducible(const Poly& f, uint32_t q) {
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    bool desk = true;
    {
        unsigned __int128 cnt = 1;
        for (std::size_t i = 0; i < (d / 2); ++i) {
            cnt *= q;
            if (cnt > (1u << 16)) { desk = false; break; }
        }
    }
    if (desk) {
        // enumerate monic divisors of degree 1..d/2
        for (std::size_t fd = 1; fd <= d / 2; ++fd) {
            Poly g(fd + 1, 0);
            g[fd] = 1;
            uint64_t total = 1;
            for (std::size_t i = 0; i < fd; ++i) total *= q;
            for (uint64_t enc = 0; enc < total; ++enc) {
                uint64_t e = enc;
                for (std::size_t i = 0; i < fd; ++i) { g[i] = (uint32_t)(e % q); e /= q; }
                Poly rem = f;
                Poly gg = g; poly_trim(gg);
                poly_divmod(rem, gg, q);
                if (rem.empty()) return false;
            }
        }
        return true;
    }
    // powering test
    const Poly x{0, 1};
    Poly xp = x;  // x^{q^i} mod f
    for (std::size_t i = 0; i < d; ++i) xp = poly_powmod(xp, q, f, q);
    if (xp != poly_mod(x, f, q)) return false;
    std::size_t dd = d;
    for (std::size_t p = 2; p <= dd; ++p) {
        if (dd % p) continue;
        while (dd % p == 0) dd /= p;
        Poly y = x;
        for (std::size_t i = 0; i < d / p; ++i) y = poly_powmod(y, q, f, q);
        Poly diff = poly_add(y, poly_scale(poly_mod(x, f, q), q - 1, q), q);
        if (!poly_is_one(poly_gcd(diff, f, q)) && !diff.empty()) return false;
        if (diff.empty()) return false;  // x^{q^{d/p}} = x already at a proper divisor
    }
    return true;
}

}  // namespace detail

// ============================================================================
// FieldCtx: F_{q^k} with a fixed monic irreducible modulus
// ============================================================================

class FieldCtx {
public:
    FieldCtx(uint32_t q, uint32_t k) : q_(q), k_(k) {
        validate_qk();
        modulus_ = smallest_modulus();
    }

    FieldCtx(uint32_t q, uint32_t k, std::vector<uint32_t> modulus)
        : q_(q), k_(k), modulus_(std::move(modulus)) {
        validate_qk();
        if (modulus_.size() != k_ + 1 || modulus_.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree k");
        for (uint32_t c : modulus_)
            if (c >= q_) throw std::invalid_argument("modulus coefficient out of range");
        if (k_ > 1 && !detail::poly_irreducible(modulus_, q_))
            throw std::invalid_argument("modulus is reducible");
    }

    [[nodiscard]] uint32_t q() const { return q_; }
    [[nodiscard]] uint32_t k() const { return k_; }
    [[nodiscard]] const std::vector<uint32_t>& modulus() const { return modulus_; }

    friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

    // ---- elements ----

    [[nodiscard]] ExtElement zero() const { return ExtElement{std::vector<uint32_t>(k_, 0)}; }
    [[nodiscard]] ExtElement one() const {
        ExtElement e = zero();
        e.c[0] = 1;
        return e;
    }
    [[nodiscard]] bool is_zero(const ExtElement& x) const {
        check(x);
        for (uint32_t v : x.c)
            if (v) return false;
        return true;
    }

    [[nodiscard]] ExtElement from_coeffs(std::vector<uint32_t> c) const {
        if (c.size() > k_) throw std::invalid_argument("too many coefficients");
        c.resize(k_, 0);
        for (uint32_t v : c)
            if (v >= q_) throw std::invalid_argument("coefficient out of range");
        return ExtElement{std::move(c)};
    }

    [[nodiscard]] ExtElement from_encoding(uint64_t e) const {
        ExtElement x = zero();
        for (uint32_t i = 0; i < k_; ++i) { x.c[i] = (uint32_t)(e % q_); e /= q_; }
        if (e) throw std::invalid_argument("encoding out of range");
        return x;
    }

    [[nodiscard]] uint64_t encoding(const ExtElement& x) const {
        check(x);
        unsigned __int128 v = 0;
        for (std::size_t i = k_; i-- > 0;) {
            v = v * q_ + x.c[i];
            if (v >> 64) throw std::overflow_error("encoding overflows 64 bits");
        }
        return (uint64_t)v;
    }

    /// q^k as a checked 64-bit count.
    [[nodiscard]] uint64_t element_count() const { return upow_checked(q_, k_); }

    // ---- arithmetic ----

    [[nodiscard]] ExtElement add(const ExtElement& a, const ExtElement& b) const {
        check(a); check(b);
        ExtElement r = a;
        for (uint32_t i = 0; i < k_; ++i) r.c[i] = (uint32_t)(((uint64_t)r.c[i] + b.c[i]) % q_);
        return r;
    }

    [[nodiscard]] ExtElement sub(const ExtElement& a, const ExtElement& b) const {
        check(a); check(b);
        ExtElement r = a;
        for (uint32_t i = 0; i < k_; ++i) r.c[i] = (uint32_t)(((uint64_t)r.c[i] + q_ - b.c[i]) % q_);
        return r;
    }

    [[nodiscard]] ExtElement neg(const ExtElement& a) const { return sub(zero(), a); }

    [[nodiscard]] ExtElement scalar_mul(uint32_t s, const ExtElement& a) const {
        check(a);
        ExtElement r = a;
        for (uint32_t i = 0; i < k_; ++i) r.c[i] = (uint32_t)((uint64_t)r.c[i] * (s % q_) % q_);
        return r;
    }

    [[nodiscard]] ExtElement mul(const ExtElement& a, const ExtElement& b) const {
        check(a); check(b);
        detail::Poly pa(a.c.begin(), a.c.end());
        detail::Poly pb(b.c.begin(), b.c.end());
        detail::poly_trim(pa); detail::poly_trim(pb);
        return from_poly(detail::poly_mod(detail::poly_mul(pa, pb, q_), modulus_, q_));
    }

    [[nodiscard]] ExtElement inv(const ExtElement& a) const {
        if (is_zero(a)) throw std::domain_error("inversion of zero");
        // extended Euclid over F_q[x] against the modulus
        detail::Poly r0 = modulus_, r1(a.c.begin(), a.c.end());
        detail::poly_trim(r1);
        detail::Poly t0{}, t1{1};
        while (!r1.empty()) {
            detail::Poly quo = detail::poly_divmod(r0, r1, q_);
            std::swap(r0, r1);  // r0 holds the remainder after divmod
            detail::Poly t2 = detail::poly_add(
                t0, detail::poly_scale(detail::poly_mul(quo, t1, q_), q_ - 1, q_), q_);
            t0 = t1;
            t1 = t2;
        }
        // r0 = gcd (a unit since modulus is irreducible)
        const uint32_t s = detail::scalar_inv(r0.empty() ? 1 : r0[0], q_);
        return from_poly(detail::poly_mod(detail::poly_scale(t0, s, q_), modulus_, q_));
    }

    [[nodiscard]] ExtElement pow(const ExtElement& a, uint64_t e) const {
        check(a);
        ExtElement r = one(), b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            e >>= 1;
            if (e) b = mul(b, b);
        }
        return r;
    }

    /// x^{q^i}; an F_q-linear field automorphism, identity at i = k.
    [[nodiscard]] ExtElement frobenius(const ExtElement& x, uint32_t i) const {
        check(x);
        ExtElement r = x;
        for (uint32_t t = 0; t < i % k_; ++t) r = pow(r, q_);
        return r;
    }

    /// Field norm down to F_q: the product of all Frobenius conjugates.
    [[nodiscard]] ExtElement norm(const ExtElement& x) const {
        check(x);
        ExtElement acc = x, conj = x;
        for (uint32_t i = 1; i < k_; ++i) {
            conj = pow(conj, q_);
            acc = mul(acc, conj);
        }
        return acc;
    }

    // ---- exhaustive operations (desk caps apply) ----

    [[nodiscard]] std::vector<ExtElement> all_elements() const {
        const uint64_t n = checked_enum_count("field enumeration");
        std::vector<ExtElement> out;
        out.reserve(n);
        for (uint64_t e = 0; e < n; ++e) out.push_back(from_encoding(e));
        return out;
    }

    /// The kernel of the norm map; cardinality (q^k - 1)/(q - 1).
    [[nodiscard]] std::vector<ExtElement> norm_one_elements() const {
        const uint64_t n = checked_enum_count("norm-one enumeration");
        std::vector<ExtElement> out;
        const ExtElement id = one();
        for (uint64_t e = 1; e < n; ++e) {
            ExtElement x = from_encoding(e);
            if (norm(x) == id) out.push_back(std::move(x));
        }
        return out;
    }

    /// Basis of the root space of x^q - a x in F_{q^k}; dimension 0 or 1.
    /// Solved as the nullspace of the F_q-linear map x -> x^q - a x.
    [[nodiscard]] std::vector<ExtElement> linearized_kernel(const ExtElement& a) const {
        check(a);
        // column j = coefficients of basis_j^q - a * basis_j
        std::vector<std::vector<uint32_t>> m(k_, std::vector<uint32_t>(k_, 0));
        for (uint32_t j = 0; j < k_; ++j) {
            ExtElement b = zero();
            b.c[j] = 1;
            const ExtElement img = sub(frobenius(b, 1), mul(a, b));
            for (uint32_t i = 0; i < k_; ++i) m[i][j] = img.c[i];
        }
        // row-reduce; free columns span the kernel
        std::vector<uint32_t> pivot_of_col(k_, k_);
        uint32_t pr = 0;
        for (uint32_t c = 0; c < k_ && pr < k_; ++c) {
            uint32_t piv = k_;
            for (uint32_t i = pr; i < k_; ++i)
                if (m[i][c]) { piv = i; break; }
            if (piv == k_) continue;
            std::swap(m[pr], m[piv]);
            const uint32_t s = detail::scalar_inv(m[pr][c], q_);
            for (uint32_t j = 0; j < k_; ++j)
                m[pr][j] = (uint32_t)((uint64_t)m[pr][j] * s % q_);
            for (uint32_t i = 0; i < k_; ++i) {
                if (i == pr || !m[i][c]) continue;
                const uint32_t f = m[i][c];
                for (uint32_t j = 0; j < k_; ++j)
                    m[i][j] = (uint32_t)((m[i][j] + (uint64_t)(q_ - 1) * f % q_ * m[pr][j]) % q_);
            }
            pivot_of_col[c] = pr;
            ++pr;
        }
        std::vector<ExtElement> kernel;
        for (uint32_t c = 0; c < k_; ++c) {
            if (pivot_of_col[c] != k_) continue;
            ExtElement v = zero();
            v.c[c] = 1;
            for (uint32_t cc = 0; cc < k_; ++cc)
                if (pivot_of_col[cc] != k_) v.c[cc] = (q_ - m[pivot_of_col[cc]][c]) % q_;
            kernel.push_back(std::move(v));
        }
        return kernel;
    }

    /// Some b != 0 with b^{1-q} = a; requires norm(a) = 1 (Hilbert 90).
    [[nodiscard]] ExtElement hilbert90_root(const ExtElement& a) const {
        check(a);
        if (norm(a) != one()) throw std::domain_error("hilbert90_root requires norm(a) = 1");
        const uint64_t n = checked_enum_count("hilbert 90 scan");
        for (uint64_t e = 1; e < n; ++e) {
            ExtElement b = from_encoding(e);
            if (mul(b, inv(pow(b, q_))) == a) return b;
        }
        throw std::logic_error("hilbert 90 witness not found");  // unreachable
    }

private:
    void validate_qk() const {
        if (!is_prime_u64(q_)) throw std::invalid_argument("q must be prime");
        if (k_ < 1) throw std::invalid_argument("k must be positive");
        unsigned __int128 n = 1;
        for (uint32_t i = 0; i < k_; ++i) {
            n *= q_;
            if (n > (unsigned __int128)UINT64_MAX)
                throw std::invalid_argument("field order exceeds 64 bits");
        }
    }

    void check(const ExtElement& x) const {
        if (x.c.size() != k_) throw std::invalid_argument("element does not belong to this field");
    }

    [[nodiscard]] ExtElement from_poly(const detail::Poly& p) const {
        ExtElement e = zero();
        for (std::size_t i = 0; i < p.size(); ++i) e.c[i] = p[i];
        return e;
    }

    uint64_t checked_enum_count(const char* what) const {
        uint64_t n;
        try {
            n = element_count();
        } catch (const std::overflow_error&) {
            throw cap_exceeded(std::string(what) + " (field too large)");
        }
        if (n > desk_caps().field_elements) throw cap_exceeded(what);
        return n;
    }

    [[nodiscard]] std::vector<uint32_t> smallest_modulus() const {
        if (k_ == 1) return {0, 1};  // x
        // scan by increasing base-q encoding among monic degree-k polynomials
        detail::Poly f(k_ + 1, 0);
        f[k_] = 1;
        // odometer over the k low coefficients, constant term least significant
        while (true) {
            detail::Poly g = f;
            detail::poly_trim(g);
            if (g.size() == k_ + 1 && detail::poly_irreducible(g, q_)) return g;
            uint32_t i = 0;
            for (; i < k_; ++i) {
                if (++f[i] < q_) break;
                f[i] = 0;
            }
            if (i == k_) throw std::logic_error("no irreducible polynomial found");  // unreachable
        }
    }

    uint32_t q_;
    uint32_t k_;
    std::vector<uint32_t> modulus_;
};

/// Field with the smallest monic irreducible modulus (by base-q encoding).
inline FieldCtx make_field(uint32_t q, uint32_t k) { return FieldCtx(q, k); }

}  // namespace ssc
