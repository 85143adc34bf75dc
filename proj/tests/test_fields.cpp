#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ssc/fields.hpp"

using namespace ssc;

TEST_CASE("smallest irreducible modulus is chosen deterministically") {
    CHECK(make_field(2, 2).modulus() == std::vector<uint32_t>{1, 1, 1});       // x^2+x+1
    CHECK(make_field(2, 3).modulus() == std::vector<uint32_t>{1, 1, 0, 1});    // x^3+x+1
    CHECK(make_field(2, 4).modulus() == std::vector<uint32_t>{1, 1, 0, 0, 1}); // x^4+x+1
    CHECK(make_field(3, 2).modulus() == std::vector<uint32_t>{1, 0, 1});       // x^2+1
    CHECK(make_field(2, 1).modulus() == std::vector<uint32_t>{0, 1});          // x
    CHECK(make_field(5, 1).modulus() == std::vector<uint32_t>{0, 1});
}

TEST_CASE("non-prime characteristic and bad moduli are rejected") {
    CHECK_THROWS_AS(FieldCtx(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(1, 2), std::invalid_argument);
    // reducible modulus
    CHECK_THROWS_AS(FieldCtx(2, 3, {1, 0, 0, 1}), std::invalid_argument);  // x^3+1
    CHECK_THROWS_AS(FieldCtx(2, 2, {1, 0, 1}), std::invalid_argument);     // x^2+1 = (x+1)^2
    // non-monic or wrong degree
    CHECK_THROWS_AS(FieldCtx(3, 2, {1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(2, 3, {1, 1, 1}), std::invalid_argument);
    // coefficient out of range
    CHECK_THROWS_AS(FieldCtx(2, 2, {2, 1, 1}), std::invalid_argument);
    // valid explicit modulus accepted
    CHECK_NOTHROW(FieldCtx(2, 3, {1, 1, 0, 1}));
    CHECK_NOTHROW(FieldCtx(3, 2, {2, 2, 1}));  // x^2+2x+2 is irreducible over F_3
}

TEST_CASE("polynomial irreducibility test agrees with hand-checked cases") {
    using detail::poly_irreducible;
    CHECK(poly_irreducible({1, 1, 1}, 2));        // x^2+x+1
    CHECK_FALSE(poly_irreducible({1, 0, 1}, 2));  // (x+1)^2
    CHECK(poly_irreducible({1, 0, 1}, 3));        // x^2+1 over F_3
    CHECK_FALSE(poly_irreducible({1, 0, 1, 0, 1}, 2));  // (x^2+x+1)^2
    CHECK(poly_irreducible({1, 1, 0, 0, 1}, 2));        // x^4+x+1
    CHECK_FALSE(poly_irreducible({0, 1, 1}, 2));        // x(x+1)
    CHECK(poly_irreducible({1, 1}, 2));                 // linear is irreducible
}

TEST_CASE("quartic field arithmetic in characteristic 2") {
    FieldCtx F = make_field(2, 2);  // F_4, generator w with w^2 = w+1
    const ExtElement w = F.from_encoding(2);
    CHECK(F.encoding(F.mul(w, w)) == 3);                  // w^2 = w+1
    CHECK(F.is_zero(F.add(w, w)));                        // characteristic 2
    CHECK(F.encoding(F.inv(w)) == 3);                     // w * (w+1) = 1
    CHECK(F.encoding(F.mul(w, F.from_encoding(3))) == 1); // w * w^2 = w^3 = 1
    CHECK(F.one() == F.pow(w, 3));
}

TEST_CASE("octic field arithmetic in characteristic 2") {
    FieldCtx F = make_field(2, 3);  // F_8, w^3 = w+1
    const ExtElement w = F.from_encoding(2);
    CHECK(F.encoding(F.pow(w, 3)) == 3);   // w^3 = w+1
    CHECK(F.encoding(F.inv(w)) == 5);      // w^-1 = w^2+1
    CHECK(F.one() == F.pow(w, 7));         // multiplicative order 7
    for (uint64_t e = 1; e < 8; ++e) {
        const ExtElement a = F.from_encoding(e);
        CHECK(F.one() == F.mul(a, F.inv(a)));
    }
}

TEST_CASE("inverses and encoding round-trips across several fields") {
    for (auto [q, k] : std::vector<std::pair<uint32_t, uint32_t>>{
             {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
        FieldCtx F(q, k);
        const uint64_t count = F.element_count();
        for (uint64_t e = 0; e < count; ++e) {
            const ExtElement a = F.from_encoding(e);
            CHECK(F.encoding(a) == e);
            if (e == 0) continue;
            CHECK(F.one() == F.mul(a, F.inv(a)));
            CHECK(F.one() == F.pow(a, count - 1));  // Lagrange in the unit group
        }
    }
}

TEST_CASE("element ordering matches encoding order") {
    FieldCtx F = make_field(3, 2);
    std::vector<ExtElement> all = F.all_elements();
    REQUIRE(all.size() == 9);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (uint64_t e = 0; e < 9; ++e) CHECK(F.encoding(all[e]) == e);
}

TEST_CASE("frobenius is a field automorphism fixing the prime field") {
    for (auto [q, k] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 3}, {3, 2}, {2, 4}}) {
        FieldCtx F(q, k);
        for (uint64_t ea = 0; ea < F.element_count(); ++ea) {
            const ExtElement a = F.from_encoding(ea);
            // identity power and full cycle
            CHECK(F.frobenius(a, 0) == a);
            CHECK(F.frobenius(a, k) == a);
            // q-th power map
            CHECK(F.frobenius(a, 1) == F.pow(a, q));
            for (uint64_t eb = 0; eb < F.element_count(); ++eb) {
                const ExtElement b = F.from_encoding(eb);
                CHECK(F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
                CHECK(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
            }
        }
        // prime-field elements are fixed
        for (uint32_t c = 0; c < q; ++c) {
            ExtElement a = F.zero();
            a.c[0] = c;
            CHECK(F.frobenius(a, 1) == a);
        }
    }
}

TEST_CASE("norm multiplies conjugates and lands in the prime field") {
    for (auto [q, k] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
        FieldCtx F(q, k);
        for (uint64_t e = 1; e < F.element_count(); ++e) {
            const ExtElement a = F.from_encoding(e);
            ExtElement prod = F.one();
            for (uint32_t i = 0; i < k; ++i) prod = F.mul(prod, F.frobenius(a, i));
            CHECK(F.norm(a) == prod);
            // value lies in the prime field
            const ExtElement nv = F.norm(a);
            for (uint32_t i = 1; i < k; ++i) CHECK(nv.c[i] == 0);
            CHECK_FALSE(F.is_zero(nv));
        }
        CHECK(F.is_zero(F.norm(F.zero())));
    }
}

TEST_CASE("norm-one element counts match the unit-group index") {
    CHECK(make_field(2, 2).norm_one_elements().size() == 3);
    CHECK(make_field(2, 3).norm_one_elements().size() == 7);
    CHECK(make_field(3, 2).norm_one_elements().size() == 4);
    CHECK(make_field(2, 4).norm_one_elements().size() == 15);
    CHECK(make_field(5, 2).norm_one_elements().size() == 6);
    // the small quartic case explicitly: all three nonzero cube roots of 1
    FieldCtx F4 = make_field(2, 2);
    std::vector<uint64_t> encs;
    for (const ExtElement& a : F4.norm_one_elements()) encs.push_back(F4.encoding(a));
    CHECK(encs == std::vector<uint64_t>{1, 2, 3});
}

TEST_CASE("norm-one elements are exactly the (q-1)-st Frobenius quotients") {
    for (auto [q, k] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 3}, {3, 2}, {2, 4}}) {
        FieldCtx F(q, k);
        for (const ExtElement& a : F.norm_one_elements()) {
            const ExtElement b = F.hilbert90_root(a);
            REQUIRE_FALSE(F.is_zero(b));
            // b / b^q = a
            CHECK(F.mul(b, F.inv(F.frobenius(b, 1))) == a);
        }
        // a of norm != 1 has no such root and hilbert90_root refuses it
        for (uint64_t e = 1; e < F.element_count(); ++e) {
            const ExtElement a = F.from_encoding(e);
            if (F.norm(a) == F.one()) continue;
            CHECK_THROWS_AS(F.hilbert90_root(a), std::domain_error);
        }
    }
}

TEST_CASE("semilinear kernel is one-dimensional exactly on norm-one scalars") {
    for (auto [q, k] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 3}, {3, 2}, {2, 4}}) {
        FieldCtx F(q, k);
        for (uint64_t e = 1; e < F.element_count(); ++e) {
            const ExtElement a = F.from_encoding(e);
            const auto kernel = F.linearized_kernel(a);
            if (F.norm(a) == F.one()) {
                REQUIRE(kernel.size() == 1);
                // x^q = a x for the returned generator
                CHECK(F.frobenius(kernel[0], 1) == F.mul(a, kernel[0]));
            } else {
                CHECK(kernel.empty());
            }
        }
    }
}

TEST_CASE("large-degree modulus search uses the powering test") {
    // q^(k/2) exceeds the trial-division threshold here
    FieldCtx F(3, 23);
    REQUIRE(F.modulus().size() == 24);
    const ExtElement alpha = F.from_encoding(3);  // the generator x
    CHECK(F.frobenius(alpha, 23) == alpha);
    // unit-group order q^k - 1
    CHECK(F.one() == F.pow(alpha, F.element_count() - 1));
    CHECK(F.pow(alpha, (F.element_count() - 1) / 2) != F.one());  // 2 divides the order
}

TEST_CASE("prime-field context behaves like integers mod p") {
    FieldCtx F(7, 1);
    for (uint32_t a = 0; a < 7; ++a) {
        for (uint32_t b = 0; b < 7; ++b) {
            CHECK(F.encoding(F.add(F.from_encoding(a), F.from_encoding(b))) == (a + b) % 7);
            CHECK(F.encoding(F.mul(F.from_encoding(a), F.from_encoding(b))) == (a * b) % 7);
        }
        if (a) CHECK(F.norm(F.from_encoding(a)) == F.from_encoding(a));
    }
}
