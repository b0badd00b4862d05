#include "doctest.h"

#include "hopforbit/errors.hpp"
#include "hopforbit/scalar.hpp"
#include "gen.hpp"

using namespace hopforbit;

TEST_CASE("field descriptors") {
    auto q = make_field(0, 1);
    CHECK(q.degree() == 1);
    auto qi = make_field(0, 4);
    CHECK(qi.degree() == 2);
    // x^2 + 1
    CHECK(qi.modulus() == std::vector<mpq_class>{1, 0, 1});
    auto f4 = make_field(2, 3);
    CHECK(f4.degree() == 2);
    CHECK(f4.modulus() == std::vector<mpq_class>{1, 1, 1});
    CHECK(make_field(0, 4) == qi);  // interned
    CHECK_THROWS_AS(make_field(4, 3), NonPrimeCharacteristic);
    CHECK_THROWS_AS(make_field(3, 6), CharacteristicDividesOrder);
}

TEST_CASE("cyclotomic polynomials against hand expansion") {
    // Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1, Phi_9 = x^6 + x^3 + 1
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(9) == std::vector<mpz_class>{1, 0, 0, 1, 0, 0, 1});
}

TEST_CASE("field arithmetic examples") {
    auto qi = make_field(0, 4);
    Scalar i = Scalar::zeta(qi);
    CHECK(i * i == Scalar(qi, -1L));

    auto q3 = make_field(0, 3);
    Scalar z = Scalar::zeta(q3);
    Scalar one = Scalar::one(q3);
    CHECK((one + z).inverse() == -z);

    auto f5 = make_field(5, 1);
    CHECK(Scalar(f5, 3L).inverse() == Scalar(f5, 2L));
    CHECK_THROWS_AS(Scalar::zero(f5).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Scalar(f5, 1L) + Scalar(q3, 1L), DescriptorMismatch);

    // rational inputs in characteristic p: 1/2 = 3 in F5
    CHECK(Scalar(f5, mpq_class(1, 2)) == Scalar(f5, 3L));
}

TEST_CASE("primitive roots") {
    auto f = make_field(0, 6);
    Scalar z6 = primitive_root(f, 6);
    CHECK(z6 == Scalar::zeta(f));
    for (int k = 1; k < 6; ++k) CHECK_FALSE(z6.pow(k).is_one());
    CHECK(z6.pow(6).is_one());
    CHECK(primitive_root(f, 2) == Scalar(f, -1L));
    CHECK_THROWS_AS(primitive_root(f, 4), OrderNotAvailable);

    for (auto [p, n] : std::vector<std::pair<long, long>>{{0, 12}, {0, 5}, {2, 3}, {3, 8}, {7, 3}, {5, 4}}) {
        auto fd = make_field(p, n);
        for (long m = 1; m <= n; ++m) {
            if (n % m) continue;
            Scalar r = primitive_root(fd, m);
            CHECK(r.pow(m).is_one());
            for (long j = 1; j < m; ++j) CHECK_FALSE(r.pow(j).is_one());
        }
    }
}

TEST_CASE("field axioms on random triples") {
    testgen::Rng rng(11);
    for (auto [p, n] : std::vector<std::pair<long, long>>{{0, 1}, {0, 3}, {0, 4}, {0, 6}, {2, 3}, {5, 1}, {3, 4}}) {
        auto fd = make_field(p, n);
        for (int k = 0; k < 1000; ++k) {
            Scalar a = testgen::scalar(rng, fd), b = testgen::scalar(rng, fd), c = testgen::scalar(rng, fd);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a * b == b * a);
            REQUIRE(a - a == Scalar::zero(fd));
            if (!a.is_zero()) REQUIRE(a * a.inverse() == Scalar::one(fd));
        }
    }
}

TEST_CASE("big rational exactness") {
    testgen::Rng rng(5);
    auto q = make_field(0, 1);
    for (int k = 0; k < 200; ++k) {
        mpz_class a = testgen::bigint(rng), b = testgen::bigint(rng) + 1, c = testgen::bigint(rng),
                  d = testgen::bigint(rng) + 1;
        if (b == 0) b = 1;
        if (d == 0) d = 1;
        Scalar lhs = (Scalar(q, mpq_class(a, b)) + Scalar(q, mpq_class(c, d))) * Scalar(q, mpq_class(b * d));
        CHECK(lhs == Scalar(q, mpq_class(a * d + c * b)));
    }
}

TEST_CASE("finite field enumeration") {
    auto f4 = make_field(2, 3);
    auto all = enumerate_field(f4);
    CHECK(all.size() == 4);
    int units = 0;
    for (auto& x : all)
        if (!x.is_zero()) {
            ++units;
            CHECK(x.pow(3).is_one());
        }
    CHECK(units == 3);
}
