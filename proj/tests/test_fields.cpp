#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fermatlab/fields.hpp"

using namespace fermatlab;

TEST_CASE("rational parse and print") {
    RationalField Q;
    CHECK(Q.str(Q.parse("3/2")) == "3/2");
    CHECK(Q.str(Q.parse("-6/4")) == "-3/2");
    CHECK(Q.str(Q.parse("7")) == "7");
    CHECK(Q.str(Q.add(Q.parse("1/3"), Q.parse("1/6"))) == "1/2");
    CHECK_THROWS_AS(Q.parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Q.parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Q.inv(Q.zero()), std::domain_error);
}

TEST_CASE("primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(7));
    CHECK(is_prime_u64(13));
    CHECK(is_prime_u64(31));
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(91));        // 7 * 13
    CHECK_FALSE(is_prime_u64(3215031751)); // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("prime field basics") {
    PrimeField F(7);
    CHECK(F.add(5, 4) == 2);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.inv(3) == 5);
    CHECK(F.neg(0) == 0);
    CHECK(F.sub(2, 5) == 4);
    CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
    CHECK_THROWS_AS(F.root_of_unity(3, 1), std::invalid_argument);  // no order recorded
}

TEST_CASE("prime field roots of unity") {
    PrimeField F(7, 3);
    CHECK(F.root_of_unity(3, 0) == 1);
    CHECK(F.root_of_unity(3, 1) == 2);  // smallest element of exact order 3 mod 7
    CHECK(F.root_of_unity(3, 2) == 4);
    CHECK(F.root_of_unity(3, 3) == 1);
    CHECK(F.root_of_unity(3, -1) == 4);
    CHECK_THROWS_AS(F.root_of_unity(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(7, 4), std::invalid_argument);  // 7 != 1 mod 4
    PrimeField F13(13, 3);
    auto z = F13.root_of_unity(3, 1);
    CHECK(F13.pow(z, 3) == 1);
    CHECK(z != 1);
    // zeta^k != 1 for 0 < k < n
    for (int k = 1; k < 3; ++k) CHECK(F13.pow(z, k) != 1);
}

TEST_CASE("cyclotomic polynomials") {
    auto phi1 = cyclotomic_polynomial(1);
    CHECK(phi1 == std::vector<Integer>{-1, 1});
    auto phi3 = cyclotomic_polynomial(3);
    CHECK(phi3 == std::vector<Integer>{1, 1, 1});
    auto phi4 = cyclotomic_polynomial(4);
    CHECK(phi4 == std::vector<Integer>{1, 0, 1});
    auto phi6 = cyclotomic_polynomial(6);
    CHECK(phi6 == std::vector<Integer>{1, -1, 1});
    auto phi12 = cyclotomic_polynomial(12);
    CHECK(phi12 == std::vector<Integer>{1, 0, -1, 0, 1});

    // prod over d | n of Phi_d(t) = t^n - 1, n <= 12
    for (unsigned n = 1; n <= 12; ++n) {
        std::vector<Integer> prod = {1};
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            auto phi = cyclotomic_polynomial(d);
            std::vector<Integer> next(prod.size() + phi.size() - 1, Integer(0));
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = std::move(next);
        }
        std::vector<Integer> want(n + 1, Integer(0));
        want[0] = -1;
        want[n] = 1;
        CHECK(prod == want);
    }
}

TEST_CASE("cyclotomic field arithmetic") {
    CyclotomicField K(3);
    CHECK(K.degree() == 2);
    auto z = K.root_of_unity(3, 1);
    auto z2 = K.root_of_unity(3, 2);
    // zeta^2 = -1 - zeta
    CHECK(z2.c == std::vector<Rational>{Rational(-1), Rational(-1)});
    // (1 + zeta)(1 + zeta^2) = 1
    auto a = K.add(K.one(), z);
    auto b = K.add(K.one(), z2);
    CHECK(K.eq(K.mul(a, b), K.one()));
    // zeta^3 = 1, zeta^k != 1 for 0 < k < 3
    CHECK(K.eq(K.root_of_unity(3, 3), K.one()));
    for (int k = 1; k < 3; ++k) CHECK_FALSE(K.eq(K.root_of_unity(3, k), K.one()));
    CHECK_THROWS_AS(K.root_of_unity(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(K.inv(K.zero()), std::domain_error);
}

TEST_CASE("cyclotomic inverses across orders") {
    std::mt19937 rng(12345);
    for (unsigned n : {3u, 4u, 5u, 6u, 8u, 12u}) {
        CyclotomicField K(n);
        // roots of unity have inverses zeta^-a
        for (unsigned a = 1; a < n; ++a) {
            auto za = K.root_of_unity(n, a);
            CHECK(K.eq(K.inv(za), K.root_of_unity(n, -(long long)a)));
        }
        // random elements: a * a^-1 == 1
        for (int trial = 0; trial < 10; ++trial) {
            CycElem e = K.zero();
            for (auto& q : e.c) q = Rational((long)(rng() % 7) - 3);
            if (K.is_zero(e)) continue;
            CHECK(K.eq(K.mul(e, K.inv(e)), K.one()));
        }
    }
}

TEST_CASE("cyclotomic str and parse round-trip") {
    CyclotomicField K(5);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        CycElem e = K.zero();
        for (auto& q : e.c) {
            q = Rational((long)(rng() % 9) - 4, 1 + (long)(rng() % 3));
            q.canonicalize();
        }
        auto s = K.str(e);
        CHECK(K.eq(K.parse(s), e));
    }
    CHECK(K.str(K.zero()) == "(0)");
    CHECK(K.str(K.one()) == "(1)");
    CHECK(K.str(K.root_of_unity(5, 1)) == "(z)");
}

template <class F>
static void field_axioms(const F& field, std::vector<typename F::Elem> samples) {
    for (const auto& a : samples)
        for (const auto& b : samples) {
            CHECK(field.eq(field.add(a, b), field.add(b, a)));
            CHECK(field.eq(field.mul(a, b), field.mul(b, a)));
            CHECK(field.eq(field.add(a, field.neg(a)), field.zero()));
            if (!field.is_zero(b)) {
                CHECK(field.eq(field.mul(b, field.inv(b)), field.one()));
                CHECK(field.eq(field.div(field.mul(a, b), b), a));
            }
            for (const auto& c : samples)
                CHECK(field.eq(field.mul(a, field.add(b, c)),
                               field.add(field.mul(a, b), field.mul(a, c))));
        }
}

TEST_CASE("field axioms on samples") {
    RationalField Q;
    field_axioms(Q, {Q.parse("0"), Q.parse("1"), Q.parse("-3/2"), Q.parse("7/5"), Q.parse("2")});
    PrimeField F(13, 3);
    field_axioms(F, {F.from_int(0), F.from_int(1), F.from_int(5), F.from_int(12), F.root_of_unity(3, 1)});
    CyclotomicField K(4);
    field_axioms(K, {K.zero(), K.one(), K.root_of_unity(4, 1), K.from_rational(Rational(-2, 3)),
                     K.add(K.one(), K.root_of_unity(4, 1))});
}

TEST_CASE("prime field rational reduction") {
    PrimeField F(13);
    CHECK(F.from_rational(Rational(1, 2)) == 7);  // 2 * 7 = 14 = 1
    CHECK(F.from_rational(Rational(-1)) == 12);
    CHECK_THROWS_AS(F.from_rational(Rational(1, 13)), std::domain_error);
}
