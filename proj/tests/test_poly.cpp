#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fermatlab/format.hpp"
#include "fermatlab/poly.hpp"

using namespace fermatlab;

namespace {

using QPoly = Poly<RationalField>;

RingPtr<RationalField> qring(std::uint32_t nv, MonomialOrder ord = MonomialOrder::grevlex()) {
    return make_ring(nv, RationalField{}, ord);
}

QPoly qparse(const RingPtr<RationalField>& r, const std::string& s) { return poly_from_text(r, s); }

QPoly random_poly(const RingPtr<RationalField>& r, std::mt19937& rng, int max_terms = 6, int max_exp = 4) {
    std::vector<Term<RationalField>> terms;
    int nt = 1 + rng() % max_terms;
    for (int t = 0; t < nt; ++t) {
        Exponents e(r->nvars);
        for (auto& x : e) x = rng() % (max_exp + 1);
        long c = (long)(rng() % 11) - 5;
        terms.push_back({std::move(e), Rational(c)});
    }
    return QPoly::from_terms(r, std::move(terms));
}

}  // namespace

TEST_CASE("construction and canonical form") {
    auto r = qring(3);
    auto p = qparse(r, "x0^2 + 2*x1 - x0^2 + 1");
    CHECK(p == qparse(r, "2*x1 + 1"));
    CHECK(p.term_count() == 2);
    CHECK(QPoly::zero(r).is_zero());
    CHECK(qparse(r, "0").is_zero());
    CHECK_THROWS_AS(QPoly::variable(r, 3), std::invalid_argument);
}

TEST_CASE("grevlex term order") {
    auto r = qring(3);
    // x0*x1^2 vs x0^2*x1: same degree, grevlex compares last exponents
    auto p = qparse(r, "x0*x1^2 + x0^2*x1");
    CHECK(p.leading_term().e == Exponents{2, 1, 0});
    // degree dominates
    auto q = qparse(r, "x2^4 + x0^3");
    CHECK(q.leading_term().e == Exponents{0, 0, 4});
}

TEST_CASE("lex term order") {
    auto r = qring(3, MonomialOrder::lex());
    auto p = qparse(r, "x1^5 + x0*x2");
    CHECK(p.leading_term().e == Exponents{1, 0, 1});
}

TEST_CASE("block order eliminates its block first") {
    // t = variable 3 in the block; any monomial with t beats any without
    std::vector<std::uint32_t> perm = {3, 0, 1, 2};
    auto r = qring(4, MonomialOrder::block_elim(1, perm));
    auto p = qparse(r, "x3 + x0^5*x1^5");
    CHECK(p.leading_term().e == Exponents{0, 0, 0, 1});
}

TEST_CASE("arithmetic") {
    auto r = qring(2);
    auto a = qparse(r, "x0 + x1");
    auto b = qparse(r, "x0 - x1");
    CHECK(a * b == qparse(r, "x0^2 - x1^2"));
    CHECK(a + b == qparse(r, "2*x0"));
    CHECK(a - a == QPoly::zero(r));
    CHECK(a.pow(2) == qparse(r, "x0^2 + 2*x0*x1 + x1^2"));
    CHECK(a.pow(0) == qparse(r, "1"));
    CHECK((-a) == qparse(r, "-x0 - x1"));
    auto c = a.scaled(Rational(-3, 2));
    CHECK(c == qparse(r, "-3/2*x0 - 3/2*x1"));
}

TEST_CASE("ring mismatch rejected") {
    auto r2 = qring(2), r3 = qring(3);
    auto a = qparse(r2, "x0");
    auto b = qparse(r3, "x0");
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("value-equal rings interoperate") {
    auto r1 = qring(2), r2 = qring(2);
    CHECK(qparse(r1, "x0") + qparse(r2, "x1") == qparse(r1, "x0 + x1"));
}

TEST_CASE("degree-9 product expansion") {
    auto r = qring(3);
    auto f = qparse(r, "x0^3 - x1^3") * qparse(r, "x0^3 - x2^3") * qparse(r, "x1^3 - x2^3");
    auto want = qparse(r,
        "x0^6*x1^3 - x0^6*x2^3 - x0^3*x1^6 + x0^3*x2^6 + x1^6*x2^3 - x1^3*x2^6");
    CHECK(f == want);
    CHECK(f.term_count() == 6);
    CHECK(f.degree() == 9);
    CHECK(f.is_homogeneous());

    // substitute x0 -> 0
    auto ft = f.substitute_var(0, QPoly::zero(r));
    CHECK(ft == qparse(r, "x1^6*x2^3 - x1^3*x2^6"));
    CHECK(ft.coefficient_of({0, 6, 3}) == Rational(1));
    CHECK(f.coefficient_of({9, 0, 0}) == Rational(0));

    // min degree in {x1, x2} after renaming those to parameters
    CHECK(f.min_degree_in({1, 2}) == 3);
    CHECK(ft.min_degree_in({1, 2}) == 9);
}

TEST_CASE("coefficient_of is linear") {
    std::mt19937 rng(7);
    auto r = qring(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = random_poly(r, rng), q = random_poly(r, rng);
        Exponents e(3);
        for (auto& x : e) x = rng() % 5;
        CHECK((p + q).coefficient_of(e) == p.coefficient_of(e) + q.coefficient_of(e));
        Rational c(3, 7);
        CHECK(p.scaled(c).coefficient_of(e) == c * p.coefficient_of(e));
    }
}

TEST_CASE("min_degree_in is additive over products") {
    std::mt19937 rng(11);
    auto r = qring(3);
    int done = 0;
    while (done < 25) {
        auto p = random_poly(r, rng), q = random_poly(r, rng);
        if (p.is_zero() || q.is_zero()) continue;
        std::vector<std::uint32_t> vars = {0, 2};
        CHECK((p * q).min_degree_in(vars) == p.min_degree_in(vars) + q.min_degree_in(vars));
        ++done;
    }
    CHECK_THROWS_AS(QPoly::zero(r).min_degree_in({0}), std::domain_error);
}

TEST_CASE("substitution") {
    auto r = qring(3);
    auto f = qparse(r, "x0^2*x1 + x2");
    auto g = qparse(r, "x1 + x2");
    CHECK(f.substitute_var(0, g) == qparse(r, "x1^3 + 2*x1^2*x2 + x1*x2^2 + x2"));
    // substitute_all with identity images is a no-op
    std::vector<QPoly> ids = {QPoly::variable(r, 0), QPoly::variable(r, 1), QPoly::variable(r, 2)};
    CHECK(f.substitute_all(ids) == f);
}

TEST_CASE("derivative") {
    auto r = qring(2);
    auto f = qparse(r, "x0^3*x1 - 2*x1^2");
    CHECK(f.derivative(0) == qparse(r, "3*x0^2*x1"));
    CHECK(f.derivative(1) == qparse(r, "x0^3 - 4*x1"));
}

TEST_CASE("exponent overflow is an error") {
    auto r = qring(1);
    auto big = QPoly::monomial(r, {kMaxExponent}, Rational(1));
    auto x = QPoly::variable(r, 0);
    CHECK_THROWS_AS(big * x, std::overflow_error);
    CHECK_THROWS_AS(QPoly::monomial(r, {kMaxExponent + 1}, Rational(1)), std::overflow_error);
}

TEST_CASE("text round-trip over Q") {
    std::mt19937 rng(23);
    auto r = qring(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poly(r, rng);
        CHECK(poly_from_text(r, to_text(p)) == p);
    }
    CHECK(to_text(QPoly::zero(r)) == "0");
    auto p = qparse(r, "-x0 + 1/2*x1^2 - 3");
    CHECK(to_text(p) == "1/2*x1^2 - x0 - 3");
}

TEST_CASE("json round-trip over Q") {
    std::mt19937 rng(31);
    auto r = qring(4);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poly(r, rng);
        auto j = poly_to_json(p);
        CHECK(poly_from_json(r, j) == p);
        // serialization is canonical: same json both times
        CHECK(poly_to_json(poly_from_json(r, j)) == j);
    }
}

TEST_CASE("prime field polynomials") {
    PrimeField F(7);
    auto r = make_ring(2, F);
    auto x = Poly<PrimeField>::variable(r, 0), y = Poly<PrimeField>::variable(r, 1);
    auto p = (x + y).pow(7);
    // freshman's dream in characteristic 7
    CHECK(p == x.pow(7) + y.pow(7));
    CHECK(poly_from_text(r, to_text(p)) == p);
    auto j = poly_to_json(p);
    CHECK(poly_from_json(r, j) == p);
}

TEST_CASE("cyclotomic polynomials round-trip") {
    CyclotomicField K(3);
    auto r = make_ring(2, K);
    auto x = Poly<CyclotomicField>::variable(r, 0), y = Poly<CyclotomicField>::variable(r, 1);
    auto z = K.root_of_unity(3, 1);
    auto p = x - y.scaled(z);
    auto q = x - y.scaled(K.root_of_unity(3, 2));
    auto w = x - y;
    // (x - y)(x - zy)(x - z^2 y) = x^3 - y^3
    CHECK(w * p * q == x.pow(3) - y.pow(3));
    CHECK(poly_from_text(r, to_text(p)) == p);
    CHECK(poly_from_json(r, poly_to_json(p)) == p);
}

TEST_CASE("transplant between orders") {
    auto r = qring(2);
    auto p = qparse(r, "x0*x1^2 + x0^2*x1");
    auto rlex = qring(2, MonomialOrder::lex());
    auto q = QPoly::transplant(p, rlex, {0, 1});
    CHECK(q.leading_term().e == Exponents{2, 1});
    CHECK(QPoly::transplant(q, r, {0, 1}) == p);
}
