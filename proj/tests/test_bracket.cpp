#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fermatlab/bracket.hpp"
#include "fermatlab/format.hpp"

using namespace fermatlab;

namespace {
using QPoly = Poly<RationalField>;
RingPtr<RationalField> qring(std::uint32_t nv) { return make_ring(nv, RationalField{}); }
}  // namespace

TEST_CASE("normalize sign") {
    auto [sorted1, sign1] = normalize_bracket({2, 0, 1});
    CHECK(sorted1 == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(sign1 == 1);  // even permutation
    auto [sorted2, sign2] = normalize_bracket({1, 0});
    CHECK(sign2 == -1);
    auto [sorted3, sign3] = normalize_bracket({3, 1, 2, 0});
    CHECK(sorted3 == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK(sign3 == -1);  // (0 3) swap after sorting middle: odd
    CHECK_THROWS_AS(normalize_bracket({0, 1, 0}), std::invalid_argument);
}

TEST_CASE("adjacent swap flips the expanded sign") {
    auto r = qring(3);
    for (std::uint32_t n : {3u, 4u}) {
        auto fwd = expand_bracket(r, {0, 1, 2}, n);
        auto swapped = expand_bracket(r, {0, 2, 1}, n);
        CHECK(swapped == -fwd);
        auto rotated = expand_bracket(r, {2, 0, 1}, n);
        CHECK(rotated == fwd);
    }
}

TEST_CASE("bracket expansion basics") {
    auto r = qring(2);
    CHECK(expand_bracket(r, {0, 1}, 3) == poly_from_text(r, "x0^3 - x1^3"));
    CHECK(expand_bracket(r, {0}, 3) == poly_from_text(r, "1"));
    CHECK(expand_bracket(r, {}, 3) == poly_from_text(r, "1"));
    CHECK_THROWS_AS(expand_bracket(r, {0, 0}, 3), std::invalid_argument);
    CHECK(expand_bracket(r, {0, 0}, 3, true).is_zero());
    CHECK_THROWS_AS(expand_bracket(r, {0, 5}, 3), std::invalid_argument);
    CHECK_THROWS_AS(expand_bracket(r, {0, 1}, 0), std::invalid_argument);
}

TEST_CASE("fermat polynomial") {
    auto r = qring(3);
    auto F = fermat_polynomial(r, 2, 3);
    CHECK(F == poly_from_text(r,
        "x0^6*x1^3 - x0^6*x2^3 - x0^3*x1^6 + x0^3*x2^6 + x1^6*x2^3 - x1^3*x2^6"));
    CHECK(F.degree() == 9);
    // deg F = n N (N+1) / 2
    for (std::uint32_t N : {2u, 3u, 4u})
        for (std::uint32_t n : {3u, 4u}) {
            auto ring = qring(N + 1);
            auto f = fermat_polynomial(ring, N, n);
            CHECK(f.degree() == (long long)(n * N * (N + 1) / 2));
            CHECK(f.is_homogeneous());
        }
    CHECK_THROWS_AS(fermat_polynomial(qring(2), 2, 3), std::invalid_argument);
}

TEST_CASE("expansion rule") {
    // laplace-style peel of the last variable, small hand case first:
    // [x0 x1 x2] = [x0 x1] (x0^n - x2^n)(x1^n - x2^n)
    auto r = qring(3);
    auto lhs = expand_bracket(r, {0, 1, 2}, 3);
    auto rhs = expand_bracket(r, {0, 1}, 3) * poly_from_text(r, "x0^3 - x2^3") *
               poly_from_text(r, "x1^3 - x2^3");
    CHECK(lhs == rhs);
    for (std::uint32_t k = 1; k <= 4; ++k)
        for (std::uint32_t n : {3u, 4u, 5u}) CHECK(verify_expansion_rule(k, n));
}

TEST_CASE("laplace-type expansion") {
    // hand case k=1: [x0 x1] = -x1^n [x1] + x0^n [x0]
    CHECK(verify_laplace_expansion(1, 3));
    for (std::uint32_t k = 1; k <= 4; ++k)
        for (std::uint32_t n : {3u, 4u, 5u}) CHECK(verify_laplace_expansion(k, n));
}

TEST_CASE("substitution rule with fresh variable") {
    for (std::uint32_t k = 1; k <= 4; ++k)
        for (std::uint32_t n : {3u, 4u, 5u}) CHECK(verify_substitution_rule(k, n, k + 1));
}

TEST_CASE("substitution rule with colliding variable reads as zero") {
    for (std::uint32_t k = 1; k <= 3; ++k)
        for (std::uint32_t n : {3u, 4u})
            for (std::uint32_t u = 0; u <= k; ++u) CHECK(verify_substitution_rule(k, n, u));
}

TEST_CASE("useful rule") {
    for (std::uint32_t k = 1; k <= 4; ++k)
        for (std::uint32_t n : {3u, 4u, 5u}) CHECK(verify_useful_rule(k, n));
}

TEST_CASE("degenerate parameters rejected") {
    CHECK_THROWS_AS(verify_expansion_rule(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_laplace_expansion(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_useful_rule(0, 3), std::invalid_argument);
}
