#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fermatlab/fields.hpp"
#include "fermatlab/poly.hpp"

namespace fermatlab {

// [x_{i_1} ... x_{i_k}] with ascending indices has sign +1; a transposition
// flips the sign.  normalize returns (sorted indices, sign of the permutation).
inline std::pair<std::vector<std::uint32_t>, int> normalize_bracket(std::vector<std::uint32_t> idx) {
    {
        std::set<std::uint32_t> seen(idx.begin(), idx.end());
        if (seen.size() != idx.size()) throw std::invalid_argument("bracket has a repeated index");
    }
    int sign = 1;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
        std::size_t best = i;
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (idx[j] < idx[best]) best = j;
        if (best != i) {
            std::swap(idx[i], idx[best]);
            sign = -sign;
        }
    }
    return {std::move(idx), sign};
}

// Product over pairs p < q of (x_{i_p}^n - x_{i_q}^n), exactly as written.
// A repeated index makes a zero factor, so the product is the zero polynomial;
// that is only allowed when allow_repeats is set (used by the substitution
// rule, where a collision is read as zero).
template <class F>
Poly<F> expand_bracket(const RingPtr<F>& ring, const std::vector<std::uint32_t>& idx,
                       std::uint32_t n, bool allow_repeats = false) {
    if (n == 0) throw std::invalid_argument("bracket exponent n must be positive");
    for (auto i : idx)
        if (i >= ring->nvars) throw std::invalid_argument("bracket index out of range");
    if (!allow_repeats) {
        std::set<std::uint32_t> seen(idx.begin(), idx.end());
        if (seen.size() != idx.size()) throw std::invalid_argument("bracket has a repeated index");
    }
    Poly<F> acc = Poly<F>::from_int(ring, 1);
    for (std::size_t p = 0; p < idx.size(); ++p)
        for (std::size_t q = p + 1; q < idx.size(); ++q) {
            if (idx[p] == idx[q]) return Poly<F>::zero(ring);
            Exponents ep(ring->nvars, 0), eq(ring->nvars, 0);
            ep[idx[p]] = n;
            eq[idx[q]] = n;
            Poly<F> factor = Poly<F>::monomial(ring, std::move(ep), ring->field.one()) -
                             Poly<F>::monomial(ring, std::move(eq), ring->field.one());
            acc = acc * factor;
        }
    return acc;
}

// F_{N,n} = [x_0 ... x_N] in a ring with at least N+1 variables.
template <class F>
Poly<F> fermat_polynomial(const RingPtr<F>& ring, std::uint32_t N, std::uint32_t n) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    if (ring->nvars < N + 1) throw std::invalid_argument("ring has too few variables");
    std::vector<std::uint32_t> idx(N + 1);
    for (std::uint32_t i = 0; i <= N; ++i) idx[i] = i;
    return expand_bracket(ring, idx, n);
}

namespace detail {

inline RingPtr<RationalField> lemma_ring(std::uint32_t nvars) {
    return make_ring(nvars, RationalField{});
}

inline std::vector<std::uint32_t> iota_indices(std::uint32_t count) {
    std::vector<std::uint32_t> v(count);
    for (std::uint32_t i = 0; i < count; ++i) v[i] = i;
    return v;
}

}  // namespace detail

// [x_0...x_k] = [x_0...x_{k-1}] * prod_{j<k} (x_j^n - x_k^n)
inline bool verify_expansion_rule(std::uint32_t k, std::uint32_t n) {
    if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1, n >= 1");
    auto ring = detail::lemma_ring(k + 1);
    auto idx = detail::iota_indices(k + 1);
    auto lhs = expand_bracket(ring, idx, n);
    auto sub = detail::iota_indices(k);
    auto rhs = expand_bracket(ring, sub, n);
    for (std::uint32_t j = 0; j < k; ++j) {
        Exponents ej(ring->nvars, 0), ek(ring->nvars, 0);
        ej[j] = n;
        ek[k] = n;
        rhs = rhs * (Poly<RationalField>::monomial(ring, ej, ring->field.one()) -
                     Poly<RationalField>::monomial(ring, ek, ring->field.one()));
    }
    return lhs == rhs;
}

// [x_0...x_k] = sum_j (-1)^(j+k) (prod_{t != j} x_t^n) [x_0...^x_j...x_k]
inline bool verify_laplace_expansion(std::uint32_t k, std::uint32_t n) {
    if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1, n >= 1");
    auto ring = detail::lemma_ring(k + 1);
    auto lhs = expand_bracket(ring, detail::iota_indices(k + 1), n);
    auto rhs = Poly<RationalField>::zero(ring);
    for (std::uint32_t j = 0; j <= k; ++j) {
        std::vector<std::uint32_t> rest;
        Exponents mono(ring->nvars, 0);
        for (std::uint32_t t = 0; t <= k; ++t) {
            if (t == j) continue;
            rest.push_back(t);
            mono[t] = n;
        }
        auto term = expand_bracket(ring, rest, n).mono_scaled(mono, ring->field.one());
        rhs = ((k + j) % 2 == 0) ? rhs + term : rhs - term;
    }
    return lhs == rhs;
}

// [x_{i_0}...x_{i_k}] = sum_j [x_{i_0}...x_u...x_{i_k}]  (x_u in slot j).
// With u equal to one of the i_t the colliding summand is zero; both the fresh
// and the colliding reading are checked by the caller's choice of u.
inline bool verify_substitution_rule(std::uint32_t k, std::uint32_t n, std::uint32_t u) {
    if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1, n >= 1");
    std::uint32_t nvars = std::max(k + 1, u + 1);
    auto ring = detail::lemma_ring(nvars);
    auto idx = detail::iota_indices(k + 1);
    auto lhs = expand_bracket(ring, idx, n);
    auto rhs = Poly<RationalField>::zero(ring);
    for (std::uint32_t j = 0; j <= k; ++j) {
        auto replaced = idx;
        replaced[j] = u;
        rhs = rhs + expand_bracket(ring, replaced, n, /*allow_repeats=*/true);
    }
    return lhs == rhs;
}

// [x_0...x_k] = sum_j (-1)^j [x_0...^x_j...x_k] [x_j y_1] ... [x_j y_k]
// with y_1..y_k fresh variables (indices k+1..2k).
inline bool verify_useful_rule(std::uint32_t k, std::uint32_t n) {
    if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1, n >= 1");
    auto ring = detail::lemma_ring(2 * k + 1);
    auto lhs = expand_bracket(ring, detail::iota_indices(k + 1), n);
    auto rhs = Poly<RationalField>::zero(ring);
    for (std::uint32_t j = 0; j <= k; ++j) {
        std::vector<std::uint32_t> rest;
        for (std::uint32_t t = 0; t <= k; ++t)
            if (t != j) rest.push_back(t);
        auto term = expand_bracket(ring, rest, n);
        for (std::uint32_t t = 1; t <= k; ++t) {
            Exponents ej(ring->nvars, 0), ey(ring->nvars, 0);
            ej[j] = n;
            ey[k + t] = n;
            term = term * (Poly<RationalField>::monomial(ring, ej, ring->field.one()) -
                           Poly<RationalField>::monomial(ring, ey, ring->field.one()));
        }
        rhs = (j % 2 == 0) ? rhs + term : rhs - term;
    }
    return lhs == rhs;
}

}  // namespace fermatlab
