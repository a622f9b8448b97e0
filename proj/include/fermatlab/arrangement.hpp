#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "fermatlab/bracket.hpp"
#include "fermatlab/fields.hpp"
#include "fermatlab/poly.hpp"

namespace fermatlab {

// Fermat-type arrangement in P^N cut out by x_i^n = x_j^n.
struct FermatConfig {
    std::uint32_t N;
    std::uint32_t n;
};

inline void validate_config(const FermatConfig& cfg) {
    if (cfg.N < 2) throw std::invalid_argument("need N >= 2");
    if (cfg.n < 3) throw std::invalid_argument("need n >= 3");
}

// Codimension-two flat of the arrangement: either a coordinate flat
// {x_i = x_j = 0} (lying on the n hyperplanes x_i = zeta^a x_j), or a flat
// {x_i = zeta^(a+b) x_k, x_j = zeta^b x_k} lying on exactly three hyperplanes.
struct Flat {
    enum class Kind { Coordinate, Triple };
    Kind kind;
    std::uint32_t i, j, k;  // i < j (< k); k unused for coordinate flats
    std::uint32_t a, b;     // exponents of zeta; unused for coordinate flats

    bool operator==(const Flat& o) const {
        return kind == o.kind && i == o.i && j == o.j && k == o.k && a == o.a && b == o.b;
    }
};

std::vector<Flat> enumerate_flats(const FermatConfig& cfg);

inline std::uint64_t expected_flat_count(const FermatConfig& cfg) {
    std::uint64_t m = cfg.N + 1;
    std::uint64_t pairs = m * (m - 1) / 2;
    std::uint64_t triples = m * (m - 1) * (m - 2) / 6;
    return pairs + static_cast<std::uint64_t>(cfg.n) * cfg.n * triples;
}

// The two linear forms cutting the flat.  The field must provide order-n roots
// of unity (cyclotomic(n), or prime p with p = 1 mod n recorded).
template <class F>
std::vector<Poly<F>> flat_linear_forms(const RingPtr<F>& ring, const Flat& flat, std::uint32_t n) {
    const auto& field = ring->field;
    std::vector<Poly<F>> out;
    if (flat.kind == Flat::Kind::Coordinate) {
        out.push_back(Poly<F>::variable(ring, flat.i));
        out.push_back(Poly<F>::variable(ring, flat.j));
    } else {
        long long a = flat.a, b = flat.b;
        out.push_back(Poly<F>::variable(ring, flat.i) -
                      Poly<F>::variable(ring, flat.k).scaled(field.root_of_unity(n, a + b)));
        out.push_back(Poly<F>::variable(ring, flat.j) -
                      Poly<F>::variable(ring, flat.k).scaled(field.root_of_unity(n, b)));
    }
    return out;
}

// All n * C(N+1, 2) hyperplane forms x_i - zeta^a x_j, (i < j, 0 <= a < n).
template <class F>
std::vector<Poly<F>> hyperplane_forms(const RingPtr<F>& ring, const FermatConfig& cfg) {
    validate_config(cfg);
    if (ring->nvars != cfg.N + 1) throw std::invalid_argument("ring has wrong variable count");
    const auto& field = ring->field;
    std::vector<Poly<F>> out;
    for (std::uint32_t i = 0; i <= cfg.N; ++i)
        for (std::uint32_t j = i + 1; j <= cfg.N; ++j)
            for (std::uint32_t a = 0; a < cfg.n; ++a)
                out.push_back(Poly<F>::variable(ring, i) -
                              Poly<F>::variable(ring, j).scaled(field.root_of_unity(cfg.n, a)));
    return out;
}

// Restriction of f to the flat: coordinate flats kill x_i, x_j; triple flats
// substitute x_i -> zeta^(a+b) x_k and x_j -> zeta^b x_k.
template <class F>
Poly<F> restrict_to_flat(const Poly<F>& f, const Flat& flat, std::uint32_t n) {
    const auto& ring = f.ring();
    if (flat.kind == Flat::Kind::Coordinate) {
        auto z = Poly<F>::zero(ring);
        return f.substitute_var(flat.i, z).substitute_var(flat.j, z);
    }
    long long a = flat.a, b = flat.b;
    auto xi = Poly<F>::variable(ring, flat.k).scaled(ring->field.root_of_unity(n, a + b));
    auto xj = Poly<F>::variable(ring, flat.k).scaled(ring->field.root_of_unity(n, b));
    return f.substitute_var(flat.i, xi).substitute_var(flat.j, xj);
}

// Number of arrangement hyperplanes vanishing on the flat, decided by a span
// test of each hyperplane form against the flat's two forms.
template <class F>
std::uint32_t hyperplanes_through(const RingPtr<F>& ring, const Flat& flat, const FermatConfig& cfg) {
    auto forms = flat_linear_forms(ring, flat, cfg.n);
    std::uint32_t count = 0;
    for (const auto& h : hyperplane_forms(ring, cfg)) {
        // reduce h by the two (triangular) flat forms and test for zero
        auto r = h;
        for (const auto& f : forms) {
            const auto& lt = f.leading_term();
            auto c = r.coefficient_of(lt.e);
            if (!ring->field.is_zero(c))
                r = r - f.scaled(ring->field.div(c, lt.c));
        }
        if (r.is_zero()) ++count;
    }
    return count;
}

// --- Prop.-style ideal generators ---------------------------------------------

// Admissible index subset A: |A| = M for N = 2M, |A| = M+1 for N = 2M+1.
inline std::uint32_t generator_subset_size(const FermatConfig& cfg) {
    return cfg.N % 2 == 0 ? cfg.N / 2 : (cfg.N - 1) / 2 + 1;
}

inline std::uint64_t expected_generator_count(const FermatConfig& cfg) {
    std::uint64_t total = cfg.N + 1, size = generator_subset_size(cfg), c = 1;
    for (std::uint64_t t = 0; t < size; ++t) c = c * (total - t) / (t + 1);
    return c;
}

inline std::uint64_t generator_degree(const FermatConfig& cfg) {
    std::uint64_t M = cfg.N / 2;
    if (cfg.N % 2 == 0) return M + static_cast<std::uint64_t>(cfg.n) * M * M;
    return (M + 1) + static_cast<std::uint64_t>(cfg.n) * M * (M + 1);
}

// g_A = (prod_{i in A} x_i) [A] [complement of A], indices ascending.
template <class F>
Poly<F> arrangement_generator(const RingPtr<F>& ring, const FermatConfig& cfg,
                              const std::vector<std::uint32_t>& A) {
    validate_config(cfg);
    if (ring->nvars != cfg.N + 1) throw std::invalid_argument("ring has wrong variable count");
    if (A.size() != generator_subset_size(cfg)) throw std::invalid_argument("subset A has wrong size");
    if (!std::is_sorted(A.begin(), A.end())) throw std::invalid_argument("subset A must be ascending");
    for (auto i : A)
        if (i > cfg.N) throw std::invalid_argument("subset index out of range");
    std::vector<std::uint32_t> B;
    for (std::uint32_t i = 0; i <= cfg.N; ++i)
        if (!std::binary_search(A.begin(), A.end(), i)) B.push_back(i);
    Exponents mono(ring->nvars, 0);
    for (auto i : A) {
        if (mono[i]) throw std::invalid_argument("subset A has a repeated index");
        mono[i] = 1;
    }
    auto g = expand_bracket(ring, A, cfg.n) * expand_bracket(ring, B, cfg.n);
    return g.mono_scaled(mono, ring->field.one());
}

template <class F>
std::vector<Poly<F>> arrangement_ideal_generators(const RingPtr<F>& ring, const FermatConfig& cfg) {
    validate_config(cfg);
    std::vector<Poly<F>> out;
    std::vector<std::uint32_t> A(generator_subset_size(cfg));
    // lexicographically ascending subsets
    for (std::uint32_t i = 0; i < A.size(); ++i) A[i] = i;
    while (true) {
        out.push_back(arrangement_generator(ring, cfg, A));
        // next combination
        std::size_t t = A.size();
        while (t > 0 && A[t - 1] == cfg.N - (A.size() - t)) --t;
        if (t == 0) break;
        ++A[t - 1];
        for (std::size_t s = t; s < A.size(); ++s) A[s] = A[s - 1] + 1;
    }
    return out;
}

// Generators of the cone over the sub-arrangement on the variables other than
// x_i (an (N-1)-dimensional arrangement, so this needs N >= 3).
template <class F>
std::vector<Poly<F>> cone_ideal_generators(const RingPtr<F>& ring, const FermatConfig& cfg,
                                           std::uint32_t omitted) {
    validate_config(cfg);
    if (cfg.N < 3) throw std::invalid_argument("cone generators need N >= 3");
    if (omitted > cfg.N) throw std::invalid_argument("omitted index out of range");
    if (ring->nvars != cfg.N + 1) throw std::invalid_argument("ring has wrong variable count");
    FermatConfig sub{cfg.N - 1, cfg.n};
    std::vector<std::uint32_t> labels;
    for (std::uint32_t i = 0; i <= cfg.N; ++i)
        if (i != omitted) labels.push_back(i);

    std::vector<Poly<F>> out;
    std::uint32_t size = generator_subset_size(sub);
    std::vector<std::uint32_t> pos(size);
    for (std::uint32_t i = 0; i < size; ++i) pos[i] = i;
    while (true) {
        std::vector<std::uint32_t> A, B;
        for (std::uint32_t p = 0; p < labels.size(); ++p) {
            if (std::binary_search(pos.begin(), pos.end(), p)) A.push_back(labels[p]);
            else B.push_back(labels[p]);
        }
        Exponents mono(ring->nvars, 0);
        for (auto i : A) mono[i] = 1;
        auto g = expand_bracket(ring, A, cfg.n) * expand_bracket(ring, B, cfg.n);
        out.push_back(g.mono_scaled(mono, ring->field.one()));
        std::size_t t = pos.size();
        while (t > 0 && pos[t - 1] == labels.size() - 1 - (pos.size() - t)) --t;
        if (t == 0) break;
        ++pos[t - 1];
        for (std::size_t s = t; s < pos.size(); ++s) pos[s] = pos[s - 1] + 1;
    }
    return out;
}

// --- brute-force census ---------------------------------------------------------

struct CensusReport {
    std::uint64_t flats_found = 0;           // distinct hyperplane-pair intersections on >= 3 hyperplanes
    std::uint64_t expected = 0;              // from enumerate_flats
    bool keys_match = false;                 // same flat set both ways
    bool multiplicities_match = false;       // per-flat hyperplane counts agree (n resp. 3)
    bool ok() const { return keys_match && multiplicities_match && flats_found == expected; }
};

// Intersects every pair of arrangement hyperplanes over Q(zeta_n) and checks
// the resulting multiplicity->flat classification against enumerate_flats.
CensusReport brute_force_flat_census(const FermatConfig& cfg);

// prod of all hyperplane forms equals the expanded Fermat polynomial.
bool verify_fermat_factorization(const FermatConfig& cfg);

}  // namespace fermatlab
