#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fermatlab/errors.hpp"
#include "fermatlab/poly.hpp"

namespace fermatlab {

// Hard limits for the heavier computations.  Hitting one raises BudgetExceeded;
// callers that can live with a partial answer catch it and report "undecided".
struct Budgets {
    std::uint64_t max_spairs = 200000;                    // S-pairs reduced per Buchberger run
    std::uint64_t max_matrix_cells = 64ull << 20;         // rows * cols of a graded-piece matrix
    std::uint64_t max_rational_cells = 4ull << 20;        // same, but for exact rational elimination
};

// Full normal form: on return no term of the result is divisible by the
// leading term of any generator.  Zero generators are ignored.
template <class F>
Poly<F> normal_form(Poly<F> p, const std::vector<Poly<F>>& gens) {
    const auto ring = p.ring();
    const auto& field = ring->field;
    for (const auto& g : gens)
        if (!same_ring(g.ring(), ring)) throw std::invalid_argument("generator from a different ring");
    std::size_t at = 0;  // terms before `at` are already irreducible
    while (at < p.terms().size()) {
        const auto& t = p.terms()[at];
        const Poly<F>* hit = nullptr;
        for (const auto& g : gens)
            if (!g.is_zero() && mono_divides(g.leading_term().e, t.e)) {
                hit = &g;
                break;
            }
        if (!hit) {
            ++at;
            continue;
        }
        const auto& gl = hit->leading_term();
        p = p - hit->mono_scaled(mono_div(t.e, gl.e), field.div(t.c, gl.c));
    }
    return p;
}

template <class F>
struct GroebnerBasis {
    RingPtr<F> ring;
    std::vector<Poly<F>> basis;  // reduced: monic, minimal, tails in normal form, ascending leading terms
    std::uint64_t spairs_processed = 0;
};

namespace detail {

struct SPair {
    Exponents lcm;
    std::uint32_t i, j;
};

struct SPairCmp {
    const MonomialOrder* ord;
    bool operator()(const SPair& a, const SPair& b) const {
        if (int c = ord->compare(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// minimal + tail-reduced + sorted; input must be monic
template <class F>
std::vector<Poly<F>> reduce_basis(std::vector<Poly<F>> basis, const MonomialOrder& ord) {
    std::stable_sort(basis.begin(), basis.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        return ord.compare(a.leading_term().e, b.leading_term().e) < 0;
    });
    // a divisor is never larger than its multiple, so one ascending scan suffices
    std::vector<Poly<F>> kept;
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& h : kept)
            if (mono_divides(h.leading_term().e, g.leading_term().e)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly<F>> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = normal_form(kept[i], others);
    }
    return kept;
}

}  // namespace detail

// Buchberger with the normal selection strategy (smallest lcm first), the
// product criterion applied when queueing pairs and the chain criterion when
// popping them.  The result is the reduced basis, so it is unique for the
// ideal and the ring's order.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Poly<F>>& gens, const Budgets& budgets = {}) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    RingPtr<F> ring = gens.front().ring();
    const auto& field = ring->field;
    for (const auto& g : gens)
        if (!same_ring(g.ring(), ring)) throw std::invalid_argument("generators from different rings");

    GroebnerBasis<F> out{ring, {}, 0};
    std::vector<Poly<F>> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.scaled(field.inv(g.leading_term().c)));
    if (basis.empty()) return out;  // zero ideal

    using detail::SPair;
    std::set<SPair, detail::SPairCmp> pending(detail::SPairCmp{&ring->order});
    auto push_pairs_for = [&](std::uint32_t t) {
        const auto& lt = basis[t].leading_term().e;
        for (std::uint32_t k = 0; k < t; ++k) {
            const auto& lk = basis[k].leading_term().e;
            if (mono_coprime(lk, lt)) continue;
            pending.insert(SPair{mono_lcm(lk, lt), k, t});
        }
    };
    for (std::uint32_t t = 1; t < basis.size(); ++t) push_pairs_for(t);

    auto pair_key = [&](std::uint32_t a, std::uint32_t b) {
        if (a > b) std::swap(a, b);
        return SPair{mono_lcm(basis[a].leading_term().e, basis[b].leading_term().e), a, b};
    };

    while (!pending.empty()) {
        SPair pr = *pending.begin();
        pending.erase(pending.begin());

        // chain criterion: lcm divisible by a third leading term whose two
        // subordinate pairs are both settled already
        bool skip = false;
        for (std::uint32_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!mono_divides(basis[k].leading_term().e, pr.lcm)) continue;
            if (pending.count(pair_key(pr.i, k)) == 0 && pending.count(pair_key(pr.j, k)) == 0)
                skip = true;
        }
        if (skip) continue;

        if (++out.spairs_processed > budgets.max_spairs)
            throw BudgetExceeded("buchberger s-pairs", budgets.max_spairs);

        const auto& fi = basis[pr.i];
        const auto& fj = basis[pr.j];
        auto s = fi.mono_scaled(mono_div(pr.lcm, fi.leading_term().e), field.one()) -
                 fj.mono_scaled(mono_div(pr.lcm, fj.leading_term().e), field.one());
        auto r = normal_form(std::move(s), basis);
        if (r.is_zero()) continue;
        basis.push_back(r.scaled(field.inv(r.leading_term().c)));
        push_pairs_for(static_cast<std::uint32_t>(basis.size()) - 1);
    }

    out.basis = detail::reduce_basis(std::move(basis), ring->order);
    return out;
}

// every S-polynomial reduces to zero, no budget
template <class F>
bool is_groebner_basis(const std::vector<Poly<F>>& basis) {
    if (basis.empty()) return true;
    const auto& field = basis.front().ring()->field;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].is_zero() || basis[j].is_zero()) continue;
            const auto& li = basis[i].leading_term();
            const auto& lj = basis[j].leading_term();
            auto lcm = mono_lcm(li.e, lj.e);
            auto s = basis[i].mono_scaled(mono_div(lcm, li.e), field.inv(li.c)) -
                     basis[j].mono_scaled(mono_div(lcm, lj.e), field.inv(lj.c));
            if (!normal_form(std::move(s), basis).is_zero()) return false;
        }
    return true;
}

template <class F>
bool ideal_member(const Poly<F>& f, const GroebnerBasis<F>& gb) {
    if (f.is_zero()) return true;
    if (gb.basis.empty()) return false;
    return normal_form(f, gb.basis).is_zero();
}

// all products of m generators (combinations with repetition)
template <class F>
std::vector<Poly<F>> ideal_power(const std::vector<Poly<F>>& gens, std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("ideal power must be positive");
    if (gens.empty()) return {};
    std::vector<Poly<F>> out;
    std::vector<std::uint32_t> pick(m, 0);  // nondecreasing index tuples
    while (true) {
        auto p = gens[pick[0]];
        for (std::uint32_t t = 1; t < m; ++t) p = p * gens[pick[t]];
        out.push_back(std::move(p));
        std::size_t t = m;
        while (t > 0 && pick[t - 1] == gens.size() - 1) --t;
        if (t == 0) break;
        std::uint32_t next = pick[t - 1] + 1;
        for (std::size_t s = t - 1; s < m; ++s) pick[s] = next;
    }
    return out;
}

// I cap J by the usual trick: eliminate t from t*I + (1-t)*J.
template <class F>
std::vector<Poly<F>> ideal_intersection(const std::vector<Poly<F>>& I, const std::vector<Poly<F>>& J,
                                        const Budgets& budgets = {}) {
    std::vector<Poly<F>> a, b;
    for (const auto& g : I)
        if (!g.is_zero()) a.push_back(g);
    for (const auto& h : J)
        if (!h.is_zero()) b.push_back(h);
    if (a.empty() || b.empty()) return {};
    auto ring = a.front().ring();
    for (const auto& g : a)
        if (!same_ring(g.ring(), ring)) throw std::invalid_argument("generators from different rings");
    for (const auto& h : b)
        if (!same_ring(h.ring(), ring)) throw std::invalid_argument("generators from different rings");

    std::uint32_t nv = ring->nvars;
    std::vector<std::uint32_t> perm(nv + 1);
    perm[0] = nv;  // t sits in the eliminated block
    for (std::uint32_t i = 0; i < nv; ++i) perm[i + 1] = i;
    auto ext = make_ring<F>(nv + 1, ring->field, MonomialOrder::block_elim(1, std::move(perm)));

    std::vector<std::uint32_t> up(nv);
    for (std::uint32_t i = 0; i < nv; ++i) up[i] = i;
    auto t = Poly<F>::variable(ext, nv);
    auto one_minus_t = Poly<F>::from_int(ext, 1) - t;
    std::vector<Poly<F>> gens;
    for (const auto& g : a) gens.push_back(t * Poly<F>::transplant(g, ext, up));
    for (const auto& h : b) gens.push_back(one_minus_t * Poly<F>::transplant(h, ext, up));

    auto gb = buchberger(gens, budgets);
    std::vector<Poly<F>> out;
    for (const auto& g : gb.basis) {
        bool t_free = true;
        for (const auto& term : g.terms())
            if (term.e[nv] != 0) {
                t_free = false;
                break;
            }
        if (!t_free) continue;
        std::vector<Term<F>> terms;
        for (const auto& term : g.terms())
            terms.push_back({Exponents(term.e.begin(), term.e.begin() + nv), term.c});
        out.push_back(Poly<F>::from_terms(ring, std::move(terms)));
    }
    return out;
}

// reduced bases agree
template <class F>
bool ideal_equality(const std::vector<Poly<F>>& A, const std::vector<Poly<F>>& B,
                    const Budgets& budgets = {}) {
    std::vector<Poly<F>> a, b;
    for (const auto& g : A)
        if (!g.is_zero()) a.push_back(g);
    for (const auto& h : B)
        if (!h.is_zero()) b.push_back(h);
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    return buchberger(a, budgets).basis == buchberger(b, budgets).basis;
}

}  // namespace fermatlab
