// Acceptance gate: ten fixed checks, one PASS/FAIL line each.
// Exits 0 only if every check passes.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "fermatlab/arrangement.hpp"
#include "fermatlab/bracket.hpp"
#include "fermatlab/containment.hpp"
#include "fermatlab/fields.hpp"
#include "fermatlab/graded.hpp"
#include "fermatlab/groebner.hpp"
#include "fermatlab/poly.hpp"

using namespace fermatlab;

namespace {

int failures = 0;

template <class Fn>
void check(int idx, const char* what, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%2d/10] %s  %s  (%.1fs)\n", idx, ok ? "PASS" : "FAIL", what, secs);
    if (!detail.empty()) std::printf("        exception: %s\n", detail.c_str());
    if (!ok) ++failures;
    std::fflush(stdout);
}

// 1. bracket rules, exact over Q, every k <= 4 and n in {3,4,5}
bool lemma_suite() {
    for (std::uint32_t k = 1; k <= 4; ++k)
        for (std::uint32_t n : {3u, 4u, 5u}) {
            if (!verify_expansion_rule(k, n)) return false;
            if (!verify_laplace_expansion(k, n)) return false;
            if (!verify_substitution_rule(k, n, k + 1)) return false;
            if (!verify_substitution_rule(k, n, 0)) return false;
            if (!verify_useful_rule(k, n)) return false;
        }
    return true;
}

// 2. flat counts against the closed formula and the hyperplane-pair oracle
bool flat_census() {
    if (enumerate_flats({2, 3}).size() != 12) return false;
    auto choose = [](std::uint64_t a, std::uint64_t b) {
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    for (std::uint32_t N : {2u, 3u, 4u})
        for (std::uint32_t n : {3u, 4u, 5u}) {
            FermatConfig cfg{N, n};
            std::uint64_t formula =
                choose(N + 1, 2) + std::uint64_t(n) * n * choose(N + 1, 3);
            if (enumerate_flats(cfg).size() != formula) return false;
            if (expected_flat_count(cfg) != formula) return false;
            if (!brute_force_flat_census(cfg).ok()) return false;
        }
    return true;
}

// 3. the (2,3) noncontainment, fully pinned
bool base_case() {
    ContainOptions opts;
    opts.field = FieldChoice::Rational;
    opts.nf_crosscheck = true;
    auto rep = check_noncontainment({2, 3}, 3, 2, opts);
    if (!rep.symbolic_done || !rep.symbolic.member || rep.symbolic.min_order != 3) return false;
    auto flats = enumerate_flats({2, 3});
    bool saw_coord = false, saw_triple = false;
    for (std::size_t i = 0; i < flats.size(); ++i) {
        if (rep.symbolic.orders.at(i) != 3) return false;
        (flats[i].kind == Flat::Kind::Coordinate ? saw_coord : saw_triple) = true;
    }
    if (!saw_coord || !saw_triple) return false;
    if (rep.runs.size() != 1) return false;
    const auto& run = rep.runs.front();
    if (!run.completed || run.present) return false;
    if (run.rows_full != 55 || run.cols != 18) return false;
    if (!rep.nf_agrees.has_value() || !*rep.nf_agrees) return false;
    return rep.overall == Verdict::Confirmed;
}

// 4. the three remaining desk-scale cases, exact over Q
bool desk_cases() {
    for (FermatConfig cfg : {FermatConfig{3, 3}, FermatConfig{2, 4}, FermatConfig{2, 5}}) {
        ContainOptions opts;
        opts.field = FieldChoice::Rational;
        auto rep = check_noncontainment(cfg, 3, 2, opts);
        if (rep.overall != Verdict::Confirmed) return false;
        const auto& run = rep.runs.front();
        if (!run.completed || run.present) return false;
        if (run.rows_full > 1330 || run.cols > 210) return false;
    }
    return true;
}

// 5. (4,3) modulo two primes congruent to 1 mod 3
bool evidence_case() {
    ContainOptions opts;
    opts.field = FieldChoice::Primes;
    opts.primes = {13, 31};
    auto rep = check_noncontainment({4, 3}, 3, 2, opts);
    if (rep.overall != Verdict::Evidence) return false;
    if (rep.runs.size() != 2) return false;
    for (const auto& run : rep.runs)
        if (!run.completed || run.present) return false;
    return rep.runs.front().rows_full == 46376 && rep.runs.front().cols == 825;
}

// 6. the three (2,3) generators cut out exactly the 12 flats
bool generator_completeness() {
    auto rp = make_ring<PrimeField>(3, PrimeField(7, 3));
    if (verify_flat_ideal_completeness(rp, {2, 3}) != TriState::True) return false;
    auto rc = make_ring<CyclotomicField>(3, CyclotomicField(3));
    return verify_flat_ideal_completeness(rc, {2, 3}) == TriState::True;
}

// 7. cone intersection at (3,3)
bool cone_case() {
    auto r7 = make_ring<PrimeField>(4, PrimeField(7, 3));
    if (verify_cone_intersection(r7, {3, 3}) != TriState::True) return false;
    auto r13 = make_ring<PrimeField>(4, PrimeField(13, 3));
    return verify_cone_intersection(r13, {3, 3}) == TriState::True;
}

// 8. the induction identities behind the generator description
bool induction_identities() {
    for (std::uint32_t N : {3u, 4u, 5u}) {
        auto rep = verify_prop32_identities({N, 3});
        if (rep.checks.empty() || !rep.all_pass()) return false;
    }
    return true;
}

// 9. coefficient bookkeeping of the contradiction, all seven configurations
bool trace_suite() {
    const FermatConfig cfgs[] = {{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {4, 3}, {5, 3}};
    for (const auto& cfg : cfgs) {
        bool scan = cfg.n == 3 && (cfg.N == 2 || cfg.N == 3);
        auto tr = proof_trace(cfg, scan);
        if (tr.steps.empty() || !tr.all_match() || !tr.contradiction_reached) return false;
        if (scan && (!tr.uniqueness_checked || !tr.uniqueness_ok)) return false;
        if (!scan && tr.uniqueness_checked) return false;
    }
    return true;
}

template <class F>
bool field_axioms(const F& field, const std::vector<typename F::Elem>& samples) {
    for (const auto& a : samples)
        for (const auto& b : samples) {
            if (!field.eq(field.add(a, b), field.add(b, a))) return false;
            if (!field.eq(field.mul(a, b), field.mul(b, a))) return false;
            if (!field.eq(field.add(a, field.neg(a)), field.zero())) return false;
            if (!field.is_zero(b)) {
                if (!field.eq(field.mul(b, field.inv(b)), field.one())) return false;
                if (!field.eq(field.div(field.mul(a, b), b), a)) return false;
            }
            for (const auto& c : samples)
                if (!field.eq(field.mul(a, field.add(b, c)),
                              field.add(field.mul(a, b), field.mul(a, c))))
                    return false;
        }
    return true;
}

// 10. axioms, normal-form idempotence, certificate soundness, and
//     groebner-vs-graded agreement on 100 random homogeneous instances
bool property_suites() {
    {
        RationalField Q;
        if (!field_axioms(Q, {Q.parse("0"), Q.parse("1"), Q.parse("-3/2"), Q.parse("7/5")}))
            return false;
        PrimeField P(13, 3);
        if (!field_axioms(P, {P.from_int(0), P.from_int(1), P.from_int(5), P.root_of_unity(3, 1)}))
            return false;
        CyclotomicField K(3);
        if (!field_axioms(K, {K.zero(), K.one(), K.root_of_unity(3, 1),
                              K.add(K.one(), K.root_of_unity(3, 2))}))
            return false;
    }

    PrimeField P(13);
    auto r = make_ring<PrimeField>(3, P);
    std::mt19937 rng(20230816);
    auto random_homog = [&](std::uint32_t deg, int nterms) {
        std::vector<Term<PrimeField>> terms;
        auto mons = monomials_of_degree(3, deg);
        for (int t = 0; t < nterms; ++t)
            terms.push_back({mons[rng() % mons.size()], rng() % 13});
        return Poly<PrimeField>::from_terms(r, std::move(terms));
    };

    int instances = 0, present_seen = 0, absent_seen = 0;
    for (int trial = 0; instances < 100 && trial < 500; ++trial) {
        std::vector<Poly<PrimeField>> gens = {random_homog(2, 2), random_homog(3, 2)};
        if (gens[0].is_zero() || gens[1].is_zero()) continue;
        auto f = trial % 2 == 0
                     ? gens[0].mono_scaled(monomials_of_degree(3, 2)[rng() % 6], 1 + rng() % 12) +
                           gens[1].mono_scaled(monomials_of_degree(3, 1)[rng() % 3], 1 + rng() % 12)
                     : random_homog(4, 3);
        if (f.is_zero()) continue;
        ++instances;

        // ring axioms on this instance
        if ((f + gens[0]) * gens[1] != f * gens[1] + gens[0] * gens[1]) return false;
        if (f * gens[0] != gens[0] * f) return false;
        if (!(f - f).is_zero()) return false;

        auto gb = buchberger(gens);
        auto nf1 = normal_form(f, gb.basis);
        if (normal_form(nf1, gb.basis) != nf1) return false;

        bool via_gb = ideal_member(f, gb);
        auto graded = graded_membership(f, gens);
        if (graded.present != via_gb) return false;

        if (graded.present) {
            auto rebuilt = Poly<PrimeField>::zero(r);
            for (const auto& t : graded.combination)
                rebuilt = rebuilt + gens[t.gen].mono_scaled(t.multiplier, t.coeff);
            if (rebuilt != f) return false;
        }
        (via_gb ? present_seen : absent_seen) += 1;
    }
    return instances == 100 && present_seen > 0 && absent_seen > 0;
}

}  // namespace

int main() {
    check(1, "bracket rules k<=4, n in {3,4,5}", lemma_suite);
    check(2, "flat census vs formula and pair oracle", flat_census);
    check(3, "noncontainment at (2,3) over Q, pinned shape", base_case);
    check(4, "noncontainment at (3,3),(2,4),(2,5) over Q", desk_cases);
    check(5, "noncontainment evidence at (4,3) mod 13 and 31", evidence_case);
    check(6, "generators equal flat intersection at (2,3)", generator_completeness);
    check(7, "cone intersection at (3,3) mod 7 and 13", cone_case);
    check(8, "induction identities N in {3,4,5}", induction_identities);
    check(9, "proof trace, seven configurations", trace_suite);
    check(10, "property suites, 100 random instances", property_suites);
    if (failures) std::printf("%d of 10 failed\n", failures);
    return failures == 0 ? 0 : 1;
}
