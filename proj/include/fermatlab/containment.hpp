#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermatlab/arrangement.hpp"
#include "fermatlab/graded.hpp"
#include "fermatlab/groebner.hpp"

namespace fermatlab {

// Order of vanishing of the zero polynomial.
inline constexpr std::uint32_t kOrderInfinity = UINT32_MAX;

// Hasse derivative d^(s)/dx_i^(s): x^e -> C(e_i, s) x^(e - s e_i).  Unlike the
// iterated derivative this stays meaningful over prime fields (no s! factor).
template <class F>
Poly<F> hasse_derivative(const Poly<F>& f, std::uint32_t i, std::uint32_t s) {
    const auto& ring = f.ring();
    if (i >= ring->nvars) throw std::invalid_argument("variable index out of range");
    if (s == 0) return f;
    const auto& field = ring->field;
    std::vector<Term<F>> out;
    for (const auto& t : f.terms()) {
        if (t.e[i] < s) continue;
        Integer bin;
        mpz_bin_uiui(bin.get_mpz_t(), t.e[i], s);
        auto c = field.mul(t.c, field.from_rational(Rational(bin)));
        if (field.is_zero(c)) continue;
        Term<F> d{t.e, std::move(c)};
        d.e[i] -= s;
        out.push_back(std::move(d));
    }
    return Poly<F>::from_terms(ring, std::move(out));
}

// Order of vanishing of f along the flat: rewrite f in coordinates (u, v, rest)
// where u, v cut the flat, and take the minimal total (u, v)-degree.  The
// substitution is triangular: for a triple flat x_i = u + z^a (v + z^b x_k) and
// x_j = v + z^b x_k; for a coordinate flat simply x_i = u, x_j = v.
template <class F>
std::uint32_t vanishing_order(const Poly<F>& f, const Flat& flat, std::uint32_t n) {
    if (f.is_zero()) return kOrderInfinity;
    const auto& ring = f.ring();
    const std::uint32_t nv = ring->nvars;
    auto ext = make_ring(nv + 2, ring->field, MonomialOrder::grevlex());
    std::vector<std::uint32_t> embed(nv);
    std::iota(embed.begin(), embed.end(), 0);
    auto g = Poly<F>::transplant(f, ext, embed);
    auto u = Poly<F>::variable(ext, nv);
    auto v = Poly<F>::variable(ext, nv + 1);
    Poly<F> xi, xj;
    if (flat.kind == Flat::Kind::Coordinate) {
        xi = u;
        xj = v;
    } else {
        const auto& field = ring->field;
        long long a = flat.a, b = flat.b;
        xj = v + Poly<F>::variable(ext, flat.k).scaled(field.root_of_unity(n, b));
        xi = u + xj.scaled(field.root_of_unity(n, a));
    }
    g = g.substitute_var(flat.i, xi).substitute_var(flat.j, xj);
    if (g.is_zero()) throw std::logic_error("invertible substitution killed a nonzero polynomial");
    return static_cast<std::uint32_t>(g.min_degree_in({nv, nv + 1}));
}

// Same order through a different completion of the flat to a coordinate
// system; must agree with vanishing_order on every input.
template <class F>
std::uint32_t vanishing_order_alt(const Poly<F>& f, const Flat& flat, std::uint32_t n) {
    if (f.is_zero()) return kOrderInfinity;
    const auto& ring = f.ring();
    const std::uint32_t nv = ring->nvars;
    auto ext = make_ring(nv + 2, ring->field, MonomialOrder::grevlex());
    std::vector<std::uint32_t> embed(nv);
    std::iota(embed.begin(), embed.end(), 0);
    auto g = Poly<F>::transplant(f, ext, embed);
    auto u = Poly<F>::variable(ext, nv);
    auto v = Poly<F>::variable(ext, nv + 1);
    Poly<F> xi, xj;
    if (flat.kind == Flat::Kind::Coordinate) {
        xi = u + v;
        xj = v;
    } else {
        const auto& field = ring->field;
        long long a = flat.a, b = flat.b;
        auto xk = Poly<F>::variable(ext, flat.k);
        xi = u + xk.scaled(field.root_of_unity(n, a + b));
        xj = v + xk.scaled(field.root_of_unity(n, b));
    }
    g = g.substitute_var(flat.i, xi).substitute_var(flat.j, xj);
    if (g.is_zero()) throw std::logic_error("invertible substitution killed a nonzero polynomial");
    return static_cast<std::uint32_t>(g.min_degree_in({nv, nv + 1}));
}

// Third route to the same number, cheap when the order is small: the least
// s + t such that D^(s)_{x_i} D^(t)_{x_j} f does not vanish identically on the
// flat.  The directions x_i, x_j are transverse to the flat, so the scan finds
// exactly the (u, v)-order.
template <class F>
std::uint32_t vanishing_order_hasse(const Poly<F>& f, const Flat& flat, std::uint32_t n) {
    if (f.is_zero()) return kOrderInfinity;
    const auto d = static_cast<std::uint32_t>(f.degree());
    for (std::uint32_t level = 0; level <= d; ++level)
        for (std::uint32_t s = 0; s <= level; ++s) {
            auto g = hasse_derivative(hasse_derivative(f, flat.i, s), flat.j, level - s);
            if (!restrict_to_flat(g, flat, n).is_zero()) return level;
        }
    throw std::logic_error("vanishing order above the degree of a nonzero polynomial");
}

// Vanishing order of f on every flat of the arrangement, aligned with
// enumerate_flats.  Uses the derivative scan; the suite pins it against the
// substitution routes.
template <class F>
std::vector<std::uint32_t> flat_orders(const Poly<F>& f, const FermatConfig& cfg) {
    validate_config(cfg);
    auto flats = enumerate_flats(cfg);
    std::vector<std::uint32_t> out;
    out.reserve(flats.size());
    for (const auto& flat : flats) out.push_back(vanishing_order_hasse(f, flat, cfg.n));
    return out;
}

struct SymbolicResult {
    bool member = false;
    std::uint32_t m = 0;
    std::uint32_t min_order = 0;
    std::vector<std::uint32_t> orders;  // aligned with enumerate_flats
};

// f lies in the m-th symbolic power iff it vanishes to order >= m along every
// flat (Zariski-Nagata, radical ideal of a union of linear subspaces).
template <class F>
SymbolicResult symbolic_membership(const Poly<F>& f, const FermatConfig& cfg, std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("symbolic power must be positive");
    if (!f.is_homogeneous()) throw std::invalid_argument("symbolic membership needs a homogeneous polynomial");
    SymbolicResult r;
    r.m = m;
    r.orders = flat_orders(f, cfg);
    r.min_order = *std::min_element(r.orders.begin(), r.orders.end());
    r.member = r.min_order >= m;
    return r;
}

// m >= h r guarantees I^(m) in I^r (Ein-Lazarsfeld-Smith, Hochster-Huneke);
// h = 2 here since every minimal prime has height 2.
inline bool els_hh_bound(std::uint32_t m, std::uint32_t r, std::uint32_t h = 2) {
    if (m == 0 || r == 0 || h == 0) throw std::invalid_argument("els_hh_bound needs positive arguments");
    return m >= h * r;
}

// Smallest primes p = 1 (mod n), p > n: fields where all order-n roots of
// unity live, so mod-p runs mirror the rational setup.
inline std::vector<std::uint64_t> default_evidence_primes(std::uint32_t n, std::size_t count = 2) {
    if (n == 0) throw std::invalid_argument("order must be positive");
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = n + 1; ps.size() < count; p += n)
        if (is_prime_u64(p)) ps.push_back(p);
    return ps;
}

enum class TriState { False, True, Undecided };

// Lemma check: I_{N,n} equals the intersection of the N + 1 cone ideals.
// Resource overruns surface as Undecided, never as a wrong boolean.
template <class F>
TriState verify_cone_intersection(const RingPtr<F>& ring, const FermatConfig& cfg,
                                  const Budgets& budgets = {}) {
    validate_config(cfg);
    if (cfg.N < 3) throw std::invalid_argument("cone description needs N >= 3");
    if (ring->nvars != cfg.N + 1) throw std::invalid_argument("ring has wrong variable count");
    try {
        auto inter = cone_ideal_generators(ring, cfg, 0);
        for (std::uint32_t i = 1; i <= cfg.N; ++i)
            inter = ideal_intersection(inter, cone_ideal_generators(ring, cfg, i), budgets);
        return ideal_equality(inter, arrangement_ideal_generators(ring, cfg), budgets)
                   ? TriState::True
                   : TriState::False;
    } catch (const BudgetExceeded&) {
        return TriState::Undecided;
    }
}

// Base-case structure check: the arrangement ideal equals the intersection of
// the per-flat linear ideals.  The field must carry order-n roots of unity.
template <class F>
TriState verify_flat_ideal_completeness(const RingPtr<F>& ring, const FermatConfig& cfg,
                                        const Budgets& budgets = {}) {
    validate_config(cfg);
    if (ring->nvars != cfg.N + 1) throw std::invalid_argument("ring has wrong variable count");
    try {
        auto flats = enumerate_flats(cfg);
        auto inter = flat_linear_forms(ring, flats.front(), cfg.n);
        for (std::size_t t = 1; t < flats.size(); ++t)
            inter = ideal_intersection(inter, flat_linear_forms(ring, flats[t], cfg.n), budgets);
        return ideal_equality(inter, arrangement_ideal_generators(ring, cfg), budgets)
                   ? TriState::True
                   : TriState::False;
    } catch (const BudgetExceeded&) {
        return TriState::Undecided;
    }
}

// ---------------------------------------------------------------------------
// Non-containment report: F in I^(m) symbolically, F outside I^r by graded
// linear algebra.  Rational runs prove; prime runs only gather evidence.

enum class Verdict { Confirmed, Evidence, Mismatch, Undecided };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "CONFIRMED";
        case Verdict::Evidence: return "EVIDENCE";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::Undecided: return "UNDECIDED";
    }
    throw std::logic_error("unknown verdict");
}

enum class FieldChoice { Auto, Rational, Primes };

struct ContainOptions {
    FieldChoice field = FieldChoice::Auto;
    std::vector<std::uint64_t> primes;  // empty: default_evidence_primes(n)
    Budgets budgets;
    bool nf_crosscheck = false;  // also reduce F against a Groebner basis of I^r
};

struct OrdinaryRun {
    std::string field;
    bool completed = false;
    bool present = false;  // meaningful only when completed
    Integer rows_full = 0;
    std::uint64_t cols = 0;
    std::uint64_t rows_touched = 0;
    std::string note;
};

struct ContainReport {
    FermatConfig cfg{0, 0};
    std::uint32_t m = 0, r = 0;
    bool symbolic_done = false;
    SymbolicResult symbolic;
    std::string symbolic_verdict;
    std::string ordinary_method = "graded-linear";
    std::vector<OrdinaryRun> runs;
    std::string ordinary_verdict;
    std::optional<bool> nf_agrees;
    std::string nf_field;
    Verdict overall = Verdict::Undecided;
    std::string note;
};

ContainReport check_noncontainment(const FermatConfig& cfg, std::uint32_t m = 3,
                                   std::uint32_t r = 2, const ContainOptions& opts = {});

// ---------------------------------------------------------------------------
// Generator-identity checks behind the induction step of the generator
// description, and the coefficient trace behind the non-containment proof.

struct Prop32Check {
    std::string name;
    bool pass = false;
    std::string diff;  // nonzero difference polynomial, on failure
};

struct Prop32Report {
    FermatConfig cfg{0, 0};
    std::vector<Prop32Check> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

Prop32Report verify_prop32_identities(const FermatConfig& cfg);

struct TraceStep {
    std::string name;
    Rational expected;
    Rational computed;
    bool match = false;
};

// One (pair of generators, monomial) combination that can contribute the
// tracked monomial; the uniqueness scan expects exactly one per step.
struct PairHit {
    std::vector<std::uint32_t> A, B;
    Exponents mu;
    Rational coeff;
};

struct ProofTrace {
    FermatConfig cfg{0, 0};
    bool even_case = false;
    std::vector<std::uint32_t> distinguished_A;
    std::string generator_text;
    Exponents m_monomial, p_monomial, m2_monomial;
    std::vector<TraceStep> steps;
    bool contradiction_reached = false;
    std::string literal_m2_note;  // even case: the printed m' pattern is out of range
    bool uniqueness_checked = false;
    bool uniqueness_ok = false;
    std::vector<PairHit> hits_first, hits_second;

    bool all_match() const {
        for (const auto& s : steps)
            if (!s.match) return false;
        return true;
    }
};

ProofTrace proof_trace(const FermatConfig& cfg, bool uniqueness_scan = false);

}  // namespace fermatlab
