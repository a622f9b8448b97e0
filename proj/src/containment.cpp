#include "fermatlab/containment.hpp"

#include <optional>
#include <utility>

#include "fermatlab/bracket.hpp"
#include "fermatlab/format.hpp"

namespace fermatlab {
namespace {

using QF = RationalField;
using QPoly = Poly<QF>;

void subsets_rec(std::uint32_t nv, std::uint32_t k, std::uint32_t start,
                 std::vector<std::uint32_t>& cur,
                 std::vector<std::vector<std::uint32_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t i = start; i < nv; ++i) {
        cur.push_back(i);
        subsets_rec(nv, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::uint32_t>> lex_subsets(std::uint32_t nv, std::uint32_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    subsets_rec(nv, k, 0, cur, out);
    return out;
}

// (prod of x_i, i in A) [A] [B] over the rationals, for explicit index lists.
QPoly gen_for(const RingPtr<QF>& ring, std::uint32_t n,
              const std::vector<std::uint32_t>& A, const std::vector<std::uint32_t>& B) {
    auto g = expand_bracket(ring, A, n) * expand_bracket(ring, B, n);
    Exponents e(ring->nvars, 0);
    for (auto i : A) e[i] += 1;
    return g.mono_scaled(e, Rational(1));
}

std::vector<std::uint32_t> erased(std::vector<std::uint32_t> v, std::uint32_t i) {
    v.erase(std::remove(v.begin(), v.end(), i), v.end());
    return v;
}

std::vector<std::uint32_t> index_range(std::uint32_t lo, std::uint32_t hi) {  // inclusive
    std::vector<std::uint32_t> v;
    for (std::uint32_t i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

template <class F>
OrdinaryRun graded_run(const RingPtr<F>& ring, const FermatConfig& cfg, std::uint32_t r,
                       const Budgets& budgets) {
    OrdinaryRun run;
    run.field = ring->field.name();
    auto f = fermat_polynomial(ring, cfg.N, cfg.n);
    auto pw = ideal_power(arrangement_ideal_generators(ring, cfg), r);
    try {
        auto res = graded_membership(f, pw, budgets);
        run.completed = true;
        run.present = res.present;
        run.rows_full = res.rows_full;
        run.cols = res.cols;
        run.rows_touched = res.rows_touched;
    } catch (const BudgetExceeded& e) {
        run.note = std::string("budget exceeded: ") + e.what();
    }
    return run;
}

template <class F>
std::optional<bool> nf_member(const RingPtr<F>& ring, const FermatConfig& cfg, std::uint32_t r,
                              const Budgets& budgets, std::string& note) {
    try {
        auto gb = buchberger(ideal_power(arrangement_ideal_generators(ring, cfg), r), budgets);
        return normal_form(fermat_polynomial(ring, cfg.N, cfg.n), gb.basis).is_zero();
    } catch (const BudgetExceeded& e) {
        note = std::string("normal-form crosscheck budget exceeded: ") + e.what();
        return std::nullopt;
    }
}

void append_note(std::string& dst, const std::string& extra) {
    if (extra.empty()) return;
    if (!dst.empty()) dst += "; ";
    dst += extra;
}

}  // namespace

Prop32Report verify_prop32_identities(const FermatConfig& cfg) {
    validate_config(cfg);
    if (cfg.N < 3) throw std::invalid_argument("identity checks need N >= 3");
    Prop32Report rep;
    rep.cfg = cfg;
    const std::uint32_t N = cfg.N, n = cfg.n;
    auto ring = make_ring(N + 1, QF{});
    auto one = QPoly::from_int(ring, 1);

    auto check_equal = [&](std::string name, const QPoly& lhs, const QPoly& rhs) {
        Prop32Check c;
        c.name = std::move(name);
        c.pass = (lhs == rhs);
        if (!c.pass) c.diff = to_text(lhs - rhs);
        rep.checks.push_back(std::move(c));
    };
    auto check_up_to_sign = [&](std::string name, const QPoly& lhs, const QPoly& rhs) {
        Prop32Check c;
        c.name = std::move(name);
        c.pass = (lhs == rhs) || (lhs == -rhs);
        if (!c.pass) c.diff = to_text(lhs - rhs);
        rep.checks.push_back(std::move(c));
    };

    if (N % 2 == 0) {
        const std::uint32_t M = N / 2;
        auto A = index_range(0, M - 1);
        auto B = index_range(M, 2 * M);
        auto gA = gen_for(ring, n, A, B);

        for (std::uint32_t i = M; i <= 2 * M; ++i) {
            auto hA = gen_for(ring, n, A, erased(B, i));
            auto q = one;
            for (std::uint32_t j = M; j <= 2 * M; ++j)
                if (j != i) q = q * expand_bracket(ring, {j, i}, n);
            check_up_to_sign("g_A = +- prod_j [x_j x_i] h_A, i=" + std::to_string(i), gA, q * hA);
        }

        auto rhs = QPoly::zero(ring);
        auto common = QPoly::variable(ring, 0);
        for (std::uint32_t t = 1; t < M; ++t) common = common * expand_bracket(ring, {0, t}, n);
        for (std::uint32_t j = 0; j <= M; ++j) {
            auto Aj = index_range(1, M - 1);
            Aj.push_back(M + j);
            auto hAj = gen_for(ring, n, Aj, erased(B, M + j));
            Exponents pw(ring->nvars, 0);
            pw[M + j] = n - 1;
            auto term = (common * hAj).mono_scaled(pw, Rational(1));
            rhs = ((j + M - 1) % 2 == 0) ? rhs + term : rhs - term;
        }
        check_equal("g_A = sum_j (-1)^(j+M-1) x_0 x_(M+j)^(n-1) [x_0 x_1]..[x_0 x_(M-1)] h_(A_j)",
                    gA, rhs);
    } else {
        const std::uint32_t M = (N - 1) / 2;
        auto A = index_range(0, M);
        auto B = index_range(M + 1, 2 * M + 1);
        auto gA = gen_for(ring, n, A, B);

        for (std::uint32_t i = 0; i <= M; ++i) {
            auto gAp = gen_for(ring, n, erased(A, i), B);
            auto q = QPoly::variable(ring, i);
            for (std::uint32_t j = 0; j <= M; ++j)
                if (j != i) q = q * expand_bracket(ring, {j, i}, n);
            check_up_to_sign("g_A = +- x_i prod_j [x_j x_i] g_A', i=" + std::to_string(i), gA,
                             q * gAp);
        }

        auto rhs = QPoly::zero(ring);
        auto common = one;
        for (std::uint32_t t = M + 1; t <= 2 * M; ++t)
            common = common * expand_bracket(ring, {t, 2 * M + 1}, n);
        for (std::uint32_t j = 0; j <= M; ++j) {
            auto Bj = std::vector<std::uint32_t>{j};
            for (std::uint32_t t = M + 1; t <= 2 * M; ++t) Bj.push_back(t);
            auto gAj = gen_for(ring, n, erased(A, j), Bj);
            auto term = common * gAj * QPoly::variable(ring, j);
            rhs = (j % 2 == 0) ? rhs + term : rhs - term;
        }
        check_equal("g_A = sum_j (-1)^j x_j [x_(M+1) x_(2M+1)]..[x_(2M) x_(2M+1)] g_(A_j)", gA,
                    rhs);
    }
    return rep;
}

ProofTrace proof_trace(const FermatConfig& cfg, bool uniqueness_scan) {
    validate_config(cfg);
    ProofTrace tr;
    tr.cfg = cfg;
    tr.even_case = (cfg.N % 2 == 0);
    const std::uint32_t N = cfg.N, n = cfg.n, nv = N + 1;
    auto ring = make_ring(nv, QF{});

    // The substitutions x_0 := 0 and x_(N-1) := 0, the distinguished subset,
    // and the three tracked monomials.
    const std::uint32_t z1 = 0, z2 = N - 1;
    for (std::uint32_t i = tr.even_case ? 2 : 1; i <= N; i += 2) tr.distinguished_A.push_back(i);

    tr.m_monomial = Exponents(nv, 0);
    for (std::uint32_t i = 1; i <= N; ++i) tr.m_monomial[i] = (N + 1 - i) * n;
    tr.p_monomial = Exponents(nv, 0);
    for (auto i : tr.distinguished_A) tr.p_monomial[i] = n - 2;
    tr.m2_monomial = Exponents(nv, 0);
    {
        std::uint32_t mult = N;
        for (std::uint32_t i = 1; i + 2 <= N; ++i) tr.m2_monomial[i] = (mult--) * n;
        tr.m2_monomial[0] = 2 * n;
        tr.m2_monomial[N] = n;
    }
    if (tr.even_case)
        tr.literal_m2_note =
            "printed form of m' ends in x_(2N) = x_" + std::to_string(2 * N) +
            ", which is outside the ring; using the ladder consistent with the substitution "
            "x_" + std::to_string(z2) + " := 0 instead";

    auto f = fermat_polynomial(ring, N, n);
    auto g = arrangement_generator(ring, cfg, tr.distinguished_A);
    tr.generator_text = to_text(g);
    auto zero = QPoly::zero(ring);
    auto f1 = f.substitute_var(z1, zero), g1 = g.substitute_var(z1, zero);
    auto f2 = f.substitute_var(z2, zero), g2 = g.substitute_var(z2, zero);

    const Rational exp1 = tr.even_case ? 1 : -1;
    const Rational exp2 = -exp1;
    auto push = [&](std::string name, const Rational& expected, const Rational& computed) {
        tr.steps.push_back({std::move(name), expected, computed, expected == computed});
    };

    auto c_m = f1.coefficient_of(tr.m_monomial);
    push("coeff(m, f mod x0)", exp1, c_m);
    auto sq1 = g1 * g1;
    auto c1 = sq1.coefficient_of(mono_div(tr.m_monomial, tr.p_monomial));
    push("coeff(m/p, g^2 mod x0)", Rational(1), c1);
    Rational h1 = (c1 == 0) ? Rational(0) : Rational(c_m / c1);
    push("h at p, first substitution", exp1, h1);

    const std::string xz2 = "x" + std::to_string(z2);
    auto c_m2 = f2.coefficient_of(tr.m2_monomial);
    push("coeff(m', f mod " + xz2 + ")", exp2, c_m2);
    auto sq2 = g2 * g2;
    auto c2 = sq2.coefficient_of(mono_div(tr.m2_monomial, tr.p_monomial));
    push("coeff(m'/p, g^2 mod " + xz2 + ")", Rational(1), c2);
    Rational h2 = (c2 == 0) ? Rational(0) : Rational(c_m2 / c2);
    push("h at p, second substitution", exp2, h2);

    tr.contradiction_reached = tr.all_match() && h1 != h2;

    if (uniqueness_scan) {
        tr.uniqueness_checked = true;
        auto subsets = lex_subsets(nv, generator_subset_size(cfg));
        std::vector<QPoly> t1, t2;
        t1.reserve(subsets.size());
        t2.reserve(subsets.size());
        for (const auto& S : subsets) {
            auto gs = arrangement_generator(ring, cfg, S);
            t1.push_back(gs.substitute_var(z1, zero));
            t2.push_back(gs.substitute_var(z2, zero));
        }
        auto scan = [&](const std::vector<QPoly>& tg, const Exponents& target,
                        std::vector<PairHit>& hits) {
            for (std::size_t a = 0; a < tg.size(); ++a) {
                if (tg[a].is_zero()) continue;
                for (std::size_t b = a; b < tg.size(); ++b) {
                    if (tg[b].is_zero()) continue;
                    auto prod = tg[a] * tg[b];
                    for (const auto& t : prod.terms())
                        if (mono_divides(t.e, target))
                            hits.push_back({subsets[a], subsets[b], t.e, t.c});
                }
            }
        };
        scan(t1, tr.m_monomial, tr.hits_first);
        scan(t2, tr.m2_monomial, tr.hits_second);
        auto lone_hit = [&](const std::vector<PairHit>& hits, const Exponents& target) {
            return hits.size() == 1 && hits[0].A == tr.distinguished_A &&
                   hits[0].B == tr.distinguished_A &&
                   hits[0].mu == mono_div(target, tr.p_monomial) && hits[0].coeff == 1;
        };
        tr.uniqueness_ok =
            lone_hit(tr.hits_first, tr.m_monomial) && lone_hit(tr.hits_second, tr.m2_monomial);
    }
    return tr;
}

ContainReport check_noncontainment(const FermatConfig& cfg, std::uint32_t m, std::uint32_t r,
                                   const ContainOptions& opts) {
    validate_config(cfg);
    if (m == 0 || r == 0) throw std::invalid_argument("powers must be positive");
    ContainReport rep;
    rep.cfg = cfg;
    rep.m = m;
    rep.r = r;

    // Containments guaranteed by the uniform bound are never contested.
    if (els_hh_bound(m, r)) {
        rep.symbolic_verdict = "skipped";
        rep.ordinary_verdict = "skipped";
        rep.note = "I^(" + std::to_string(m) + ") lies in I^" + std::to_string(r) +
                   " whenever m >= 2r; nothing to refute";
        rep.overall = Verdict::Undecided;
        return rep;
    }

    {
        CyclotomicField cyc(cfg.n);
        auto ring = make_ring(cfg.N + 1, cyc);
        auto f = fermat_polynomial(ring, cfg.N, cfg.n);
        rep.symbolic = symbolic_membership(f, cfg, m);
        rep.symbolic_done = true;
        rep.symbolic_verdict =
            rep.symbolic.member
                ? "proved"
                : "failed (minimum order " + std::to_string(rep.symbolic.min_order) + " < " +
                      std::to_string(m) + ")";
    }

    bool use_rational = (opts.field == FieldChoice::Rational);
    if (opts.field == FieldChoice::Auto) {
        auto ring = make_ring(cfg.N + 1, QF{});
        auto f = fermat_polynomial(ring, cfg.N, cfg.n);
        auto pw = ideal_power(arrangement_ideal_generators(ring, cfg), r);
        auto [rows, cols] = graded_matrix_shape(f, pw);
        Integer cells = rows * Integer(static_cast<unsigned long>(cols));
        use_rational = cells <= Integer(static_cast<unsigned long>(opts.budgets.max_rational_cells));
    }

    std::vector<std::uint64_t> primes_used;
    if (use_rational) {
        auto ring = make_ring(cfg.N + 1, QF{});
        rep.runs.push_back(graded_run(ring, cfg, r, opts.budgets));
    } else {
        primes_used = opts.primes.empty() ? default_evidence_primes(cfg.n) : opts.primes;
        for (auto p : primes_used) {
            PrimeField field(p, cfg.n);
            auto ring = make_ring(cfg.N + 1, field);
            rep.runs.push_back(graded_run(ring, cfg, r, opts.budgets));
        }
    }

    bool any_incomplete = false, any_present = false;
    bool all_absent = !rep.runs.empty();
    for (const auto& run : rep.runs) {
        if (!run.completed) {
            any_incomplete = true;
            all_absent = false;
            append_note(rep.note, run.field + ": " + run.note);
        } else if (run.present) {
            any_present = true;
            all_absent = false;
        }
    }

    if (use_rational) {
        if (any_incomplete)
            rep.ordinary_verdict = "undecided (budget)";
        else
            rep.ordinary_verdict = rep.runs.front().present ? "failed (member over the rationals)"
                                                            : "proved";
    } else if (any_present) {
        std::string ps;
        for (const auto& run : rep.runs)
            if (run.completed && run.present) ps += (ps.empty() ? "" : ", ") + run.field;
        rep.ordinary_verdict = "inconclusive (member over " + ps + ")";
    } else if (any_incomplete) {
        rep.ordinary_verdict = "undecided (budget)";
    } else {
        std::string ps;
        for (auto p : primes_used) ps += (ps.empty() ? "" : ", ") + std::to_string(p);
        rep.ordinary_verdict = "evidence (p = " + ps + ")";
    }

    if (!rep.symbolic.member)
        rep.overall = Verdict::Mismatch;
    else if (use_rational && all_absent)
        rep.overall = Verdict::Confirmed;
    else if (use_rational && any_present)
        rep.overall = Verdict::Mismatch;
    else if (!use_rational && all_absent)
        rep.overall = Verdict::Evidence;
    else
        rep.overall = Verdict::Undecided;

    if (opts.nf_crosscheck) {
        std::string note;
        std::optional<bool> member;
        if (use_rational) {
            auto ring = make_ring(cfg.N + 1, QF{});
            rep.nf_field = ring->field.name();
            member = nf_member(ring, cfg, r, opts.budgets, note);
        } else {
            PrimeField field(primes_used.front(), cfg.n);
            auto ring = make_ring(cfg.N + 1, field);
            rep.nf_field = ring->field.name();
            member = nf_member(ring, cfg, r, opts.budgets, note);
        }
        append_note(rep.note, note);
        if (member.has_value()) {
            const OrdinaryRun* same = nullptr;
            for (const auto& run : rep.runs)
                if (run.field == rep.nf_field && run.completed) {
                    same = &run;
                    break;
                }
            if (same) {
                rep.nf_agrees = (*member == same->present);
                if (!*rep.nf_agrees) {
                    rep.overall = Verdict::Mismatch;
                    append_note(rep.note, "graded and normal-form membership disagree on " +
                                              rep.nf_field);
                }
            } else {
                append_note(rep.note, "no completed graded run on " + rep.nf_field +
                                          " to compare the normal form against");
            }
        }
    }
    return rep;
}

}  // namespace fermatlab
