#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fermatlab/groebner.hpp"
#include "fermatlab/rational.hpp"

// Degree-by-degree membership for homogeneous ideals: f lies in (g_1,...,g_k)
// in degree d iff f is a linear combination of the products m * g_i with m a
// monomial of degree d - deg g_i.  That is a linear system over the base
// field, solved here by sparse column elimination.  Over Q the answer is
// exact; over F_p an "absent" is only evidence (a denominator of the true
// combination could vanish mod p) while "present" transfers nothing.

namespace fermatlab {

inline Integer homogeneous_dimension(std::uint32_t nvars, std::uint64_t degree) {
    if (nvars == 0) throw std::invalid_argument("need at least one variable");
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), degree + nvars - 1, nvars - 1);
    return r;
}

namespace detail {

inline void monomials_rec(std::size_t pos, std::uint32_t left, Exponents& cur,
                          std::vector<Exponents>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = left;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
        cur[pos] = e;
        monomials_rec(pos + 1, left - e, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace detail

// all exponent vectors of the given total degree, first variable heaviest first
inline std::vector<Exponents> monomials_of_degree(std::uint32_t nvars, std::uint32_t degree) {
    if (nvars == 0) throw std::invalid_argument("need at least one variable");
    std::vector<Exponents> out;
    Exponents cur(nvars, 0);
    detail::monomials_rec(0, degree, cur, out);
    return out;
}

template <class F>
struct CertTerm {
    std::size_t gen;        // index into the generator list
    Exponents multiplier;   // monomial cofactor
    typename F::Elem coeff;
};

template <class F>
struct GradedResult {
    bool present = false;
    long long degree = -1;
    Integer rows_full = 0;            // dim of the full degree-d piece
    std::uint64_t cols = 0;           // number of products m * g_i
    std::uint64_t rows_touched = 0;   // monomials actually appearing
    std::vector<CertTerm<F>> combination;  // nonempty exactly when present (and f != 0)
};

// rows_full and cols of the system graded_membership would build, without
// building it.  Used to pick a field before committing to the elimination.
template <class F>
std::pair<Integer, std::uint64_t> graded_matrix_shape(const Poly<F>& f,
                                                      const std::vector<Poly<F>>& gens) {
    if (f.is_zero()) return {Integer(0), 0};
    if (!f.is_homogeneous()) throw std::invalid_argument("graded test needs homogeneous f");
    const auto ring = f.ring();
    long long d = f.degree();
    Integer cols = 0;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw std::invalid_argument("graded test needs homogeneous generators");
        if (g.degree() > d) continue;
        cols += homogeneous_dimension(ring->nvars, static_cast<std::uint64_t>(d - g.degree()));
    }
    if (!cols.fits_ulong_p()) throw std::overflow_error("column count does not fit");
    return {homogeneous_dimension(ring->nvars, static_cast<std::uint64_t>(d)),
            static_cast<std::uint64_t>(cols.get_ui())};
}

template <class F>
GradedResult<F> graded_membership(const Poly<F>& f, const std::vector<Poly<F>>& gens,
                                  const Budgets& budgets = {}) {
    using Elem = typename F::Elem;
    GradedResult<F> out;
    if (f.is_zero()) {
        out.present = true;
        return out;
    }
    const auto ring = f.ring();
    const auto& field = ring->field;
    for (const auto& g : gens)
        if (!same_ring(g.ring(), ring)) throw std::invalid_argument("generators from a different ring");
    auto [rows_full, col_count] = graded_matrix_shape(f, gens);
    long long d = f.degree();
    out.degree = d;
    out.rows_full = rows_full;
    out.cols = col_count;
    if (col_count == 0) return out;  // nothing to combine

    {
        Integer cells = rows_full * Integer(static_cast<unsigned long>(col_count));
        if (cells > Integer(static_cast<unsigned long>(budgets.max_matrix_cells)))
            throw BudgetExceeded("graded matrix cells", budgets.max_matrix_cells);
    }

    // column layout: generators in order, multipliers in the fixed enumeration
    struct ColKey {
        std::size_t gen;
        Exponents mult;
    };
    std::vector<ColKey> layout;
    layout.reserve(col_count);
    std::vector<Poly<F>> colpoly;
    colpoly.reserve(col_count);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& g = gens[gi];
        if (g.is_zero() || g.degree() > d) continue;
        for (auto& m : monomials_of_degree(ring->nvars, static_cast<std::uint32_t>(d - g.degree()))) {
            colpoly.push_back(g.mono_scaled(m, field.one()));
            layout.push_back({gi, std::move(m)});
        }
    }

    // intern the monomials that actually appear; row 0 is the largest
    typename Poly<F>::ExpCmpDesc desc{&ring->order};
    std::map<Exponents, std::uint32_t, typename Poly<F>::ExpCmpDesc> row_of(desc);
    for (const auto& t : f.terms()) row_of.emplace(t.e, 0);
    for (const auto& c : colpoly)
        for (const auto& t : c.terms()) row_of.emplace(t.e, 0);
    std::uint32_t next_row = 0;
    for (auto& [e, idx] : row_of) idx = next_row++;
    out.rows_touched = next_row;

    using Entry = std::pair<std::uint32_t, Elem>;  // (row, value), rows ascending
    using SVec = std::vector<Entry>;
    auto to_svec = [&](const Poly<F>& p) {
        SVec v;
        v.reserve(p.terms().size());
        for (const auto& t : p.terms()) v.push_back({row_of.at(t.e), t.c});
        return v;  // term order descending = row order ascending
    };

    // c -= lambda * p on the sparse parts
    auto axpy = [&](const SVec& c, const Elem& lambda, const SVec& p) {
        SVec r;
        r.reserve(c.size() + p.size());
        std::size_t i = 0, j = 0;
        while (i < c.size() || j < p.size()) {
            if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
                r.push_back(c[i++]);
            } else if (i == c.size() || p[j].first < c[i].first) {
                Elem v = field.neg(field.mul(lambda, p[j].second));
                if (!field.is_zero(v)) r.push_back({p[j].first, std::move(v)});
                ++j;
            } else {
                Elem v = field.sub(c[i].second, field.mul(lambda, p[j].second));
                if (!field.is_zero(v)) r.push_back({c[i].first, std::move(v)});
                ++i, ++j;
            }
        }
        return r;
    };

    constexpr std::uint32_t kNoPivot = 0xffffffffu;
    std::vector<SVec> stored;              // reduced, front value 1
    std::vector<std::vector<Elem>> combos; // stored[s] = sum combos[s][t] * column_t
    std::vector<std::uint32_t> pivot_of_row(out.rows_touched, kNoPivot);

    auto combo_axpy = [&](std::vector<Elem>& gamma, const Elem& lambda, const std::vector<Elem>& src,
                          bool add) {
        for (std::size_t t = 0; t < gamma.size(); ++t) {
            Elem delta = field.mul(lambda, src[t]);
            gamma[t] = add ? field.add(gamma[t], delta) : field.sub(gamma[t], delta);
        }
    };

    for (std::size_t j = 0; j < colpoly.size(); ++j) {
        SVec c = to_svec(colpoly[j]);
        std::vector<Elem> gamma(col_count, field.zero());
        gamma[j] = field.one();
        while (!c.empty()) {
            std::uint32_t pv = pivot_of_row[c.front().first];
            if (pv == kNoPivot) break;
            Elem lambda = c.front().second;
            c = axpy(c, lambda, stored[pv]);
            combo_axpy(gamma, lambda, combos[pv], /*add=*/false);
        }
        if (c.empty()) continue;  // dependent column
        Elem scale = field.inv(c.front().second);
        for (auto& e : c) e.second = field.mul(e.second, scale);
        for (auto& v : gamma) v = field.mul(v, scale);
        pivot_of_row[c.front().first] = static_cast<std::uint32_t>(stored.size());
        stored.push_back(std::move(c));
        combos.push_back(std::move(gamma));
    }

    // reduce f; the running gamma keeps f - sum gamma_t * column_t = residue
    SVec residue = to_svec(f);
    std::vector<Elem> gamma(col_count, field.zero());
    while (!residue.empty()) {
        std::uint32_t pv = pivot_of_row[residue.front().first];
        if (pv == kNoPivot) break;
        Elem lambda = residue.front().second;
        residue = axpy(residue, lambda, stored[pv]);
        combo_axpy(gamma, lambda, combos[pv], /*add=*/true);
    }
    if (!residue.empty()) return out;  // independent: not in the ideal's degree-d piece

    out.present = true;
    auto check = Poly<F>::zero(ring);
    for (std::size_t t = 0; t < col_count; ++t) {
        if (field.is_zero(gamma[t])) continue;
        out.combination.push_back({layout[t].gen, layout[t].mult, gamma[t]});
        check = check + gens[layout[t].gen].mono_scaled(layout[t].mult, gamma[t]);
    }
    if (check != f) throw std::logic_error("graded certificate failed to reconstruct");
    return out;
}

}  // namespace fermatlab
