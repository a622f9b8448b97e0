#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fermatlab/monomial.hpp"

namespace fermatlab {

template <class F>
struct PolyRing {
    std::uint32_t nvars;
    F field;
    MonomialOrder order;

    bool operator==(const PolyRing& o) const {
        return nvars == o.nvars && field == o.field && order == o.order;
    }
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
RingPtr<F> make_ring(std::uint32_t nvars, F field, MonomialOrder order = MonomialOrder::grevlex()) {
    if (!order.perm.empty() && order.perm.size() != nvars)
        throw std::invalid_argument("order permutation length != nvars");
    return std::make_shared<const PolyRing<F>>(PolyRing<F>{nvars, std::move(field), std::move(order)});
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    return a == b || (a && b && *a == *b);
}

template <class F>
struct Term {
    Exponents e;
    typename F::Elem c;
};

// Sparse multivariate polynomial.  Terms are kept sorted descending in the
// ring's monomial order with no zero coefficients, leading term first.
template <class F>
class Poly {
public:
    using Elem = typename F::Elem;

    Poly() = default;

    static Poly zero(RingPtr<F> ring) {
        Poly p;
        p.ring_ = std::move(ring);
        return p;
    }

    static Poly constant(RingPtr<F> ring, Elem c) {
        Poly p = zero(std::move(ring));
        if (!p.ring_->field.is_zero(c)) p.terms_.push_back({Exponents(p.ring_->nvars, 0), std::move(c)});
        return p;
    }

    static Poly from_int(RingPtr<F> ring, long v) {
        auto c = ring->field.from_int(v);
        return constant(std::move(ring), std::move(c));
    }

    static Poly variable(RingPtr<F> ring, std::uint32_t i) {
        if (i >= ring->nvars) throw std::invalid_argument("variable index out of range");
        Exponents e(ring->nvars, 0);
        e[i] = 1;
        auto c = ring->field.one();
        return monomial(std::move(ring), std::move(e), std::move(c));
    }

    static Poly monomial(RingPtr<F> ring, Exponents e, Elem c) {
        if (e.size() != ring->nvars) throw std::invalid_argument("exponent length != nvars");
        for (auto x : e)
            if (x > kMaxExponent) throw std::overflow_error("exponent overflow");
        Poly p = zero(std::move(ring));
        if (!p.ring_->field.is_zero(c)) p.terms_.push_back({std::move(e), std::move(c)});
        return p;
    }

    static Poly from_terms(RingPtr<F> ring, std::vector<Term<F>> terms) {
        const auto& field = ring->field;
        std::map<Exponents, Elem, ExpCmpDesc> acc(ExpCmpDesc{&ring->order});
        for (auto& t : terms) {
            if (t.e.size() != ring->nvars) throw std::invalid_argument("exponent length != nvars");
            auto [it, fresh] = acc.try_emplace(std::move(t.e), t.c);
            if (!fresh) it->second = field.add(it->second, t.c);
        }
        Poly p = zero(std::move(ring));
        p.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!field.is_zero(c)) p.terms_.push_back({e, std::move(c)});
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Term<F>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term<F>& leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.front();
    }

    // -1 for the zero polynomial.
    long long degree() const {
        long long d = -1;
        for (const auto& t : terms_) d = std::max<long long>(d, static_cast<long long>(total_degree(t.e)));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        std::uint64_t d = total_degree(terms_.front().e);
        for (const auto& t : terms_)
            if (total_degree(t.e) != d) return false;
        return true;
    }

    Elem coefficient_of(const Exponents& e) const {
        if (e.size() != ring_->nvars) throw std::invalid_argument("exponent length != nvars");
        for (const auto& t : terms_)
            if (t.e == e) return t.c;
        return ring_->field.zero();
    }

    std::uint64_t min_degree_in(const std::vector<std::uint32_t>& vars) const {
        if (terms_.empty()) throw std::domain_error("min_degree_in undefined on the zero polynomial");
        std::uint64_t best = UINT64_MAX;
        for (const auto& t : terms_) {
            std::uint64_t d = 0;
            for (auto v : vars) {
                if (v >= ring_->nvars) throw std::invalid_argument("variable index out of range");
                d += t.e[v];
            }
            best = std::min(best, d);
        }
        return best;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.c = ring_->field.neg(t.c);
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same(a, b);
        const auto& ring = a.ring_;
        const auto& field = ring->field;
        Poly r = zero(ring);
        if (a.is_zero() || b.is_zero()) return r;
        std::map<Exponents, Elem, ExpCmpDesc> acc(ExpCmpDesc{&ring->order});
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Exponents e = mono_mul(ta.e, tb.e);
                Elem c = field.mul(ta.c, tb.c);
                auto [it, fresh] = acc.try_emplace(std::move(e), std::move(c));
                if (!fresh) it->second = field.add(it->second, c);
            }
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!field.is_zero(c)) r.terms_.push_back({e, std::move(c)});
        return r;
    }

    bool operator==(const Poly& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        const auto& field = ring_->field;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].e != o.terms_[i].e || !field.eq(terms_[i].c, o.terms_[i].c)) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const Elem& c) const {
        const auto& field = ring_->field;
        if (field.is_zero(c)) return zero(ring_);
        Poly r = *this;
        for (auto& t : r.terms_) t.c = field.mul(t.c, c);
        return r;
    }

    // c * m * this, term order preserved.
    Poly mono_scaled(const Exponents& m, const Elem& c) const {
        const auto& field = ring_->field;
        if (field.is_zero(c)) return zero(ring_);
        Poly r = *this;
        for (auto& t : r.terms_) {
            t.e = mono_mul(t.e, m);
            t.c = field.mul(t.c, c);
        }
        return r;
    }

    Poly pow(std::uint32_t k) const {
        Poly r = from_int(ring_, 1);
        Poly base = *this;
        while (k) {
            if (k & 1) r = r * base;
            if (k >>= 1) base = base * base;
        }
        return r;
    }

    Poly substitute_var(std::uint32_t i, const Poly& image) const {
        if (i >= ring_->nvars) throw std::invalid_argument("variable index out of range");
        require_same(*this, image);
        std::vector<Poly> powers = {from_int(ring_, 1)};
        Poly acc = zero(ring_);
        for (const auto& t : terms_) {
            while (powers.size() <= t.e[i]) powers.push_back(powers.back() * image);
            Exponents rest = t.e;
            rest[i] = 0;
            acc = acc + powers[t.e[i]].mono_scaled(rest, t.c);
        }
        return acc;
    }

    Poly substitute_all(const std::vector<Poly>& images) const {
        if (images.size() != ring_->nvars) throw std::invalid_argument("need one image per variable");
        for (const auto& g : images) require_same(*this, g);
        Poly acc = zero(ring_);
        std::vector<std::vector<Poly>> powers(ring_->nvars);
        for (auto& v : powers) v.push_back(from_int(ring_, 1));
        for (const auto& t : terms_) {
            Poly prod = constant(ring_, t.c);
            for (std::uint32_t v = 0; v < ring_->nvars; ++v) {
                if (t.e[v] == 0) continue;
                while (powers[v].size() <= t.e[v]) powers[v].push_back(powers[v].back() * images[v]);
                prod = prod * powers[v][t.e[v]];
            }
            acc = acc + prod;
        }
        return acc;
    }

    Poly derivative(std::uint32_t i) const {
        if (i >= ring_->nvars) throw std::invalid_argument("variable index out of range");
        const auto& field = ring_->field;
        std::vector<Term<F>> out;
        for (const auto& t : terms_) {
            if (t.e[i] == 0) continue;
            Term<F> d = t;
            d.c = field.mul(d.c, field.from_int(static_cast<long>(d.e[i])));
            d.e[i] -= 1;
            if (!field.is_zero(d.c)) out.push_back(std::move(d));
        }
        return from_terms(ring_, std::move(out));
    }

    // Rebuild in another ring (same field), e.g. after an order change or
    // variable count extension.  var_map[i] = index of old variable i.
    static Poly transplant(const Poly& p, RingPtr<F> ring, const std::vector<std::uint32_t>& var_map) {
        if (var_map.size() != p.ring_->nvars) throw std::invalid_argument("var_map length mismatch");
        std::vector<Term<F>> terms;
        terms.reserve(p.terms_.size());
        for (const auto& t : p.terms_) {
            Exponents e(ring->nvars, 0);
            for (std::size_t i = 0; i < var_map.size(); ++i) {
                if (var_map[i] >= ring->nvars) throw std::invalid_argument("var_map target out of range");
                e[var_map[i]] = t.e[i];
            }
            terms.push_back({std::move(e), t.c});
        }
        return from_terms(std::move(ring), std::move(terms));
    }

    struct ExpCmpDesc {
        const MonomialOrder* ord;
        bool operator()(const Exponents& a, const Exponents& b) const { return ord->compare(a, b) > 0; }
    };

private:
    static void require_same(const Poly& a, const Poly& b) {
        if (!same_ring(a.ring_, b.ring_)) throw std::invalid_argument("polynomials from different rings");
    }

    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        require_same(a, b);
        const auto& ring = a.ring_;
        const auto& field = ring->field;
        Poly r = zero(ring);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int cmp;
            if (i == a.terms_.size()) cmp = -1;
            else if (j == b.terms_.size()) cmp = 1;
            else cmp = ring->order.compare(a.terms_[i].e, b.terms_[j].e);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                Term<F> t = b.terms_[j++];
                if (subtract) t.c = field.neg(t.c);
                r.terms_.push_back(std::move(t));
            } else {
                Elem c = subtract ? field.sub(a.terms_[i].c, b.terms_[j].c)
                                  : field.add(a.terms_[i].c, b.terms_[j].c);
                if (!field.is_zero(c)) r.terms_.push_back({a.terms_[i].e, std::move(c)});
                ++i; ++j;
            }
        }
        return r;
    }

    RingPtr<F> ring_;
    std::vector<Term<F>> terms_;
};

}  // namespace fermatlab
