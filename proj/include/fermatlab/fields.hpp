#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermatlab/rational.hpp"

namespace fermatlab {

bool is_prime_u64(std::uint64_t n);

// Coefficients of Phi_n, ascending degree, monic integral.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

// ---------------------------------------------------------------------------
// Field of rational numbers.

class RationalField {
public:
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(long v) const { return Rational(v); }
    Elem from_rational(const Rational& q) const { return q; }

    Elem add(const Elem& a, const Elem& b) const { Elem r = a + b; return r; }
    Elem sub(const Elem& a, const Elem& b) const { Elem r = a - b; return r; }
    Elem mul(const Elem& a, const Elem& b) const { Elem r = a * b; return r; }
    Elem neg(const Elem& a) const { Elem r = -a; return r; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero in Q");
        Elem r = 1 / a;
        return r;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    // Q only carries the roots of unity +-1.
    Elem root_of_unity(std::uint64_t n, long long a) const {
        if (n == 0) throw std::invalid_argument("root order must be positive");
        long long r = a % static_cast<long long>(n);
        if (r < 0) r += static_cast<long long>(n);
        if (r == 0) return Rational(1);
        if (2 * static_cast<std::uint64_t>(r) == n) return Rational(-1);
        throw std::invalid_argument("zeta_" + std::to_string(n) + "^" + std::to_string(r) + " is not rational");
    }

    std::string str(const Elem& a) const { return a.get_str(); }
    Elem parse(const std::string& s) const { return rational_from_string(s); }

    std::string name() const { return "rational"; }
    bool operator==(const RationalField&) const { return true; }
};

// ---------------------------------------------------------------------------
// Prime field F_p, p < 2^63.  An arrangement order n may be recorded at
// construction; roots of unity are only available then, and construction
// checks p = 1 (mod n) so they exist.

class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : PrimeField(p, 0) {}

    PrimeField(std::uint64_t p, std::uint64_t n) : p_(p), n_(n) {
        if (p >= (1ull << 63)) throw std::invalid_argument("modulus too large");
        if (!is_prime_u64(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
        if (n_ > 0) {
            if (p_ % n_ != 1)
                throw std::invalid_argument("p = " + std::to_string(p_) + " is not 1 mod " + std::to_string(n_));
            zeta_ = smallest_root_of_order(n_);
        }
    }

    std::uint64_t modulus() const { return p_; }
    std::uint64_t recorded_order() const { return n_; }

    Elem zero() const { return 0; }
    Elem one() const { return p_ == 1 ? 0 : 1; }
    Elem from_int(long v) const {
        long long r = static_cast<long long>(v) % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem from_rational(const Rational& q) const {
        Integer num = q.get_num(), den = q.get_den();
        Elem n = mod_of(num), d = mod_of(den);
        if (d == 0) throw std::domain_error("denominator vanishes mod " + std::to_string(p_));
        return mul(n, inv(d));
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one(), base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero mod " + std::to_string(p_));
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    // zeta_n^a where n is the recorded order.
    Elem root_of_unity(std::uint64_t n, long long a) const {
        if (n_ == 0 || n != n_)
            throw std::invalid_argument("no order-" + std::to_string(n) + " root recorded for F_" + std::to_string(p_));
        long long r = a % static_cast<long long>(n_);
        if (r < 0) r += static_cast<long long>(n_);
        return pow(zeta_, static_cast<std::uint64_t>(r));
    }

    std::string str(Elem a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const {
        if (s.empty()) throw std::invalid_argument("empty residue literal");
        Integer z(s);
        return mod_of(z);
    }

    std::string name() const {
        std::string s = "prime:" + std::to_string(p_);
        return s;
    }
    bool operator==(const PrimeField& o) const { return p_ == o.p_ && n_ == o.n_; }

private:
    Elem mod_of(const Integer& z) const {
        mpz_class pz;
        mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p_), 0, 0, &p_);
        Integer r = z % pz;
        if (r < 0) r += pz;
        return static_cast<Elem>(mpz_get_ui(r.get_mpz_t()));
    }

    std::uint64_t smallest_root_of_order(std::uint64_t n) const {
        if (n == 1) return 1;
        std::vector<std::uint64_t> prime_divs;
        std::uint64_t m = n;
        for (std::uint64_t q = 2; q * q <= m; ++q)
            if (m % q == 0) {
                prime_divs.push_back(q);
                while (m % q == 0) m /= q;
            }
        if (m > 1) prime_divs.push_back(m);
        for (std::uint64_t x = 2; x < p_; ++x) {
            if (pow(x, n) != one()) continue;
            bool exact = true;
            for (auto q : prime_divs)
                if (pow(x, n / q) == one()) { exact = false; break; }
            if (exact) return x;
        }
        throw std::logic_error("no element of order " + std::to_string(n) + " in F_" + std::to_string(p_));
    }

    std::uint64_t p_;
    std::uint64_t n_;
    std::uint64_t zeta_ = 0;
};

// ---------------------------------------------------------------------------
// Cyclotomic field Q(zeta_n) as Q[t]/(Phi_n).  Elements are coefficient
// vectors of length phi(n) in the basis 1, t, ..., t^(phi-1).

struct CycElem {
    std::vector<Rational> c;
    bool operator==(const CycElem& o) const { return c == o.c; }
};

class CyclotomicField {
public:
    using Elem = CycElem;

    explicit CyclotomicField(unsigned n);

    unsigned order() const { return n_; }
    unsigned degree() const { return phi_; }
    const std::vector<Integer>& modulus_poly() const { return phi_poly_; }

    Elem zero() const { return Elem{std::vector<Rational>(phi_, Rational(0))}; }
    Elem one() const { return from_int(1); }
    Elem from_int(long v) const {
        Elem e = zero();
        e.c[0] = Rational(v);
        return e;
    }
    Elem from_rational(const Rational& q) const {
        Elem e = zero();
        e.c[0] = q;
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const {
        for (const auto& q : a.c)
            if (q != 0) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a.c == b.c; }

    // zeta_n^a; n must equal the field's order.
    Elem root_of_unity(unsigned n, long long a) const;

    std::string str(const Elem& a) const;
    Elem parse(const std::string& s) const;

    std::string name() const { return "cyclotomic:" + std::to_string(n_); }
    bool operator==(const CyclotomicField& o) const { return n_ == o.n_; }

private:
    void check(const Elem& a) const {
        if (a.c.size() != phi_) throw std::invalid_argument("element from a different cyclotomic field");
    }

    unsigned n_;
    unsigned phi_;
    std::vector<Integer> phi_poly_;
    std::vector<Rational> phi_q_;  // same, as rationals, for remainder steps
};

}  // namespace fermatlab
