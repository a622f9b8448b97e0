#include "fermatlab/fields.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace fermatlab {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Exact quotient of integer polynomials, divisor monic.  Ascending coefficients.
std::vector<Integer> exact_div_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
    if (den.empty() || den.back() != 1) throw std::logic_error("divisor not monic");
    if (num.size() < den.size()) throw std::logic_error("degree underflow in exact division");
    std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
    for (std::size_t qd = quot.size(); qd-- > 0;) {
        Integer c = num[qd + den.size() - 1];
        quot[qd] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < den.size(); ++i) num[qd + i] -= c * den[i];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return quot;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    static std::map<unsigned, std::vector<Integer>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Integer> result;
    if (n == 1) {
        result = {Integer(-1), Integer(1)};
    } else {
        std::vector<Integer> num(n + 1, Integer(0));
        num[0] = -1;
        num[n] = 1;
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) num = exact_div_monic(std::move(num), cyclotomic_polynomial(d));
        result = std::move(num);
    }
    cache[n] = result;
    return result;
}

CyclotomicField::CyclotomicField(unsigned n) : n_(n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    phi_poly_ = cyclotomic_polynomial(n);
    phi_ = static_cast<unsigned>(phi_poly_.size() - 1);
    phi_q_.reserve(phi_poly_.size());
    for (const auto& c : phi_poly_) phi_q_.emplace_back(c);
}

CycElem CyclotomicField::add(const Elem& a, const Elem& b) const {
    check(a); check(b);
    Elem r = a;
    for (unsigned i = 0; i < phi_; ++i) r.c[i] += b.c[i];
    return r;
}

CycElem CyclotomicField::sub(const Elem& a, const Elem& b) const {
    check(a); check(b);
    Elem r = a;
    for (unsigned i = 0; i < phi_; ++i) r.c[i] -= b.c[i];
    return r;
}

CycElem CyclotomicField::neg(const Elem& a) const {
    check(a);
    Elem r = a;
    for (auto& q : r.c) q = -q;
    return r;
}

CycElem CyclotomicField::mul(const Elem& a, const Elem& b) const {
    check(a); check(b);
    std::vector<Rational> conv(2 * phi_ - 1, Rational(0));
    for (unsigned i = 0; i < phi_; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; j < phi_; ++j) {
            if (b.c[j] == 0) continue;
            conv[i + j] += a.c[i] * b.c[j];
        }
    }
    for (std::size_t d = conv.size(); d-- > phi_;) {
        if (conv[d] == 0) continue;
        Rational c = conv[d];
        conv[d] = 0;
        for (unsigned i = 0; i < phi_; ++i) conv[d - phi_ + i] -= c * phi_q_[i];
    }
    conv.resize(phi_);
    return Elem{std::move(conv)};
}

CycElem CyclotomicField::inv(const Elem& a) const {
    check(a);
    if (is_zero(a)) throw std::domain_error("division by zero in " + name());
    // extended Euclid in Q[t] between a (degree < phi) and Phi_n
    auto deg = [](const std::vector<Rational>& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i] != 0) return static_cast<long>(i);
        return -1L;
    };
    std::vector<Rational> r0 = phi_q_, r1 = a.c;
    std::vector<Rational> s0(1, Rational(0)), s1(1, Rational(1));  // coefficients on a
    while (deg(r1) > -1) {
        long d0 = deg(r0), d1 = deg(r1);
        if (d0 < d1) { std::swap(r0, r1); std::swap(s0, s1); continue; }
        // r0 -= (lead ratio) t^(d0-d1) r1, one step
        Rational q = r0[d0] / r1[d1];
        long shift = d0 - d1;
        if (r0.size() < static_cast<std::size_t>(d0 + 1)) r0.resize(d0 + 1, Rational(0));
        for (long i = 0; i <= d1; ++i) r0[i + shift] -= q * r1[i];
        std::size_t need = s1.size() + shift;
        if (s0.size() < need) s0.resize(need, Rational(0));
        for (std::size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= q * s1[i];
        if (deg(r0) < deg(r1)) { std::swap(r0, r1); std::swap(s0, s1); }
    }
    long d0 = deg(r0);
    if (d0 != 0) throw std::domain_error("element not invertible (modulus not irreducible?)");
    Rational lead = r0[0];
    std::vector<Rational> out(phi_, Rational(0));
    for (std::size_t i = 0; i < s0.size() && i < phi_; ++i) out[i] = s0[i] / lead;
    // s0 may exceed phi-1 in degree; reduce mod Phi if so
    if (s0.size() > phi_) {
        std::vector<Rational> full(s0.begin(), s0.end());
        for (std::size_t d = full.size(); d-- > phi_;) {
            if (full[d] == 0) continue;
            Rational c = full[d];
            full[d] = 0;
            for (unsigned i = 0; i < phi_; ++i) full[d - phi_ + i] -= c * phi_q_[i];
        }
        for (unsigned i = 0; i < phi_; ++i) out[i] = i < full.size() ? full[i] / lead : Rational(0);
    }
    Elem r{std::move(out)};
    if (!eq(mul(r, a), one())) throw std::logic_error("inverse verification failed");
    return r;
}

CycElem CyclotomicField::root_of_unity(unsigned n, long long a) const {
    if (n != n_)
        throw std::invalid_argument("field is " + name() + ", not cyclotomic:" + std::to_string(n));
    long long r = a % static_cast<long long>(n_);
    if (r < 0) r += n_;
    Elem e = one();
    for (long long k = 0; k < r; ++k) {
        // multiply by t: shift up, reduce if degree reaches phi
        std::vector<Rational> v(phi_ + 1, Rational(0));
        for (unsigned i = 0; i < phi_; ++i) v[i + 1] = e.c[i];
        if (v[phi_] != 0) {
            Rational c = v[phi_];
            v[phi_] = 0;
            for (unsigned i = 0; i < phi_; ++i) v[i] -= c * phi_q_[i];
        }
        v.resize(phi_);
        e.c = std::move(v);
    }
    return e;
}

std::string CyclotomicField::str(const Elem& a) const {
    check(a);
    std::string body;
    for (unsigned i = 0; i < phi_; ++i) {
        if (a.c[i] == 0) continue;
        Rational mag = abs(a.c[i]);
        bool negative = a.c[i] < 0;
        if (body.empty()) {
            if (negative) body += "-";
        } else {
            body += negative ? "-" : "+";
        }
        std::string magstr = mag.get_str();
        if (i == 0) {
            body += magstr;
        } else {
            if (magstr != "1") body += magstr + "*";
            body += (i == 1) ? "z" : "z^" + std::to_string(i);
        }
    }
    if (body.empty()) body = "0";
    return "(" + body + ")";
}

CycElem CyclotomicField::parse(const std::string& s) const {
    std::string t = s;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    if (t.empty()) throw std::invalid_argument("empty cyclotomic literal");
    Elem out = zero();
    std::size_t pos = 0;
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') { neg = t[0] == '-'; pos = 1; }
    while (pos <= t.size()) {
        std::size_t end = pos;
        while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
        std::string piece = t.substr(pos, end - pos);
        if (piece.empty()) throw std::invalid_argument("bad cyclotomic literal: " + s);
        Rational coeff(1);
        unsigned power = 0;
        std::size_t zpos = piece.find('z');
        if (zpos == std::string::npos) {
            coeff = rational_from_string(piece);
        } else {
            std::string cpart = piece.substr(0, zpos);
            if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
            if (!cpart.empty()) coeff = rational_from_string(cpart);
            std::string ppart = piece.substr(zpos + 1);
            if (ppart.empty()) power = 1;
            else if (ppart[0] == '^') power = static_cast<unsigned>(std::stoul(ppart.substr(1)));
            else throw std::invalid_argument("bad cyclotomic literal: " + s);
        }
        if (power >= phi_) throw std::invalid_argument("power z^" + std::to_string(power) + " out of basis range");
        out.c[power] += neg ? Rational(-coeff) : coeff;
        if (end == t.size()) break;
        neg = t[end] == '-';
        pos = end + 1;
    }
    return out;
}

}  // namespace fermatlab
