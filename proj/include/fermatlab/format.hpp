#pragma once

#include <cctype>
#include <string>

#include "json.hpp"

#include "fermatlab/fields.hpp"
#include "fermatlab/poly.hpp"

namespace fermatlab {

using Json = nlohmann::ordered_json;

// --- coefficient serialization -----------------------------------------------

inline Json coeff_to_json(const RationalField& f, const Rational& c) { return f.str(c); }
inline Rational coeff_from_json(const RationalField& f, const Json& j) { return f.parse(j.get<std::string>()); }

inline Json coeff_to_json(const PrimeField& f, PrimeField::Elem c) { return f.str(c); }
inline PrimeField::Elem coeff_from_json(const PrimeField& f, const Json& j) { return f.parse(j.get<std::string>()); }

inline Json coeff_to_json(const CyclotomicField&, const CycElem& c) {
    Json arr = Json::array();
    for (const auto& q : c.c) arr.push_back(q.get_str());
    return arr;
}
inline CycElem coeff_from_json(const CyclotomicField& f, const Json& j) {
    if (!j.is_array() || j.size() != f.degree())
        throw std::invalid_argument("cyclotomic coefficient needs " + std::to_string(f.degree()) + " entries");
    CycElem e = f.zero();
    for (std::size_t i = 0; i < j.size(); ++i) e.c[i] = rational_from_string(j[i].get<std::string>());
    return e;
}

// --- display helpers ----------------------------------------------------------

struct CoeffDisplay {
    bool negative;
    bool is_unit_mag;  // magnitude prints as bare 1
    std::string text;  // magnitude text
};

inline CoeffDisplay coeff_display(const RationalField&, const Rational& c) {
    Rational mag = abs(c);
    return {c < 0, mag == 1, mag.get_str()};
}
inline CoeffDisplay coeff_display(const PrimeField& f, PrimeField::Elem c) {
    return {false, c == f.one(), f.str(c)};
}
inline CoeffDisplay coeff_display(const CyclotomicField& f, const CycElem& c) {
    return {false, f.eq(c, f.one()), f.str(c)};
}

// --- polynomial text format ----------------------------------------------------
// terms descending in the ring order; "-3/2*x0^2*x1 + x2^3 - 1" style.

template <class F>
std::string to_text(const Poly<F>& p) {
    if (p.is_zero()) return "0";
    const auto& field = p.ring()->field;
    std::string out;
    for (const auto& t : p.terms()) {
        CoeffDisplay d = coeff_display(field, t.c);
        if (out.empty()) {
            if (d.negative) out += "-";
        } else {
            out += d.negative ? " - " : " + ";
        }
        std::string mono;
        for (std::uint32_t v = 0; v < p.ring()->nvars; ++v) {
            if (t.e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(v);
            if (t.e[v] > 1) mono += "^" + std::to_string(t.e[v]);
        }
        if (mono.empty()) {
            out += d.text;
        } else if (d.is_unit_mag) {
            out += mono;
        } else {
            out += d.text + "*" + mono;
        }
    }
    return out;
}

namespace detail {

inline std::string strip_spaces(const std::string& s) {
    std::string r;
    r.reserve(s.size());
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) r += ch;
    return r;
}

}  // namespace detail

template <class F>
Poly<F> poly_from_text(RingPtr<F> ring, const std::string& text) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    if (s == "0") return Poly<F>::zero(ring);
    const auto& field = ring->field;
    std::vector<Term<F>> terms;

    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; pos = 1; }
    while (pos < s.size()) {
        // scan one term, respecting parentheses
        std::size_t end = pos;
        int depth = 0;
        while (end < s.size()) {
            char ch = s[end];
            if (ch == '(') ++depth;
            else if (ch == ')') --depth;
            else if ((ch == '+' || ch == '-') && depth == 0 && s[end - 1] != '^') break;
            ++end;
        }
        if (depth != 0) throw std::invalid_argument("unbalanced parentheses: " + text);
        std::string piece = s.substr(pos, end - pos);
        if (piece.empty()) throw std::invalid_argument("empty term in: " + text);

        auto coeff = field.one();
        bool saw_coeff = false;
        Exponents e(ring->nvars, 0);
        std::size_t fpos = 0;
        while (fpos < piece.size()) {
            std::size_t fend = fpos;
            int d2 = 0;
            while (fend < piece.size()) {
                char ch = piece[fend];
                if (ch == '(') ++d2;
                else if (ch == ')') --d2;
                else if (ch == '*' && d2 == 0) break;
                ++fend;
            }
            std::string factor = piece.substr(fpos, fend - fpos);
            if (factor.empty()) throw std::invalid_argument("empty factor in: " + text);
            if (factor[0] == 'x') {
                std::size_t caret = factor.find('^');
                std::string idx_str = factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
                if (idx_str.empty()) throw std::invalid_argument("bad variable token: " + factor);
                unsigned long idx = std::stoul(idx_str);
                if (idx >= ring->nvars) throw std::invalid_argument("variable x" + idx_str + " out of range");
                unsigned long pw = 1;
                if (caret != std::string::npos) pw = std::stoul(factor.substr(caret + 1));
                std::uint64_t total = static_cast<std::uint64_t>(e[idx]) + pw;
                if (total > kMaxExponent) throw std::overflow_error("exponent overflow");
                e[idx] = static_cast<std::uint32_t>(total);
            } else {
                auto c = field.parse(factor);
                coeff = saw_coeff ? field.mul(coeff, c) : c;
                saw_coeff = true;
            }
            fpos = fend + (fend < piece.size() ? 1 : 0);
        }
        if (neg) coeff = field.neg(coeff);
        terms.push_back({std::move(e), std::move(coeff)});

        if (end == s.size()) break;
        neg = s[end] == '-';
        pos = end + 1;
    }
    return Poly<F>::from_terms(std::move(ring), std::move(terms));
}

// --- polynomial JSON format ----------------------------------------------------
// {"vars": ["x0", ...], "terms": [{"c": <coeff>, "e": [..]}, ...]}

template <class F>
Json poly_to_json(const Poly<F>& p) {
    Json vars = Json::array();
    for (std::uint32_t v = 0; v < p.ring()->nvars; ++v) vars.push_back("x" + std::to_string(v));
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json jt;
        jt["c"] = coeff_to_json(p.ring()->field, t.c);
        jt["e"] = t.e;
        terms.push_back(std::move(jt));
    }
    Json out;
    out["vars"] = std::move(vars);
    out["terms"] = std::move(terms);
    return out;
}

template <class F>
Poly<F> poly_from_json(RingPtr<F> ring, const Json& j) {
    if (!j.contains("vars") || !j.contains("terms")) throw std::invalid_argument("polynomial json needs vars and terms");
    if (j["vars"].size() != ring->nvars) throw std::invalid_argument("vars length != ring nvars");
    std::vector<Term<F>> terms;
    for (const auto& jt : j["terms"]) {
        Term<F> t;
        t.c = coeff_from_json(ring->field, jt.at("c"));
        auto ev = jt.at("e").get<std::vector<std::uint64_t>>();
        if (ev.size() != ring->nvars) throw std::invalid_argument("exponent length != nvars");
        t.e.resize(ev.size());
        for (std::size_t i = 0; i < ev.size(); ++i) {
            if (ev[i] > kMaxExponent) throw std::overflow_error("exponent overflow");
            t.e[i] = static_cast<std::uint32_t>(ev[i]);
        }
        terms.push_back(std::move(t));
    }
    return Poly<F>::from_terms(std::move(ring), std::move(terms));
}

}  // namespace fermatlab
