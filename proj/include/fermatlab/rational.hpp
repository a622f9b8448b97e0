#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fermatlab {

using Integer = mpz_class;
using Rational = mpq_class;

// "num" or "num/den", canonical (gcd 1, den > 0).
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace fermatlab
