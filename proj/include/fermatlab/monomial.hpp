#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermatlab {

using Exponents = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kMaxExponent = 0x7fffffffu;

inline std::uint64_t total_degree(const Exponents& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

inline Exponents mono_mul(const Exponents& a, const Exponents& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(a[i]) + b[i];
        if (s > kMaxExponent) throw std::overflow_error("exponent overflow");
        r[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

inline bool mono_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents mono_div(const Exponents& b, const Exponents& a) {
    Exponents r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (a[i] > b[i]) throw std::invalid_argument("monomial does not divide");
        r[i] = b[i] - a[i];
    }
    return r;
}

inline Exponents mono_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

enum class OrderKind { Lex, GrevLex, Block };

// Monomial order with optional variable permutation.  perm[k] is the variable
// occupying position k of the comparison; empty perm means identity.  Block
// orders compare the first `block` positions (grevlex among themselves) before
// the rest, so those variables are eliminated first.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::uint32_t block = 0;
    std::vector<std::uint32_t> perm;

    static MonomialOrder lex() { return {OrderKind::Lex, 0, {}}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0, {}}; }
    static MonomialOrder block_elim(std::uint32_t block_size, std::vector<std::uint32_t> permutation) {
        return {OrderKind::Block, block_size, std::move(permutation)};
    }

    std::uint32_t at(std::size_t k) const { return perm.empty() ? static_cast<std::uint32_t>(k) : perm[k]; }

    // > 0 when a is larger, < 0 when smaller.
    int compare(const Exponents& a, const Exponents& b) const {
        std::size_t nv = a.size();
        switch (kind) {
            case OrderKind::Lex: {
                for (std::size_t k = 0; k < nv; ++k) {
                    std::uint32_t av = a[at(k)], bv = b[at(k)];
                    if (av != bv) return av > bv ? 1 : -1;
                }
                return 0;
            }
            case OrderKind::GrevLex:
                return grevlex_range(a, b, 0, nv);
            case OrderKind::Block: {
                if (int c = grevlex_range(a, b, 0, block)) return c;
                return grevlex_range(a, b, block, nv);
            }
        }
        return 0;
    }

    bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && block == o.block && perm == o.perm;
    }

private:
    int grevlex_range(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) const {
        std::uint64_t da = 0, db = 0;
        for (std::size_t k = lo; k < hi; ++k) { da += a[at(k)]; db += b[at(k)]; }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t k = hi; k-- > lo;) {
            std::uint32_t av = a[at(k)], bv = b[at(k)];
            if (av != bv) return av < bv ? 1 : -1;
        }
        return 0;
    }
};

}  // namespace fermatlab
