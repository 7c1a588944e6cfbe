#pragma once

/**
 * @file params.hpp
 * @brief The parameter triple (q, m, n = q^m + 1) anchoring every computation.
 */

#include <stdexcept>
#include <string>

#include "qcoset/integer.hpp"

namespace qcoset {

namespace detail {

/// Smallest prime factor by trial division; q is small (<= ~10^3 in practice).
inline unsigned smallest_prime_factor(unsigned q) {
    for (unsigned p = 2; p * p <= q; ++p)
        if (q % p == 0) return p;
    return q;
}

inline bool is_prime_power(unsigned q, unsigned* prime_out = nullptr) {
    if (q < 2) return false;
    unsigned p = smallest_prime_factor(q);
    unsigned v = q;
    while (v % p == 0) v /= p;
    if (prime_out) *prime_out = p;
    return v == 1;
}

} // namespace detail

/**
 * Code length parameters: q a prime power, m >= 2, n = q^m + 1 exactly.
 *
 * The multiplier q satisfies q^m = -1 (mod n), so every q-cyclotomic coset
 * modulo n is closed under negation; all structure results downstream rely
 * on that shape.
 */
struct CodeParams {
    unsigned q = 0;
    unsigned m = 0;
    Int n;
    unsigned characteristic = 0; // the prime p with q = p^r

    static CodeParams make(unsigned q, unsigned m) {
        unsigned p = 0;
        if (!detail::is_prime_power(q, &p))
            throw std::domain_error("q must be a prime power >= 2 (got " + std::to_string(q) + ")");
        if (m < 2)
            throw std::domain_error("m must be >= 2 (got " + std::to_string(m) + ")");
        CodeParams cp;
        cp.q = q;
        cp.m = m;
        cp.n = pow_int(Int(q), m) + 1;
        cp.characteristic = p;
        if (boost::multiprecision::gcd(Int(q), cp.n) != 1)
            throw std::logic_error("gcd(q, n) != 1"); // impossible for n = q^m + 1
        return cp;
    }

    bool odd_q() const { return characteristic != 2; }
    bool even_q() const { return characteristic == 2; }
    bool odd_m() const { return m % 2 == 1; }
    bool even_m() const { return m % 2 == 0; }

    /// True when residues fit native 64-bit words (fast modular kernels).
    bool fits_fast() const { return fits_u64(n); }
    std::uint64_t n_u64() const { return to_u64(n); }
};

inline bool operator==(const CodeParams& a, const CodeParams& b) {
    return a.q == b.q && a.m == b.m;
}

} // namespace qcoset
