#pragma once

/**
 * @file integer.hpp
 * @brief Exact integer arithmetic used throughout the library.
 *
 * Public values are arbitrary-precision (`Int`). Hot loops over residues
 * switch to a native 64-bit representation with 128-bit intermediate
 * products whenever the modulus fits; the dispatch is internal and callers
 * never see it.
 */

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcoset {

// et_off: operators return plain values, so Int composes with std::min/max
// and templated kernels without expression-template surprises.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

/// Thrown when a computation would exceed a configured scan/memory budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(const Int& v) { return v.str(); }

/// a*b mod n without overflow (n may be any u64 value).
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % n);
}

inline Int mulmod(const Int& a, const Int& b, const Int& n) { return a * b % n; }

inline Int pow_int(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

/// Exact division; a remainder means a formula was evaluated outside its
/// divisibility domain and is a hard error, never silent truncation.
inline Int exact_div(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("exact_div: division by zero");
    Int q = num / den;
    if (q * den != num)
        throw std::domain_error("exact_div: " + num.str() + " is not divisible by " + den.str());
    return q;
}

inline bool fits_u64(const Int& v) {
    return v >= 0 && v <= Int(std::numeric_limits<std::uint64_t>::max());
}

inline std::uint64_t to_u64(const Int& v) { return static_cast<std::uint64_t>(v); }

} // namespace qcoset
