#pragma once

/**
 * @file cosets.hpp
 * @brief q-cyclotomic cosets modulo n = q^m + 1: orbits, leader tests,
 *        leader enumeration. This is the exact ground-truth oracle the
 *        closed forms are checked against.
 *
 * Since q^m = -1 (mod n), the coset of x is {q^k x, n - q^k x : 0 <= k < m}
 * and x is a coset leader iff q^k x - x >= 0 and n - q^k x - x >= 0 for all
 * k in [0, m-1]. The leader test runs in O(m) time and O(1) memory with an
 * early exit, never materializing the orbit.
 */

#include <algorithm>
#include <optional>
#include <vector>

#include "qcoset/integer.hpp"
#include "qcoset/params.hpp"

namespace qcoset {

/// The first m power multiples y_{x,k} = q^k x mod n, k = 0..m-1.
struct YSequence {
    Int x;
    std::vector<Int> values;
};

struct Coset {
    Int leader;
    unsigned size = 0;
    std::optional<std::vector<Int>> elements; // sorted, deduplicated
};

inline constexpr std::uint64_t kDefaultScanBudget = 10'000'000;

namespace detail {

inline void require_in_range(const CodeParams& p, const Int& x, const Int& lo) {
    if (x < lo || x >= p.n)
        throw std::domain_error("x = " + x.str() + " out of range [" + lo.str() +
                                ", n-1] for n = " + p.n.str());
}

template <class T>
bool leader_test(T x, T q, T n, unsigned m) {
    if (x % q == 0) return false;   // q | x => x/q is in C_x
    if (n - x < x) return false;    // k = 0 negation bound
    T y = x;
    for (unsigned k = 1; k < m; ++k) {
        y = mulmod(y, q, n);
        if (y < x || n - y < x) return false;
    }
    return true;
}

/// min over the full orbit {y_k, n - y_k}, valid for any x (including q | x).
template <class T>
T leader_of(T x, T q, T n, unsigned m) {
    if (x == 0) return 0;
    T best = std::min(x, static_cast<T>(n - x));
    T y = x;
    for (unsigned k = 1; k < m; ++k) {
        y = mulmod(y, q, n);
        best = std::min(best, std::min(y, static_cast<T>(n - y)));
    }
    return best;
}

template <class T>
unsigned orbit_size(T x, T q, T n, unsigned m) {
    if (x == 0) return 1;
    T y = mulmod(x, q, n);
    unsigned l = 1;
    while (y != x) {
        y = mulmod(y, q, n);
        ++l;
        if (l > 2 * m)
            throw std::logic_error("orbit size exceeded 2m; parameters are inconsistent");
    }
    return l;
}

} // namespace detail

inline YSequence y_sequence(const CodeParams& p, const Int& x) {
    detail::require_in_range(p, x, 1);
    YSequence s;
    s.x = x;
    s.values.reserve(p.m);
    Int y = x;
    s.values.push_back(y);
    for (unsigned k = 1; k < p.m; ++k) {
        y = mulmod(y, Int(p.q), p.n);
        s.values.push_back(y);
    }
    return s;
}

/// Full orbit of x, sorted ascending. x = 0 gives {0}.
inline Coset orbit(const CodeParams& p, const Int& x) {
    detail::require_in_range(p, x, 0);
    std::vector<Int> elems;
    elems.reserve(2 * p.m);
    Int y = x;
    for (unsigned k = 0; k < p.m; ++k) {
        elems.push_back(y);
        elems.push_back((p.n - y) % p.n);
        if (k + 1 < p.m) y = mulmod(y, Int(p.q), p.n);
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Coset c;
    c.leader = elems.front();
    c.size = static_cast<unsigned>(elems.size());
    c.elements = std::move(elems);
    return c;
}

inline bool is_coset_leader(const CodeParams& p, const Int& x) {
    detail::require_in_range(p, x, 1);
    if (p.fits_fast())
        return detail::leader_test<std::uint64_t>(to_u64(x), p.q, p.n_u64(), p.m);
    return detail::leader_test<Int>(x, Int(p.q), p.n, p.m);
}

/// Smallest l >= 1 with q^l x = x (mod n); always divides 2m here.
inline unsigned coset_size(const CodeParams& p, const Int& x) {
    detail::require_in_range(p, x, 0);
    if (p.fits_fast())
        return detail::orbit_size<std::uint64_t>(to_u64(x), p.q, p.n_u64(), p.m);
    return detail::orbit_size<Int>(x, Int(p.q), p.n, p.m);
}

/// Canonical (smallest) representative of C_x; defined for every x.
inline Int canonical_leader(const CodeParams& p, const Int& x) {
    detail::require_in_range(p, x, 0);
    if (p.fits_fast())
        return Int(detail::leader_of<std::uint64_t>(to_u64(x), p.q, p.n_u64(), p.m));
    return detail::leader_of<Int>(x, Int(p.q), p.n, p.m);
}

namespace detail {

/// Dense scan: sieve the prefix [1, hi] by walking each coset once from its
/// first (= smallest) occurrence. O(hi + #cosets * m) time, hi bits memory.
inline std::vector<Int> leaders_sieve(const CodeParams& p, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t n = p.n_u64();
    const std::uint64_t q = p.q;
    std::vector<bool> seen(hi + 1, false);
    std::vector<Int> out;
    for (std::uint64_t x = 1; x <= hi; ++x) {
        if (seen[x]) continue;
        // first unseen value of its coset => x is the coset leader
        if (x >= lo && x % q != 0) out.push_back(Int(x));
        std::uint64_t y = x;
        for (unsigned k = 0; k < p.m; ++k) {
            if (y <= hi) seen[y] = true;
            std::uint64_t ny = n - y;
            if (ny <= hi) seen[ny] = true;
            y = mulmod(y, q, n);
        }
    }
    return out;
}

} // namespace detail

/**
 * All coset leaders x with lo <= x <= hi, ascending. Multiples of q are
 * never leaders and are skipped outright. Wide ranges (hi - lo > n/4) on
 * the native path use a sieving pass instead of per-x tests.
 */
inline std::vector<Int> leaders_in_range(const CodeParams& p, const Int& lo, const Int& hi) {
    if (lo < 1 || lo > hi || hi >= p.n)
        throw std::domain_error("leaders_in_range requires 1 <= lo <= hi <= n-1");
    if (p.fits_fast() && (hi - lo) * 4 > p.n)
        return detail::leaders_sieve(p, to_u64(lo), to_u64(hi));
    std::vector<Int> out;
    for (Int x = lo; x <= hi; ++x)
        if (is_coset_leader(p, x)) out.push_back(x);
    return out;
}

/**
 * The `count` largest leaders of nonzero cosets, descending, found by a
 * downward scan from n-1. Returns fewer entries when fewer nonzero cosets
 * exist. Throws budget_error when n exceeds `scan_budget`.
 */
inline std::vector<Int> largest_leaders(const CodeParams& p, std::size_t count,
                                        std::uint64_t scan_budget = kDefaultScanBudget) {
    if (count == 0) throw std::domain_error("largest_leaders requires count >= 1");
    if (!fits_u64(p.n) || p.n_u64() > scan_budget)
        throw budget_error("largest_leaders: n = " + p.n.str() +
                           " exceeds the exhaustive-scan budget " + std::to_string(scan_budget));
    const std::uint64_t n = p.n_u64();
    const std::uint64_t q = p.q;
    std::vector<Int> out;
    for (std::uint64_t x = n - 1; x >= 1 && out.size() < count; --x)
        if (detail::leader_test<std::uint64_t>(x, q, n, p.m)) out.push_back(Int(x));
    return out;
}

} // namespace qcoset
