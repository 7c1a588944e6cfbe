#pragma once

/**
 * @file closed_forms.hpp
 * @brief Closed-form leader classification ranges, the ordered ladders of
 *        largest coset leaders for all four (parity of m, parity of q)
 *        cases, the telescoping products behind the even-m ladders, and the
 *        recursive interval partitions covering the non-leader zones.
 *
 * Every formula is evaluated in exact integer arithmetic; a non-exact
 * quotient anywhere is a hard error. Each ladder entry carries its proof
 * status so downstream reports can separate settled ranks from conjectured
 * ones.
 */

#include <optional>
#include <string>
#include <vector>

#include "qcoset/cosets.hpp"
#include "qcoset/integer.hpp"
#include "qcoset/params.hpp"

namespace qcoset {

// ---------------------------------------------------------------------------
// Leader classification by range
// ---------------------------------------------------------------------------

enum class LeaderClass { leader, non_leader, unclassified };

struct LeaderVerdict {
    LeaderClass value = LeaderClass::unclassified;
    std::string source; // range label, e.g. "T1.3 a=2"
};

namespace detail {

inline void require_q_ge3(const CodeParams& p, const char* who) {
    if (p.q < 3) throw std::domain_error(std::string(who) + " requires q >= 3");
}

} // namespace detail

/**
 * Range classification for odd m = 2t+1 >= 5 over 1 <= x <= 2q^{t+1}+2q-1
 * with q not dividing x. The covered ranges are exact; anything the ranges
 * deliberately leave out comes back `unclassified` rather than guessed.
 */
inline LeaderVerdict classify_leader_odd_m(const CodeParams& p, const Int& x) {
    detail::require_q_ge3(p, "classify_leader_odd_m");
    if (p.m % 2 == 0 || p.m < 5)
        throw std::domain_error("classify_leader_odd_m requires odd m >= 5");
    const unsigned t = (p.m - 1) / 2;
    const Int q = p.q;
    const Int P = pow_int(q, t);      // q^t
    const Int Q = P * q;              // q^{t+1}
    if (x < 1 || x > 2 * Q + 2 * p.q - 1)
        throw std::domain_error("x = " + x.str() + " outside [1, 2q^{t+1}+2q-1]");
    if (x % p.q == 0)
        throw std::domain_error("classification requires q not dividing x");

    if (x <= Q - p.q - 1) return {LeaderClass::leader, "T1.1"};
    if (x >= Q + p.q + 1 && x <= Q + P - 2) return {LeaderClass::leader, "T1.2"};
    for (unsigned a = 1; a + 2 <= p.q; ++a) {
        if (x >= Q + a * P + 2 && x <= Q + (a + 1) * P - 2)
            return {LeaderClass::leader, "T1.3 a=" + std::to_string(a)};
    }
    if (x >= Q + (p.q - 1) * P + 2 && x <= 2 * Q - 2 * p.q - 1)
        return {LeaderClass::leader, "T1.4"};
    for (unsigned a = 1; a <= p.q - 1; ++a)
        if (x == Q + a * P - 1 || x == Q + a * P + 1)
            return {LeaderClass::non_leader, "T1.5 a=" + std::to_string(a)};
    for (unsigned beta = 1; beta <= 2; ++beta)
        for (unsigned g = 1; g <= beta * p.q - 1; ++g)
            if (x == beta * Q - g || x == beta * Q + g)
                return {LeaderClass::non_leader, "T1.5 b=" + std::to_string(beta)};
    return {LeaderClass::unclassified, ""};
}

/// Range classification for even m = 2t >= 4 over 1 <= x <= 2q^t + 2.
inline LeaderVerdict classify_leader_even_m(const CodeParams& p, const Int& x) {
    detail::require_q_ge3(p, "classify_leader_even_m");
    if (p.m % 2 != 0 || p.m < 4)
        throw std::domain_error("classify_leader_even_m requires even m >= 4");
    const unsigned t = p.m / 2;
    const Int P = pow_int(Int(p.q), t); // q^t
    if (x < 1 || x > 2 * P + 2)
        throw std::domain_error("x = " + x.str() + " outside [1, 2q^t+2]");
    if (x % p.q == 0)
        throw std::domain_error("classification requires q not dividing x");

    if (x <= P - 1) return {LeaderClass::leader, "T4.1"};
    if (x >= P + 2 && x <= 2 * P - 2) return {LeaderClass::leader, "T4.2"};
    if (x == P + 1 || x == 2 * P - 1 || x == 2 * P + 1 || x == 2 * P + 2)
        return {LeaderClass::non_leader, "T4.3"};
    return {LeaderClass::unclassified, ""};
}

// ---------------------------------------------------------------------------
// Telescoping products for the even-m ladders
// ---------------------------------------------------------------------------

namespace detail {

inline Int phi_product(int x, unsigned q, const Int& prefix) {
    if (x > 12)
        throw budget_error("phi product exponent 2^" + std::to_string(x) + " beyond budget");
    Int v = prefix;
    for (int j = 0; j <= x; ++j)
        v *= pow_int(Int(q), 1u << j) - 1;
    return v;
}

} // namespace detail

/// (q-1)/2 * (q^{2^x}-1)(q^{2^{x-1}}-1)...(q-1) for x >= 0, else (q-1)/2.
inline Int phi(int x, unsigned q) {
    if (q % 2 == 0) throw std::domain_error("phi requires odd q (use phi_prime)");
    return detail::phi_product(x, q, Int(q - 1) / 2);
}

/// q/2 * (q^{2^x}-1)...(q-1) for x >= 0, else q/2.
inline Int phi_prime(int x, unsigned q) {
    if (q % 2 != 0) throw std::domain_error("phi_prime requires even q (use phi)");
    return detail::phi_product(x, q, Int(q) / 2);
}

// ---------------------------------------------------------------------------
// Recursive interval partitions (the non-leader zone bookkeeping)
// ---------------------------------------------------------------------------

struct Interval {
    Int a, b;
    bool operator==(const Interval& o) const { return a == o.a && b == o.b; }
};

namespace detail {

/// Shared doubling recursion: each step shifts the previous partition past
/// its last block and closes with one long interval up to the new bound.
inline std::vector<Interval> iterate_partition(unsigned t, const Int& first_hi,
                                               auto&& bound_at) {
    std::vector<Interval> part{{Int(1), first_hi}};
    for (unsigned s = 3; s <= t; ++s) {
        const std::size_t half = part.size();
        const Int shift = part[half - 1].b;
        std::vector<Interval> next = part;
        for (std::size_t j = 0; j + 1 < half; ++j)
            next.push_back({part[j].a + shift, part[j].b + shift});
        next.push_back({part[half - 1].a + shift, bound_at(s)});
        part = std::move(next);
    }
    return part;
}

} // namespace detail

/**
 * Partition of [1, (q-1)^2 q^{2t-5}] (odd q; [1, q-2] for t = 2) into
 * 2^{t-2} contiguous intervals. Consecutive-interval contiguity and the
 * overall bound are what the verification harness asserts.
 */
inline std::vector<Interval> ia1_partition(unsigned t, unsigned q) {
    if (t < 2) throw std::domain_error("ia1_partition requires t >= 2");
    if (q < 3 || q % 2 == 0) throw std::domain_error("ia1_partition requires odd q >= 3");
    return detail::iterate_partition(t, Int(q - 2), [&](unsigned s) {
        return Int(q - 1) * (q - 1) * pow_int(Int(q), 2 * s - 5);
    });
}

/// Even-q analogue over [1, (q-1) q^{2(t-2)}] ([1, q-1] for t = 2).
inline std::vector<Interval> ia2_partition(unsigned t, unsigned q) {
    if (t < 2) throw std::domain_error("ia2_partition requires t >= 2");
    if (q < 4 || q % 2 != 0) throw std::domain_error("ia2_partition requires even q >= 4");
    return detail::iterate_partition(t, Int(q - 1), [&](unsigned s) {
        return Int(q - 1) * pow_int(Int(q), 2 * (s - 2));
    });
}

// ---------------------------------------------------------------------------
// Delta ladders: the ordered largest coset leaders
// ---------------------------------------------------------------------------

enum class LadderCase { odd_m_odd_q, odd_m_even_q, even_m_odd_q, even_m_even_q };

enum class ProofStatus { proved, conjectured };

struct LadderEntry {
    unsigned rank = 0;
    Int value;
    ProofStatus status = ProofStatus::proved;
    std::optional<Int> size_claim; // claimed |C_{delta_i}|, when one exists
};

struct DeltaLadder {
    LadderCase kind = LadderCase::odd_m_odd_q;
    unsigned q = 0, m = 0;
    Int n;
    std::vector<LadderEntry> entries;
};

/**
 * Decomposition m = 2^r t + 2^{r-1} with r >= 2, t >= 1, used by the even-m
 * ladders; t = 0 marks the power-of-two shape m = 2^r.
 */
struct EvenMShape {
    unsigned r = 0;
    unsigned t = 0;
};

inline EvenMShape even_m_shape(unsigned m) {
    if (m < 2 || m % 2 != 0) throw std::domain_error("even_m_shape requires even m >= 2");
    unsigned v = 0, rest = m;
    while (rest % 2 == 0) {
        rest /= 2;
        ++v;
    }
    if (rest == 1) return {v, 0};          // m = 2^v
    return {v + 1, (rest - 1) / 2};        // m = 2^{v}(2t+1) = 2^{v+1} t + 2^{v}
}

/**
 * Ladder for odd m >= 3: six entries for odd q, five for even q, all proved.
 * The m = 3 and m = 5 tails differ from the generic m >= 7 formulas.
 * Size claims: odd q -> [1, 2, 2m, 2m, 2m, 2m]; even q -> first entry 2,
 * rest 2m, except the fifth is 2 at m = 5 and the third is 2 at m = 3.
 */
inline DeltaLadder delta_ladder_odd_m(const CodeParams& p) {
    detail::require_q_ge3(p, "delta_ladder_odd_m");
    if (p.m % 2 == 0)
        throw std::domain_error("m is even; use delta_ladder_even_m");
    const Int q = p.q;
    const Int n = p.n;
    const Int two_m = 2 * p.m;
    DeltaLadder lad;
    lad.q = p.q;
    lad.m = p.m;
    lad.n = n;
    std::vector<Int> d;
    std::vector<Int> sizes;

    if (p.odd_q()) {
        lad.kind = LadderCase::odd_m_odd_q;
        const Int d1 = exact_div(n, 2);
        const Int d2 = exact_div(n, q + 1) * exact_div(q - 1, 2);
        const Int d3 = d2 - exact_div(2 * d2 + (q - 1) * (q - 1), q * q);
        Int d4, d5, d6;
        if (p.m == 3) {
            d4 = d3 - 1;
            d5 = d4 - (q - 1);
            d6 = d5 - 1;
        } else if (p.m == 5) {
            d4 = d3 - (q - 1) * (q - 1);
            d5 = d4 - (q - 1);
            d6 = d5 - 1;
        } else {
            d4 = d3 - (q - 1) * (q - 1);
            d5 = d4 - (q * q - 1) * (q - 1) * (q - 1);
            d6 = d5 - (q - 1) * (q - 1);
        }
        d = {d1, d2, d3, d4, d5, d6};
        sizes = {1, 2, two_m, two_m, two_m, two_m};
    } else {
        lad.kind = LadderCase::odd_m_even_q;
        const Int d1 = exact_div(n, q + 1) * exact_div(q, 2);
        const Int d2 = d1 - exact_div(2 * d1 + (q - 1) * q, q * q);
        Int d3, d4, d5;
        if (p.m == 3) {
            d3 = d2 - (q - 1) * (q - 1);
            d4 = d3 - (q - 2);
            d5 = d4 - 1;
            sizes = {2, two_m, 2, two_m, two_m};
        } else if (p.m == 5) {
            d3 = d2 - q * (q - 1);
            d4 = d3 - q;
            d5 = d1 - exact_div(n, q + 1);
            sizes = {2, two_m, two_m, two_m, 2};
        } else {
            d3 = d2 - q * (q - 1);
            d4 = d3 - q * (q * q - 1) * (q - 1);
            d5 = d4 - q * (q - 1);
            sizes = {2, two_m, two_m, two_m, two_m};
        }
        d = {d1, d2, d3, d4, d5};
    }

    for (std::size_t i = 0; i < d.size(); ++i)
        lad.entries.push_back({static_cast<unsigned>(i + 1), d[i], ProofStatus::proved, sizes[i]});
    return lad;
}

/**
 * Ladder for even m >= 2. Odd q: ranks 1-2 proved, 3-4 conjectured, with
 * size claims 1 and (2^r, or 2m when m is a power of two) on the proved
 * ranks. Even q: rank 1 proved, 2-3 conjectured. Formula values that are
 * not positive (only q = 3, m = 2 produces one) are dropped.
 */
inline DeltaLadder delta_ladder_even_m(const CodeParams& p) {
    detail::require_q_ge3(p, "delta_ladder_even_m");
    if (p.m % 2 != 0)
        throw std::domain_error("m is odd; use delta_ladder_odd_m");
    const Int q = p.q;
    const Int n = p.n;
    const EvenMShape shape = even_m_shape(p.m);
    const unsigned r = shape.r;
    DeltaLadder lad;
    lad.q = p.q;
    lad.m = p.m;
    lad.n = n;
    std::vector<Int> d;
    std::vector<std::optional<Int>> sizes;
    std::size_t proved_ranks = 0;

    if (p.odd_q()) {
        lad.kind = LadderCase::even_m_odd_q;
        proved_ranks = 2;
        Int d1, d2, d3, d4;
        if (p.m == 2) {
            d1 = exact_div(n, 2);
            d2 = phi(0, p.q); // r = 1: the product collapses to (q-1)^2/2
            d3 = d2 - 1;
            d4 = d2 - (q - 1);
        } else if (shape.t == 0) { // m = 2^r >= 4
            d1 = exact_div(n, 2);
            d2 = phi(static_cast<int>(r) - 1, p.q);
            d3 = d2 - 2 * phi(static_cast<int>(r) - 3, p.q);
            d4 = p.m == 4 ? d3 - 1
                          : d2 - 2 * pow_int(q, 1u << (r - 2)) * phi(static_cast<int>(r) - 4, p.q);
        } else {
            d1 = exact_div(n, 2);
            d2 = exact_div(n, pow_int(q, 1u << (r - 1)) + 1) * phi(static_cast<int>(r) - 2, p.q);
            d3 = d2 - exact_div(2 * (d2 + phi(static_cast<int>(r) - 1, p.q)),
                                pow_int(q, 1u << r));
            d4 = shape.t == 1 ? d3 - q * (q - 1) * (q - 1)
                              : d3 - 2 * phi(static_cast<int>(r) - 1, p.q);
        }
        d = {d1, d2, d3, d4};
        const Int c2 = shape.t == 0 ? Int(2 * p.m) : pow_int(Int(2), r);
        sizes = {Int(1), c2, std::nullopt, std::nullopt};
    } else {
        lad.kind = LadderCase::even_m_even_q;
        proved_ranks = 1;
        Int d1, d2, d3;
        if (p.m == 2) {
            d1 = exact_div(q * (q - 1), 2);
            d2 = d1 - (q - 1);
            d3 = d2 - 1;
        } else if (shape.t == 0) {
            d1 = phi_prime(static_cast<int>(r) - 1, p.q);
            d2 = d1 - 2 * phi_prime(static_cast<int>(r) - 3, p.q);
            d3 = p.m == 4
                     ? d1 - (q - 1) * (q * q - 1)
                     : d1 - 2 * pow_int(q, 1u << (r - 2)) * phi_prime(static_cast<int>(r) - 4, p.q);
        } else {
            d1 = exact_div(n, pow_int(q, 1u << (r - 1)) + 1) * phi_prime(static_cast<int>(r) - 2, p.q);
            d2 = d1 - exact_div(2 * (d1 + phi_prime(static_cast<int>(r) - 1, p.q)),
                                pow_int(q, 1u << r));
            d3 = shape.t == 1 ? d2 - (q - 1) * q * q
                              : d2 - 2 * phi_prime(static_cast<int>(r) - 1, p.q);
        }
        d = {d1, d2, d3};
        sizes = {std::nullopt, std::nullopt, std::nullopt};
    }

    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 1) continue; // below the residue range; no such rank exists
        LadderEntry e;
        e.rank = static_cast<unsigned>(i + 1);
        e.value = d[i];
        e.status = i < proved_ranks ? ProofStatus::proved : ProofStatus::conjectured;
        e.size_claim = sizes[i];
        lad.entries.push_back(e);
    }
    return lad;
}

inline DeltaLadder delta_ladder(const CodeParams& p) {
    return p.odd_m() ? delta_ladder_odd_m(p) : delta_ladder_even_m(p);
}

} // namespace qcoset
