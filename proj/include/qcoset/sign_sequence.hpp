#pragma once

/**
 * @file sign_sequence.hpp
 * @brief The doubling ±1 sequences S^r = (S^{r-1}, -S^{r-1}) and their two
 *        sign-conditional left shifts, with the lexicographic order used to
 *        prove shift dominance.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcoset/integer.hpp"

namespace qcoset {

/**
 * Entries are stored most significant first: entries[0] = s_{2^{r-1}-1},
 * entries.back() = s_0. Length is 2^{r-1}.
 */
struct SignSequence {
    unsigned r = 0;
    std::vector<std::int8_t> entries;
};

enum class Ordering { less, equal, greater };

inline constexpr unsigned kMaxSignSequenceRank = 26; // 2^25 entries, 32 MiB

namespace detail {

inline void require_rank(unsigned r) {
    if (r < 1) throw std::domain_error("sign sequence rank must be >= 1");
    if (r > kMaxSignSequenceRank)
        throw budget_error("sign sequence rank " + std::to_string(r) +
                           " exceeds the memory budget (max " +
                           std::to_string(kMaxSignSequenceRank) + ")");
}

inline std::size_t shift_pre(unsigned r, std::size_t k) {
    require_rank(r);
    if (r < 2) throw std::domain_error("shifts require r >= 2");
    const std::size_t len = std::size_t(1) << (r - 1);
    if (k < 1 || k > len - 1)
        throw std::domain_error("shift amount k must lie in [1, 2^{r-1}-1]");
    return len;
}

} // namespace detail

/// S^1 = (1); S^r = (S^{r-1}, -S^{r-1}).
inline SignSequence sign_sequence(unsigned r) {
    detail::require_rank(r);
    SignSequence s;
    s.r = r;
    s.entries.assign(1, 1);
    for (unsigned i = 2; i <= r; ++i) {
        const std::size_t half = s.entries.size();
        s.entries.resize(2 * half);
        for (std::size_t j = 0; j < half; ++j)
            s.entries[half + j] = static_cast<std::int8_t>(-s.entries[j]);
    }
    return s;
}

/**
 * The k-left-shift F: a rotation whose moved block is negated, with the
 * whole low part negated instead when the pivot s_{2^{r-1}-1-k} is -1.
 */
inline SignSequence shift_F(unsigned r, std::size_t k) {
    const std::size_t len = detail::shift_pre(r, k);
    const SignSequence base = sign_sequence(r);
    SignSequence out;
    out.r = r;
    out.entries.resize(len);
    const bool pivot_positive = base.entries[k] > 0; // entries[k] = s_{2^{r-1}-1-k}
    for (std::size_t j = 0; j + k < len; ++j)
        out.entries[j] = pivot_positive ? base.entries[j + k]
                                        : static_cast<std::int8_t>(-base.entries[j + k]);
    for (std::size_t j = 0; j < k; ++j)
        out.entries[len - k + j] = pivot_positive ? static_cast<std::int8_t>(-base.entries[j])
                                                  : base.entries[j];
    return out;
}

/// The k-left-shift H: a plain rotation, globally negated when the pivot is -1.
inline SignSequence shift_H(unsigned r, std::size_t k) {
    const std::size_t len = detail::shift_pre(r, k);
    const SignSequence base = sign_sequence(r);
    SignSequence out;
    out.r = r;
    out.entries.resize(len);
    const bool pivot_positive = base.entries[k] > 0;
    for (std::size_t j = 0; j < len; ++j) {
        std::int8_t v = base.entries[(j + k) % len];
        out.entries[j] = pivot_positive ? v : static_cast<std::int8_t>(-v);
    }
    return out;
}

/// Lexicographic order decided by the most significant differing coordinate.
inline Ordering seq_compare(const SignSequence& a, const SignSequence& b) {
    if (a.entries.size() != b.entries.size())
        throw std::domain_error("seq_compare requires equal lengths");
    for (std::size_t j = 0; j < a.entries.size(); ++j) {
        if (a.entries[j] != b.entries[j])
            return a.entries[j] > b.entries[j] ? Ordering::greater : Ordering::less;
    }
    return Ordering::equal;
}

namespace detail {

/**
 * Packed dominance check used by the verification harness: every F and H
 * shift of the given ±1 sequence compares >= the sequence itself. Entries
 * are packed one bit each (1 bit = +1), most significant entry in the top
 * bit of word 0, so word comparison from the front is the lexicographic
 * comparison.
 */
inline bool shift_dominance_holds_packed(const std::vector<std::int8_t>& entries) {
    const std::size_t len = entries.size();
    if (len < 2 || (len & (len - 1)) != 0)
        throw std::domain_error("dominance check needs a power-of-two length >= 2");
    const std::size_t words = (len + 63) / 64;

    std::vector<std::uint64_t> base(words, 0);
    for (std::size_t j = 0; j < len; ++j)
        if (entries[j] > 0) base[j / 64] |= (std::uint64_t(1) << (63 - j % 64));
    const std::uint64_t tail_mask =
        len % 64 == 0 ? ~std::uint64_t(0) : ~std::uint64_t(0) << (64 - len % 64);

    // word w (MSB-first) of the rotation of `base` by k, optionally negated
    auto rotated_word = [&](std::size_t w, std::size_t k, bool negate) {
        std::uint64_t v;
        if (len < 64) {
            v = (base[0] << k) | (base[0] >> (len - k));
        } else { // len is a multiple of 64
            const std::size_t bit = (w * 64 + k) % len;
            const std::size_t wi = bit / 64, off = bit % 64;
            v = base[wi] << off;
            if (off != 0) v |= base[(wi + 1) % words] >> (64 - off);
        }
        if (negate) v = ~v;
        return v & (w == words - 1 ? tail_mask : ~std::uint64_t(0));
    };

    for (std::size_t k = 1; k < len; ++k) {
        const bool pivot_positive = entries[k] > 0;
        // F: rotation with the wrapped block negated; equivalently the
        // rotation of (S, -S) truncated, i.e. rotation XOR suffix mask.
        // Compare word by word from the most significant end.
        bool fh_done_f = false, fh_done_h = false;
        for (std::size_t w = 0; w < words && (!fh_done_f || !fh_done_h); ++w) {
            const std::uint64_t bw = base[w] & (w == words - 1 ? tail_mask : ~std::uint64_t(0));
            if (!fh_done_h) {
                const std::uint64_t hw = rotated_word(w, k, !pivot_positive);
                if (hw != bw) {
                    if (hw < bw) return false; // H < S
                    fh_done_h = true;
                }
            }
            if (!fh_done_f) {
                // F flips the block that wrapped: positions >= len-k
                std::uint64_t fw = rotated_word(w, k, !pivot_positive);
                const std::size_t lo = w * 64, hi = lo + 64;
                const std::size_t cut = len - k;
                if (cut < hi) {
                    std::uint64_t flip;
                    if (cut <= lo) flip = ~std::uint64_t(0);
                    else flip = ~std::uint64_t(0) >> (cut - lo);
                    fw ^= flip & (w == words - 1 ? tail_mask : ~std::uint64_t(0));
                }
                if (fw != bw) {
                    if (fw < bw) return false; // F < S
                    fh_done_f = true;
                }
            }
        }
    }
    return true;
}

inline bool sign_shift_dominance_holds(unsigned r) {
    if (r < 2 || r > 24) throw std::domain_error("dominance check supports r in [2, 24]");
    return shift_dominance_holds_packed(sign_sequence(r).entries);
}

} // namespace detail

} // namespace qcoset
