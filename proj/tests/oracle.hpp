#pragma once

// Test-only brute-force oracle. Deliberately independent of the library's
// leader test and orbit construction: plain multiplicative walks over
// arbitrary-precision residues, nothing shared with the inequality-based
// fast path it is used to check.

#include <algorithm>
#include <set>
#include <vector>

#include "qcoset/integer.hpp"

namespace testoracle {

using qcoset::Int;

inline std::set<Int> orbit(unsigned q, const Int& n, const Int& x) {
    std::set<Int> s;
    Int y = x % n;
    while (!s.count(y)) {
        s.insert(y);
        y = y * q % n;
    }
    return s;
}

inline Int leader(unsigned q, const Int& n, const Int& x) { return *orbit(q, n, x).begin(); }

inline bool is_leader(unsigned q, const Int& n, const Int& x) { return leader(q, n, x) == x; }

inline unsigned size(unsigned q, const Int& n, const Int& x) {
    return static_cast<unsigned>(orbit(q, n, x).size());
}

inline std::vector<Int> all_leaders(unsigned q, const Int& n) {
    std::vector<Int> out;
    for (Int x = 1; x < n; ++x)
        if (is_leader(q, n, x)) out.push_back(x);
    return out;
}

inline std::vector<Int> top_leaders(unsigned q, const Int& n, std::size_t k) {
    std::vector<Int> ls = all_leaders(q, n);
    std::reverse(ls.begin(), ls.end());
    if (ls.size() > k) ls.resize(k);
    return ls;
}

/// |C_b ∪ ... ∪ C_{delta-1}| by materializing the union.
inline Int defining_set_size(unsigned q, const Int& n, const Int& delta, int b) {
    std::set<Int> t;
    for (Int i = b; i < delta; ++i) {
        auto o = orbit(q, n, i);
        t.insert(o.begin(), o.end());
    }
    return Int(t.size());
}

inline Int dimension(unsigned q, const Int& n, const Int& delta, int b) {
    return n - defining_set_size(q, n, delta, b);
}

inline Int bose(unsigned q, const Int& n, const Int& delta) {
    for (Int x = delta; x < n; ++x)
        if (is_leader(q, n, x)) return x;
    return n + 1;
}

} // namespace testoracle
