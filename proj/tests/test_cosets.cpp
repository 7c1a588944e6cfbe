#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "oracle.hpp"
#include "qcoset/cosets.hpp"
#include "qcoset/params.hpp"

using namespace qcoset;
using qcoset::Int;

namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) {
    std::vector<Int> v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

const std::vector<std::pair<unsigned, unsigned>> kSmallGrid = {
    {2, 5}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}, {5, 2}, {7, 2}, {8, 2}, {9, 2}};

} // namespace

TEST_CASE("CodeParams validates q and m") {
    CHECK_THROWS_AS(CodeParams::make(6, 2), std::domain_error);
    CHECK_THROWS_AS(CodeParams::make(1, 2), std::domain_error);
    CHECK_THROWS_AS(CodeParams::make(0, 2), std::domain_error);
    CHECK_THROWS_AS(CodeParams::make(12, 2), std::domain_error);
    CHECK_THROWS_AS(CodeParams::make(3, 1), std::domain_error);
    CHECK(CodeParams::make(9, 2).characteristic == 3);
    CHECK(CodeParams::make(8, 3).characteristic == 2);
    CHECK(CodeParams::make(3, 5).n == 244);
    CHECK(CodeParams::make(2, 10).n == 1025);
}

TEST_CASE("y_sequence") {
    const auto p = CodeParams::make(3, 2);
    CHECK(y_sequence(p, 1).values == ints({1, 3}));
    CHECK(y_sequence(p, 5).values == ints({5, 5}));
    CHECK_THROWS_AS(y_sequence(p, 0), std::domain_error);
    CHECK_THROWS_AS(y_sequence(p, 10), std::domain_error);

    // first entry is always x itself
    for (auto [q, m] : kSmallGrid) {
        const auto cp = CodeParams::make(q, m);
        for (Int x : {Int(1), Int(2), cp.n - 1})
            CHECK(y_sequence(cp, x).values.front() == x);
    }
}

TEST_CASE("orbit matches the worked n=10 cosets") {
    const auto p = CodeParams::make(3, 2);
    const auto c1 = orbit(p, 1);
    CHECK(*c1.elements == ints({1, 3, 7, 9}));
    CHECK(c1.leader == 1);
    CHECK(c1.size == 4);

    const auto c2 = orbit(p, 2);
    CHECK(*c2.elements == ints({2, 4, 6, 8}));
    CHECK(c2.leader == 2);
    CHECK(c2.size == 4);

    CHECK(*orbit(p, 5).elements == ints({5}));
    CHECK(*orbit(p, 0).elements == ints({0}));
    CHECK(orbit(p, 7).leader == 1); // same coset as 1

    CHECK(orbit(CodeParams::make(3, 5), 1).size == 10);
}

TEST_CASE("is_coset_leader on the worked example") {
    const auto p = CodeParams::make(3, 2);
    for (long long x : {1, 2, 5}) CHECK(is_coset_leader(p, x));
    for (long long x : {3, 4, 6, 7, 8, 9}) CHECK_FALSE(is_coset_leader(p, x));
    CHECK_THROWS_AS(is_coset_leader(p, 0), std::domain_error);
}

TEST_CASE("coset_size") {
    const auto p = CodeParams::make(3, 2);
    CHECK(coset_size(p, 5) == 1);
    CHECK(coset_size(p, 1) == 4);
    CHECK(coset_size(p, 0) == 1);
}

TEST_CASE("leaders_in_range") {
    CHECK(leaders_in_range(CodeParams::make(3, 2), 1, 9) == ints({1, 2, 5}));
    CHECK(leaders_in_range(CodeParams::make(4, 2), 1, 16) == ints({1, 2, 3, 6}));
    CHECK(leaders_in_range(CodeParams::make(3, 2), 3, 4).empty());
    CHECK_THROWS_AS(leaders_in_range(CodeParams::make(3, 2), 0, 4), std::domain_error);
    CHECK_THROWS_AS(leaders_in_range(CodeParams::make(3, 2), 5, 4), std::domain_error);

    // narrow (point-test) and wide (sieve) paths agree with the naive oracle
    for (auto [q, m] : kSmallGrid) {
        const auto p = CodeParams::make(q, m);
        const auto expected = testoracle::all_leaders(q, p.n);
        CHECK(leaders_in_range(p, 1, p.n - 1) == expected); // sieve path
        std::vector<Int> pieced;                            // point path per narrow slice
        const Int step = std::max<Int>(1, p.n / 8);
        for (Int lo = 1; lo < p.n; lo += step) {
            const Int hi = std::min(p.n - 1, lo + step - 1);
            auto part = leaders_in_range(p, lo, hi);
            pieced.insert(pieced.end(), part.begin(), part.end());
        }
        CHECK(pieced == expected);
    }
}

TEST_CASE("largest_leaders") {
    CHECK(largest_leaders(CodeParams::make(3, 2), 3) == ints({5, 2, 1}));
    CHECK(largest_leaders(CodeParams::make(4, 2), 4) == ints({6, 3, 2, 1}));
    CHECK(largest_leaders(CodeParams::make(3, 5), 6) == ints({122, 61, 47, 43, 41, 40}));
    // only three nonzero cosets exist mod 10
    CHECK(largest_leaders(CodeParams::make(3, 2), 10) == ints({5, 2, 1}));
    CHECK_THROWS_AS(largest_leaders(CodeParams::make(3, 2), 0), std::domain_error);
    CHECK_THROWS_AS(largest_leaders(CodeParams::make(3, 40), 1), budget_error);
    try {
        largest_leaders(CodeParams::make(3, 2), 1, 5);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
        CHECK(std::string(e.what()).find("5") != std::string::npos); // names the bound
    }
}

TEST_CASE("exhaustive agreement with the naive oracle") {
    for (auto [q, m] : kSmallGrid) {
        CAPTURE(q);
        CAPTURE(m);
        const auto p = CodeParams::make(q, m);
        for (Int x = 1; x < p.n; ++x) {
            const auto naive = testoracle::orbit(q, p.n, x);
            const auto got = orbit(p, x);
            REQUIRE(std::vector<Int>(naive.begin(), naive.end()) == *got.elements);
            REQUIRE(is_coset_leader(p, x) == testoracle::is_leader(q, p.n, x));
            REQUIRE(coset_size(p, x) == testoracle::size(q, p.n, x));
            REQUIRE(canonical_leader(p, x) == testoracle::leader(q, p.n, x));
        }
    }
}

TEST_CASE("cosets partition Z_n and sizes divide 2m") {
    for (auto [q, m] : kSmallGrid) {
        CAPTURE(q);
        CAPTURE(m);
        const auto p = CodeParams::make(q, m);
        std::vector<bool> seen(static_cast<std::size_t>(to_u64(p.n)), false);
        Int total = 0;
        std::vector<Int> leaders = leaders_in_range(p, 1, p.n - 1);
        leaders.insert(leaders.begin(), 0);
        for (const Int& l : leaders) {
            const auto c = orbit(p, l);
            REQUIRE(c.leader == l);
            REQUIRE((2 * p.m) % c.size == 0);
            total += c.size;
            for (const Int& e : *c.elements) {
                REQUIRE_FALSE(seen[to_u64(e)]);
                seen[to_u64(e)] = true;
                // negation closure
                REQUIRE(std::binary_search(c.elements->begin(), c.elements->end(),
                                           (p.n - e) % p.n));
            }
        }
        CHECK(total == p.n);
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
}

TEST_CASE("leader consistency on a larger modulus, sampled") {
    const auto p = CodeParams::make(7, 5); // n = 16808
    for (Int x = 1; x < p.n; x += 97)
        CHECK(is_coset_leader(p, x) == testoracle::is_leader(p.q, p.n, x));
}

TEST_CASE("arbitrary-precision path agrees with the native path") {
    // q^m+1 far above 2^64 exercises the cpp_int kernels
    const auto big = CodeParams::make(3, 50);
    CHECK_FALSE(big.fits_fast());
    const auto small = CodeParams::make(3, 4);
    CHECK(small.fits_fast());
    // the same structural facts hold on both paths
    CHECK(is_coset_leader(big, 1));
    CHECK_FALSE(is_coset_leader(big, 3));
    CHECK(coset_size(big, big.n / 2) == 1);       // n/2 is a fixed point for odd q
    CHECK(is_coset_leader(big, big.n / 2));
    CHECK(coset_size(big, 1) == 2 * big.m);
    const auto c = orbit(big, 2);
    CHECK(c.leader == 2);
    CHECK(c.size == 2 * big.m);
    for (const Int& e : *c.elements)
        CHECK(std::binary_search(c.elements->begin(), c.elements->end(), (big.n - e) % big.n));
}
