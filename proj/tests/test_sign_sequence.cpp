#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcoset/sign_sequence.hpp"

using namespace qcoset;

namespace {

SignSequence seq(unsigned r, std::initializer_list<int> entries) {
    SignSequence s;
    s.r = r;
    for (int e : entries) s.entries.push_back(static_cast<std::int8_t>(e));
    return s;
}

bool same(const SignSequence& a, const SignSequence& b) {
    return a.entries == b.entries;
}

} // namespace

TEST_CASE("base sequences") {
    CHECK(same(sign_sequence(1), seq(1, {1})));
    CHECK(same(sign_sequence(2), seq(2, {1, -1})));
    CHECK(same(sign_sequence(3), seq(3, {1, -1, -1, 1})));
    CHECK(same(sign_sequence(4), seq(4, {1, -1, -1, 1, -1, 1, 1, -1})));
    CHECK_THROWS_AS(sign_sequence(0), std::domain_error);
    CHECK_THROWS_AS(sign_sequence(40), budget_error);
}

TEST_CASE("doubling construction") {
    for (unsigned r = 2; r <= 12; ++r) {
        const auto prev = sign_sequence(r - 1);
        const auto cur = sign_sequence(r);
        REQUIRE(cur.entries.size() == 2 * prev.entries.size());
        for (std::size_t j = 0; j < prev.entries.size(); ++j) {
            REQUIRE(cur.entries[j] == prev.entries[j]);
            REQUIRE(cur.entries[prev.entries.size() + j] == -prev.entries[j]);
        }
    }
}

TEST_CASE("the six r=3 shifts") {
    CHECK(same(shift_F(3, 1), seq(3, {1, 1, -1, 1})));
    CHECK(same(shift_H(3, 1), seq(3, {1, 1, -1, -1})));
    CHECK(same(shift_F(3, 2), seq(3, {1, -1, 1, -1})));
    CHECK(same(shift_H(3, 2), seq(3, {1, -1, -1, 1})));
    CHECK(same(shift_F(3, 3), seq(3, {1, -1, 1, 1})));
    CHECK(same(shift_H(3, 3), seq(3, {1, 1, -1, -1})));
}

TEST_CASE("r=2 base case and bad arguments") {
    CHECK(same(shift_F(2, 1), seq(2, {1, 1})));
    CHECK(same(shift_H(2, 1), seq(2, {1, -1})));
    CHECK_THROWS_AS(shift_F(1, 1), std::domain_error);
    CHECK_THROWS_AS(shift_F(3, 0), std::domain_error);
    CHECK_THROWS_AS(shift_F(3, 4), std::domain_error);
    CHECK_THROWS_AS(shift_H(3, 4), std::domain_error);
}

TEST_CASE("lexicographic comparison") {
    CHECK(seq_compare(seq(3, {1, 1, -1, 1}), seq(3, {1, -1, -1, 1})) == Ordering::greater);
    const auto s3 = sign_sequence(3);
    CHECK(seq_compare(s3, s3) == Ordering::equal);
    CHECK(seq_compare(s3, shift_F(3, 2)) == Ordering::less);
    CHECK_THROWS_AS(seq_compare(sign_sequence(2), sign_sequence(3)), std::domain_error);
}

TEST_CASE("shift dominance via the API") {
    for (unsigned r = 2; r <= 12; ++r) {
        const auto base = sign_sequence(r);
        const std::size_t len = base.entries.size();
        for (std::size_t k = 1; k < len; ++k) {
            REQUIRE(seq_compare(shift_F(r, k), base) != Ordering::less);
            REQUIRE(seq_compare(shift_H(r, k), base) != Ordering::less);
        }
    }
}

namespace {

// Independent shift construction for an arbitrary ±1 sequence, straight
// from the two-branch definitions; oracle for the packed checker.
std::vector<std::int8_t> naive_shift(const std::vector<std::int8_t>& s, std::size_t k, bool f) {
    const std::size_t len = s.size();
    std::vector<std::int8_t> out(len);
    const bool pos = s[k] > 0;
    for (std::size_t j = 0; j < len; ++j) {
        std::int8_t v = s[(j + k) % len];
        if (f) {
            const bool wrapped = j >= len - k;
            if (pos == !wrapped) out[j] = v;      // keep the unwrapped part as is
            else out[j] = static_cast<std::int8_t>(-v);
        } else {
            out[j] = pos ? v : static_cast<std::int8_t>(-v);
        }
    }
    return out;
}

bool naive_dominance(const std::vector<std::int8_t>& s) {
    for (std::size_t k = 1; k < s.size(); ++k)
        for (bool f : {true, false}) {
            const auto sh = naive_shift(s, k, f);
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (sh[j] == s[j]) continue;
                if (sh[j] < s[j]) return false;
                break;
            }
        }
    return true;
}

} // namespace

TEST_CASE("packed dominance checker agrees with a naive oracle on mutated sequences") {
    std::uint64_t state = 0x2545F4914F6CDD1Dull;
    auto rnd = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (unsigned r = 2; r <= 9; ++r) {
        const std::size_t len = std::size_t(1) << (r - 1);
        // the true sequence, plus variants with a handful of flipped entries
        std::vector<std::vector<std::int8_t>> cases{sign_sequence(r).entries};
        for (int variant = 0; variant < 20; ++variant) {
            auto v = sign_sequence(r).entries;
            for (int flips = 0; flips < 3; ++flips)
                v[rnd() % len] = static_cast<std::int8_t>(-v[rnd() % len]);
            cases.push_back(std::move(v));
        }
        for (const auto& c : cases) {
            CAPTURE(r);
            REQUIRE(detail::shift_dominance_holds_packed(c) == naive_dominance(c));
        }
    }
}

TEST_CASE("shift_F and shift_H match the naive construction") {
    for (unsigned r = 2; r <= 10; ++r) {
        const auto base = sign_sequence(r).entries;
        for (std::size_t k = 1; k < base.size(); ++k) {
            REQUIRE(shift_F(r, k).entries == naive_shift(base, k, true));
            REQUIRE(shift_H(r, k).entries == naive_shift(base, k, false));
        }
    }
}

TEST_CASE("packed dominance holds through r=16") {
    for (unsigned r = 2; r <= 16; ++r) CHECK(detail::sign_shift_dominance_holds(r));
}
