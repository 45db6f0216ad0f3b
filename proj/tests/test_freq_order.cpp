#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "gac/freq_order.hpp"

using namespace gac;

namespace {

// Pinned starting state over 4 letters: counts 0,1,2,1.
FrequencyOrder worked_example_state() {
    FrequencyOrder f(4, 100);
    f.increment(1); // a2
    f.increment(2); // a3
    f.increment(2);
    f.increment(3); // a4
    return f;
}

// Reference: does the structure agree with a plain counter array?
void check_against_counts(const FrequencyOrder& f, const std::vector<uint32_t>& counts) {
    REQUIRE(f.validate());
    for (uint32_t a = 0; a < counts.size(); ++a) CHECK(f.count(a) == counts[a]);
    std::vector<uint32_t> by_pos(counts.size());
    for (uint32_t p = 0; p < counts.size(); ++p) by_pos[p] = counts[f.letter_at_position(p)];
    CHECK(std::is_sorted(by_pos.begin(), by_pos.end()));
}

} // namespace

TEST_CASE("fresh structure") {
    FrequencyOrder f(4, 10);
    CHECK(f.validate());
    for (uint32_t a = 0; a < 4; ++a) {
        CHECK(f.count(a) == 0);
        CHECK(f.letter_at_position(a) == a);
    }
    CHECK(f.rank_of(0) == 4); // ascending layout: letter 0 sits first, rank N
    CHECK_THROWS_AS(FrequencyOrder(0, 10), std::invalid_argument);

    FrequencyOrder one(1, 1000);
    for (int i = 0; i < 50; ++i) one.increment(0);
    CHECK(one.count(0) == 50);
    CHECK(one.rank_of(0) == 1);
    CHECK(one.validate());
}

TEST_CASE("worked four-letter increment") {
    auto f = worked_example_state();
    // the published pre-state, 1-based
    CHECK(f.dump() ==
          "Fr: 0 1 2 1\n"
          "SortedAlphabet: 1 4 2 3\n"
          "InverseSort: 1 3 4 2\n"
          "SetBegin: 1 2 4\n"
          "SetEnd: 1 3 4\n");
    f.increment(3); // a4 moves from count class 1 to class 2
    CHECK(f.dump() ==
          "Fr: 0 1 2 2\n"
          "SortedAlphabet: 1 2 4 3\n"
          "InverseSort: 1 2 4 3\n"
          "SetBegin: 1 2 3\n"
          "SetEnd: 1 2 4\n");
    CHECK(f.validate());
    // a3 holds the maximal count, so its descending rank is 1
    CHECK(f.rank_of(2) == 1);
    CHECK(f.letter_at_rank(1) == 2);
}

TEST_CASE("rank and position are inverse maps") {
    auto f = worked_example_state();
    for (uint32_t a = 0; a < 4; ++a) {
        CHECK(f.letter_at_rank(f.rank_of(a)) == a);
        CHECK(f.letter_at_position(f.position(a)) == a);
    }
}

TEST_CASE("decrement mirrors increment") {
    auto f = worked_example_state();
    f.increment(3);
    f.decrement(3);
    check_against_counts(f, {0, 1, 2, 1});

    SUBCASE("inverse pair from arbitrary states") {
        std::mt19937_64 rng(3);
        FrequencyOrder g(8, 1000);
        std::uniform_int_distribution<uint32_t> pick(0, 7);
        for (int i = 0; i < 500; ++i) g.increment(pick(rng));
        const uint32_t a = pick(rng);
        std::vector<uint32_t> before(8);
        for (uint32_t x = 0; x < 8; ++x) before[x] = g.count(x);
        g.increment(a);
        g.decrement(a);
        check_against_counts(g, before);
    }

    CHECK_THROWS_AS(FrequencyOrder(2, 10).decrement(0), std::underflow_error);
}

TEST_CASE("count saturation") {
    FrequencyOrder f(2, 3);
    f.increment(0);
    f.increment(0);
    f.increment(0);
    CHECK_THROWS_AS(f.increment(0), std::overflow_error);
    CHECK(f.count(0) == 3);
    CHECK(f.validate());
}

TEST_CASE("long random mixes agree with a plain counter array") {
    std::mt19937_64 rng(19);
    for (const uint32_t n : {1u, 4u, 256u}) {
        FrequencyOrder f(n, 1u << 20);
        std::vector<uint32_t> counts(n, 0);
        std::uniform_int_distribution<uint32_t> pick(0, n - 1);
        std::bernoulli_distribution dec(0.3);
        for (int i = 0; i < 10000; ++i) {
            const uint32_t a = pick(rng);
            if (dec(rng) && counts[a] > 0) {
                f.decrement(a);
                counts[a]--;
            } else {
                f.increment(a);
                counts[a]++;
            }
            if (i % 1000 == 0) check_against_counts(f, counts);
        }
        check_against_counts(f, counts);
    }
}

TEST_CASE("constant work per update") {
    std::mt19937_64 rng(23);
    for (const uint32_t n : {1u, 4u, 256u, 4096u}) {
        FrequencyOrder f(n, 1u << 20);
        std::uniform_int_distribution<uint32_t> pick(0, n - 1);
        // skew the traffic so count classes churn
        uint64_t updates = 0;
        for (int i = 0; i < 20000; ++i) {
            f.increment(pick(rng) % (1 + i % n));
            ++updates;
        }
        const uint64_t before = f.op_count();
        f.increment(0);
        CHECK(f.op_count() - before <= 16); // fixed bound, independent of n and history
        CHECK(f.op_count() <= (updates + 1) * 16);
    }
}

TEST_CASE("rebuild from counts") {
    FrequencyOrder f(6, 1000);
    f.rebuild({5, 0, 2, 2, 7, 0});
    check_against_counts(f, {5, 0, 2, 2, 7, 0});
    CHECK(f.rank_of(4) == 1);
    CHECK_THROWS_AS(f.rebuild({1, 2}), std::invalid_argument);
}
