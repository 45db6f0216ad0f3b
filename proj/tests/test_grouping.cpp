#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "gac/grouping.hpp"
#include "helpers.hpp"

using namespace gac;

TEST_CASE("plan construction and text form") {
    const auto plan = GroupingPlan::from_sizes({1, 2, 4}, false);
    CHECK(plan.groups() == 3);
    CHECK(plan.covered() == 7);
    CHECK(plan.prefixes == std::vector<uint64_t>{0, 1, 3, 7});
    CHECK(plan.to_text() == "3 1 2 4");
    const auto parsed = GroupingPlan::parse_text("3 1 2 4");
    CHECK(parsed.sizes == plan.sizes);
    CHECK(parsed.pow2); // all sizes happen to be powers of two

    CHECK_THROWS_AS(GroupingPlan::from_sizes({}), std::invalid_argument);
    CHECK_THROWS_AS(GroupingPlan::from_sizes({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(GroupingPlan::from_sizes({3}, true), std::invalid_argument);
    CHECK_THROWS_AS(GroupingPlan::parse_text("junk"), std::invalid_argument);
}

TEST_CASE("ordered distribution validation") {
    CHECK_NOTHROW(OrderedDistribution::checked({0.5, 0.3, 0.2}));
    CHECK_THROWS_AS(OrderedDistribution::checked({0.3, 0.5, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedDistribution::checked({0.6, 0.3}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedDistribution::checked({}), std::invalid_argument);
}

TEST_CASE("grouping redundancy on pinned distributions") {
    // all mass on one letter in a 4-letter group: phat = 1/4, cost log2 4
    CHECK(grouping_redundancy(OrderedDistribution{{1, 0, 0, 0}},
                              GroupingPlan::from_sizes({4})) == doctest::Approx(2.0));
    // uniform on a single full group costs nothing
    CHECK(grouping_redundancy(OrderedDistribution{{0.25, 0.25, 0.25, 0.25}},
                              GroupingPlan::from_sizes({4})) == doctest::Approx(0.0));
    const auto plan12 = GroupingPlan::from_sizes({1, 2});
    CHECK(grouping_redundancy(OrderedDistribution{{0.5, 0.5, 0.0}}, plan12) ==
          doctest::Approx(0.5));
    // coverage error
    CHECK_THROWS_AS(grouping_redundancy(OrderedDistribution{{0.5, 0.25, 0.25}},
                                        GroupingPlan::from_sizes({2})),
                    std::invalid_argument);
}

TEST_CASE("worst-case redundancy closed form") {
    CHECK(worst_case_redundancy(GroupingPlan::from_sizes({1, 1, 1})) == doctest::Approx(0.0));
    CHECK(worst_case_redundancy(GroupingPlan::from_sizes({4})) == doctest::Approx(2.0));
    CHECK(worst_case_redundancy(GroupingPlan::from_sizes({1, 2})) == doctest::Approx(0.5));
}

TEST_CASE("closed form equals the extreme-point oracle") {
    std::mt19937_64 rng(7);
    SUBCASE("exhaustive over small alphabets") {
        for (uint32_t n = 1; n <= 8; ++n) {
            for (const auto& sizes : testutil::all_compositions(n)) {
                const auto plan = GroupingPlan::from_sizes(sizes);
                CHECK(worst_case_redundancy(plan) ==
                      doctest::Approx(oracle_worst_case_redundancy(plan, n)).epsilon(1e-9));
            }
        }
    }
    SUBCASE("random plans up to coverage 64") {
        for (int t = 0; t < 200; ++t) {
            const auto plan = testutil::random_plan(64, rng);
            const auto n = static_cast<uint32_t>(plan.covered());
            CHECK(worst_case_redundancy(plan) ==
                  doctest::Approx(oracle_worst_case_redundancy(plan, n)).epsilon(1e-9));
        }
    }
    SUBCASE("windowed scan agrees with a full scan on large groups") {
        for (uint64_t m : {5000u, 8192u, 100000u}) {
            for (uint64_t n_prev : {0u, 1u, 17u, 5000u}) {
                double full = 0;
                for (uint64_t l = 1; l < m; ++l)
                    full = std::max(full, static_cast<double>(l) *
                                              std::log2(static_cast<double>(m) / l) /
                                              static_cast<double>(n_prev + l));
                CHECK(group_worst_redundancy(n_prev, m) == doctest::Approx(full).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("any ordered distribution stays under the worst case") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const auto plan = testutil::random_plan(48, rng);
        const auto p = testutil::random_ordered_distribution(
            static_cast<uint32_t>(plan.covered()), rng);
        CHECK(grouping_redundancy(p, plan) <= worst_case_redundancy(plan) + 1e-9);
    }
}

TEST_CASE("per-group worst case is monotone in the group size") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<uint64_t> prev_d(0, 500);
    std::uniform_int_distribution<uint64_t> m_d(1, 300);
    for (int t = 0; t < 500; ++t) {
        const uint64_t n_prev = prev_d(rng);
        const uint64_t m = m_d(rng);
        CHECK(group_worst_redundancy(n_prev, m + 1) >=
              group_worst_redundancy(n_prev, m) - 1e-12);
        // and antitone in the prefix length
        CHECK(group_worst_redundancy(n_prev + 1, m) <=
              group_worst_redundancy(n_prev, m) + 1e-12);
    }
}

TEST_CASE("optimizer reproduces the published 256-letter tables") {
    SUBCASE("unrestricted sizes") {
        const auto plan = optimal_grouping(256, 0.08, false);
        const std::vector<uint32_t> expected{1, 1, 1, 1, 1, 1, 1, 1, 1, 1,  1,  1,
                                             2, 2, 2, 2, 3, 3, 4, 4, 5, 6,  7,  8,
                                             9, 11, 12, 14, 16, 19, 22, 25, 29, 34, 39};
        CHECK(plan.groups() == 35);
        CHECK(plan.sizes == expected);
        CHECK(worst_case_redundancy(plan) <= 0.08 + 1e-12);
    }
    SUBCASE("power-of-two sizes") {
        const auto plan = optimal_grouping(256, 0.08, true);
        CHECK(worst_case_redundancy(plan) <= 0.08 + 1e-12);
        CHECK(plan.covered() >= 256);
        // One boundary group sits exactly at the budget (1*log2(4)/25 = 0.08),
        // which lets the optimizer shave one group off the published table.
        CHECK(plan.groups() <= 41);
        CHECK(plan.groups() >= 40);
        for (uint32_t m : plan.sizes) CHECK((m & (m - 1)) == 0);
    }
}

TEST_CASE("optimizer handles degenerate budgets") {
    const auto singles = optimal_grouping(5, 0.0, false);
    CHECK(singles.groups() == 5);
    CHECK(std::all_of(singles.sizes.begin(), singles.sizes.end(),
                      [](uint32_t m) { return m == 1; }));
    CHECK(optimal_grouping(1, 0.5, false).groups() == 1);
    CHECK_THROWS_AS(optimal_grouping(4, -0.1, false), std::invalid_argument);
    CHECK_THROWS_AS(optimal_grouping(0, 0.1, false), std::invalid_argument);
}

TEST_CASE("greedy matches the exact DP minimizer") {
    for (const double delta : {0.02, 0.08, 0.3}) {
        for (const bool pow2 : {false, true}) {
            for (uint32_t n = 1; n <= 300; n += (n < 40 ? 1 : 13)) {
                const auto greedy = optimal_grouping(n, delta, pow2);
                CHECK(greedy.groups() == min_groups_exact(n, delta, pow2));
                CHECK(worst_case_redundancy(greedy) <= delta + 1e-12);
                CHECK(greedy.covered() >= n);
            }
        }
    }
}

TEST_CASE("group sizes are non-decreasing by construction") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> delta_d(0.005, 0.4);
    for (int t = 0; t < 30; ++t) {
        const double delta = delta_d(rng);
        const auto plan = optimal_grouping(500, delta, t % 2 == 0);
        CHECK(std::is_sorted(plan.sizes.begin(), plan.sizes.end()));
    }
}

TEST_CASE("closed-form construction stays within budget") {
    for (const double delta : {0.05, 0.1, 0.2}) {
        const auto plan = theorem3_grouping(1u << 12, delta);
        CHECK(worst_case_redundancy(plan) <= delta + 1e-12);
        CHECK(plan.covered() >= (1u << 12));
    }
    SUBCASE("first groups for delta = 0.1 are singletons") {
        const auto plan = theorem3_grouping(64, 0.1);
        CHECK(plan.sizes[0] == 1);
        CHECK(plan.sizes[1] == 1); // floor(coef * 1) = 0 clamps to 1
    }
    SUBCASE("logarithmic growth in the alphabet size") {
        for (const double delta : {0.05, 0.1, 0.2}) {
            const double s1 = theorem3_grouping(1u << 10, delta).groups();
            const double s2 = theorem3_grouping(1u << 20, delta).groups();
            CHECK(s2 / s1 <= 2.5);
        }
    }
    SUBCASE("domain of the budget") {
        CHECK_THROWS_AS(theorem3_grouping(16, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(theorem3_grouping(16, 0.54), std::invalid_argument);
        CHECK_NOTHROW(theorem3_grouping(16, 0.52));
    }
}

TEST_CASE("composed redundancy bound is additive") {
    CHECK(composed_redundancy_bound(1.0, 0.08) == doctest::Approx(1.08));
    CHECK(composed_redundancy_bound(0.0, 0.0) == doctest::Approx(0.0));
    CHECK(composed_redundancy_bound(0.02, 0.16) == doctest::Approx(0.18));
    CHECK_THROWS_AS(composed_redundancy_bound(-1, 0), std::invalid_argument);
}
