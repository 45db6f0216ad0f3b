#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "gac/grouping.hpp"

namespace testutil {

// Random ordered distribution: sorted exponential spacings, normalized.
inline gac::OrderedDistribution random_ordered_distribution(uint32_t n,
                                                            std::mt19937_64& rng) {
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> p(n);
    long double sum = 0;
    for (auto& x : p) {
        x = exp1(rng);
        sum += x;
    }
    for (auto& x : p) x = static_cast<double>(x / sum);
    std::sort(p.begin(), p.end(), std::greater<>());
    // nudge the largest entry so rounding never pushes the sum off 1
    long double total = 0;
    for (double x : p) total += x;
    p[0] += static_cast<double>(1.0L - total);
    return gac::OrderedDistribution{std::move(p)};
}

// Random plan with total coverage in [1, max_cover].
inline gac::GroupingPlan random_plan(uint32_t max_cover, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> cover_d(1, max_cover);
    const uint32_t cover = cover_d(rng);
    std::vector<uint32_t> sizes;
    uint32_t left = cover;
    while (left > 0) {
        std::uniform_int_distribution<uint32_t> size_d(1, left);
        const uint32_t m = size_d(rng);
        sizes.push_back(m);
        left -= m;
    }
    return gac::GroupingPlan::from_sizes(sizes);
}

// All compositions of n (every plan over exactly n letters).
inline std::vector<std::vector<uint32_t>> all_compositions(uint32_t n) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur;
    auto rec = [&](auto&& self, uint32_t left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (uint32_t m = 1; m <= left; ++m) {
            cur.push_back(m);
            self(self, left - m);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

} // namespace testutil
