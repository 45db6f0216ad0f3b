#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gac {

// Contiguous partition of a probability-ordered alphabet. Group i holds the
// letters at descending-probability ranks n_{i-1}+1 .. n_i. The last group
// may extend past the nominal alphabet size; consumers truncate as needed.
struct GroupingPlan {
    std::vector<uint32_t> sizes;    // m_1 .. m_s, each >= 1
    std::vector<uint64_t> prefixes; // n_0 = 0, n_i = n_{i-1} + m_i
    bool pow2 = false;              // every size is a power of two
    double delta = 0.0;             // budget the plan was built for, 0 if hand-made

    uint32_t groups() const { return static_cast<uint32_t>(sizes.size()); }
    uint64_t covered() const { return prefixes.empty() ? 0 : prefixes.back(); }

    static GroupingPlan from_sizes(const std::vector<uint32_t>& sizes,
                                   bool pow2 = false, double delta = 0.0);

    // Canonical text form: "s m_1 m_2 ... m_s".
    std::string to_text() const;
    static GroupingPlan parse_text(const std::string& text);
};

// Probability vector with p_1 >= p_2 >= ... >= p_N >= 0 summing to 1.
struct OrderedDistribution {
    std::vector<double> probs;

    uint32_t size() const { return static_cast<uint32_t>(probs.size()); }

    // Validates ordering and normalization, throws std::invalid_argument.
    static OrderedDistribution checked(std::vector<double> p);
};

// Exact per-letter redundancy of coding p with the grouped (uniform within
// group) distribution, in bits. Zero-probability letters contribute zero.
double grouping_redundancy(const OrderedDistribution& p, const GroupingPlan& plan);

// Worst contribution of a single group of size m starting after n_prev
// letters: max over l=1..m of l*log2(m/l)/(n_prev+l).
double group_worst_redundancy(uint64_t n_prev, uint64_t m);

// Supremum of grouping_redundancy over all ordered distributions on the
// covered alphabet (closed form, exact).
double worst_case_redundancy(const GroupingPlan& plan);

// Brute-force check of the same supremum: maximizes over the extreme
// distributions q_l = (1/l,...,1/l,0,...,0), l = 1..N. Intended for small N.
double oracle_worst_case_redundancy(const GroupingPlan& plan, uint32_t n);

// Minimal-group plan with worst_case_redundancy <= delta covering >= N
// letters. Greedy: each group takes the largest feasible size.
GroupingPlan optimal_grouping(uint64_t n, double delta, bool pow2);

// Exact minimal group count by dynamic programming; test oracle for the
// greedy. Intended for N <= 4096.
uint32_t min_groups_exact(uint32_t n, double delta, bool pow2);

// Closed-form construction: group sizes grow geometrically with ratio
// 1 + delta*e/log2(e), which keeps every group's worst-case contribution
// under delta without searching. Requires 0 < delta < log2(e)/e.
GroupingPlan theorem3_grouping(uint64_t n, double delta);

// Additive composition of the coder's own redundancy bound with the
// grouping budget.
double composed_redundancy_bound(double coder_bound, double grouping_delta);

} // namespace gac
