#include "gac/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gac {

namespace {

constexpr double kDeltaSlack = 1e-12; // tolerance on the <= delta side

bool is_pow2(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// max over l=1..m of l*log2(m/l)/(n_prev+l) for one group.
// The function has a single interior maximum in l, so for large groups it is
// enough to locate the critical point of the continuous relaxation
// (ln(m/l) = 1 + l/n_prev) and scan a small window around it.
double group_term(uint64_t n_prev, uint64_t m, uint64_t l) {
    return static_cast<double>(l) *
           std::log2(static_cast<double>(m) / static_cast<double>(l)) /
           static_cast<double>(n_prev + l);
}

} // namespace

GroupingPlan GroupingPlan::from_sizes(const std::vector<uint32_t>& sizes,
                                      bool pow2, double delta) {
    if (sizes.empty())
        throw std::invalid_argument("grouping plan needs at least one group");
    GroupingPlan plan;
    plan.sizes = sizes;
    plan.pow2 = pow2;
    plan.delta = delta;
    plan.prefixes.reserve(sizes.size() + 1);
    plan.prefixes.push_back(0);
    for (uint32_t m : sizes) {
        if (m == 0) throw std::invalid_argument("group size must be positive");
        if (pow2 && !is_pow2(m))
            throw std::invalid_argument("plan claims pow2 but a size is not");
        plan.prefixes.push_back(plan.prefixes.back() + m);
    }
    return plan;
}

std::string GroupingPlan::to_text() const {
    std::ostringstream os;
    os << sizes.size();
    for (uint32_t m : sizes) os << ' ' << m;
    return os.str();
}

GroupingPlan GroupingPlan::parse_text(const std::string& text) {
    std::istringstream is(text);
    uint64_t s = 0;
    if (!(is >> s) || s == 0)
        throw std::invalid_argument("bad plan text: missing group count");
    std::vector<uint32_t> sizes(s);
    for (uint64_t i = 0; i < s; ++i)
        if (!(is >> sizes[i]))
            throw std::invalid_argument("bad plan text: missing group size");
    bool pow2 = std::all_of(sizes.begin(), sizes.end(),
                            [](uint32_t m) { return is_pow2(m); });
    return from_sizes(sizes, pow2);
}

OrderedDistribution OrderedDistribution::checked(std::vector<double> p) {
    if (p.empty()) throw std::invalid_argument("empty distribution");
    long double sum = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) throw std::invalid_argument("negative probability");
        if (i > 0 && p[i] > p[i - 1] + 1e-15)
            throw std::invalid_argument("distribution is not non-increasing");
        sum += p[i];
    }
    if (std::abs(static_cast<double>(sum) - 1.0) > 1e-12)
        throw std::invalid_argument("distribution does not sum to 1");
    return OrderedDistribution{std::move(p)};
}

double grouping_redundancy(const OrderedDistribution& p, const GroupingPlan& plan) {
    const uint32_t n = p.size();
    if (plan.covered() < n)
        throw std::invalid_argument("plan covers fewer letters than the alphabet");
    double r = 0;
    for (uint32_t g = 0; g < plan.groups(); ++g) {
        const uint64_t begin = plan.prefixes[g];
        if (begin >= n) break;
        const uint64_t end = std::min<uint64_t>(plan.prefixes[g + 1], n);
        double pi = 0;
        for (uint64_t j = begin; j < end; ++j) pi += p.probs[j];
        if (pi <= 0) continue;
        const double phat = pi / static_cast<double>(plan.sizes[g]);
        for (uint64_t j = begin; j < end; ++j) {
            const double pj = p.probs[j];
            if (pj > 0) r += pj * std::log2(pj / phat);
        }
    }
    return r;
}

double group_worst_redundancy(uint64_t n_prev, uint64_t m) {
    if (m <= 1) return 0;
    if (m <= 4096) {
        double best = 0;
        for (uint64_t l = 1; l < m; ++l)
            best = std::max(best, group_term(n_prev, m, l));
        return best;
    }
    // Continuous critical point: ln(m/l) = 1 + l/n_prev (l = m/e if n_prev=0).
    double lstar;
    if (n_prev == 0) {
        lstar = static_cast<double>(m) / std::exp(1.0);
    } else {
        double lo = 1.0, hi = static_cast<double>(m);
        for (int it = 0; it < 200 && hi - lo > 0.25; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double h = std::log(static_cast<double>(m) / mid) - 1.0 -
                             mid / static_cast<double>(n_prev);
            (h > 0 ? lo : hi) = mid;
        }
        lstar = 0.5 * (lo + hi);
    }
    double best = std::max(group_term(n_prev, m, 1), 0.0);
    const uint64_t center = static_cast<uint64_t>(std::llround(lstar));
    const uint64_t from = center > 4 ? center - 4 : 1;
    const uint64_t to = std::min(m - 1, center + 4);
    for (uint64_t l = from; l <= to; ++l)
        best = std::max(best, group_term(n_prev, m, l));
    return best;
}

double worst_case_redundancy(const GroupingPlan& plan) {
    double best = 0;
    for (uint32_t g = 0; g < plan.groups(); ++g)
        best = std::max(best, group_worst_redundancy(plan.prefixes[g], plan.sizes[g]));
    return best;
}

double oracle_worst_case_redundancy(const GroupingPlan& plan, uint32_t n) {
    if (n == 0 || n > plan.covered())
        throw std::invalid_argument("oracle alphabet size out of range");
    double best = 0;
    std::vector<double> q;
    for (uint32_t l = 1; l <= n; ++l) {
        q.assign(n, 0.0);
        std::fill(q.begin(), q.begin() + l, 1.0 / static_cast<double>(l));
        best = std::max(best,
                        grouping_redundancy(OrderedDistribution{q}, plan));
    }
    return best;
}

namespace {

bool feasible(uint64_t n_prev, uint64_t m, double delta) {
    return group_worst_redundancy(n_prev, m) <= delta + kDeltaSlack;
}

// Largest feasible size for the group starting after n_prev letters.
uint64_t max_feasible_size(uint64_t n_prev, double delta, bool pow2) {
    if (pow2) {
        uint64_t m = 1;
        while (m < (uint64_t{1} << 40) && feasible(n_prev, m * 2, delta)) m *= 2;
        return m;
    }
    uint64_t hi = 2;
    while (hi < (uint64_t{1} << 40) && feasible(n_prev, hi, delta)) hi *= 2;
    // invariant: feasible(hi/2), !feasible(hi)
    uint64_t lo = hi / 2;
    while (hi - lo > 1) {
        const uint64_t mid = lo + (hi - lo) / 2;
        (feasible(n_prev, mid, delta) ? lo : hi) = mid;
    }
    return lo;
}

} // namespace

GroupingPlan optimal_grouping(uint64_t n, double delta, bool pow2) {
    if (n == 0) throw std::invalid_argument("alphabet size must be positive");
    if (delta < 0) throw std::invalid_argument("delta must be nonnegative");
    std::vector<uint32_t> sizes;
    uint64_t covered = 0;
    while (covered < n) {
        const uint64_t m = max_feasible_size(covered, delta, pow2);
        if (m > std::numeric_limits<uint32_t>::max())
            throw std::invalid_argument("group size overflow");
        sizes.push_back(static_cast<uint32_t>(m));
        covered += m;
    }
    return GroupingPlan::from_sizes(sizes, pow2, delta);
}

uint32_t min_groups_exact(uint32_t n, double delta, bool pow2) {
    if (n == 0) throw std::invalid_argument("alphabet size must be positive");
    if (delta < 0) throw std::invalid_argument("delta must be nonnegative");
    constexpr uint32_t kInf = std::numeric_limits<uint32_t>::max();
    std::vector<uint32_t> dp(n, kInf); // dp[v] = min groups covering first v letters
    dp[0] = 0;
    uint32_t best = kInf;
    for (uint32_t v = 0; v < n; ++v) {
        if (dp[v] == kInf) continue;
        const uint64_t mmax = max_feasible_size(v, delta, pow2);
        if (mmax >= n - v) best = std::min(best, dp[v] + 1);
        if (pow2) {
            for (uint64_t m = 1; m <= mmax && v + m < n; m *= 2)
                dp[v + m] = std::min(dp[v + m], dp[v] + 1);
        } else {
            const uint64_t cap = std::min<uint64_t>(mmax, n - 1 - v);
            for (uint64_t m = 1; m <= cap; ++m)
                dp[v + m] = std::min(dp[v + m], dp[v] + 1);
        }
    }
    return best;
}

GroupingPlan theorem3_grouping(uint64_t n, double delta) {
    constexpr double kLog2E = 1.4426950408889634;
    const double limit = kLog2E / std::exp(1.0);
    if (n == 0) throw std::invalid_argument("alphabet size must be positive");
    if (!(delta > 0) || !(delta < limit))
        throw std::invalid_argument("delta must lie in (0, log2(e)/e)");
    // m_i = floor(delta * e * n_{i-1} / log2(e)) keeps every group's term
    // l*log2(m/l)/(n_{i-1}+l) <= (m/e)*log2(e)/n_{i-1} <= delta.
    const double coef = delta * std::exp(1.0) / kLog2E;
    std::vector<uint32_t> sizes;
    uint64_t covered = 0;
    while (covered < n) {
        uint64_t m = static_cast<uint64_t>(coef * static_cast<double>(covered));
        m = std::max<uint64_t>(m, 1);
        if (m > std::numeric_limits<uint32_t>::max())
            throw std::invalid_argument("group size overflow");
        sizes.push_back(static_cast<uint32_t>(m));
        covered += m;
    }
    return GroupingPlan::from_sizes(sizes, false, delta);
}

double composed_redundancy_bound(double coder_bound, double grouping_delta) {
    if (coder_bound < 0 || grouping_delta < 0)
        throw std::invalid_argument("redundancy bounds must be nonnegative");
    return coder_bound + grouping_delta;
}

} // namespace gac
