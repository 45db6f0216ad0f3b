#include "gac/sources.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace gac {

std::vector<double> zipf_probs(uint32_t n, double alpha) {
    if (n == 0) throw std::invalid_argument("alphabet size must be positive");
    if (alpha < 0) throw std::invalid_argument("zipf exponent must be nonnegative");
    std::vector<double> p(n);
    double sum = 0;
    for (uint32_t i = 0; i < n; ++i) {
        p[i] = std::pow(static_cast<double>(i + 1), -alpha);
        sum += p[i];
    }
    for (double& x : p) x /= sum;
    return p;
}

std::vector<double> geometric_probs(uint32_t n, double q) {
    if (n == 0) throw std::invalid_argument("alphabet size must be positive");
    if (!(q > 0) || !(q < 1)) throw std::invalid_argument("geometric ratio must be in (0,1)");
    std::vector<double> p(n);
    double sum = 0;
    double x = 1;
    for (uint32_t i = 0; i < n; ++i) {
        p[i] = x;
        sum += x;
        x *= q;
    }
    for (double& v : p) v /= sum;
    return p;
}

std::vector<uint32_t> sample_iid(const std::vector<double>& probs, uint64_t len,
                                 uint64_t seed) {
    std::vector<double> cdf(probs.size());
    double acc = 0;
    for (size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<uint32_t> out(len);
    for (uint64_t i = 0; i < len; ++i) {
        const double u = uni(rng);
        out[i] = static_cast<uint32_t>(
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    }
    return out;
}

double entropy_bits(const std::vector<double>& probs) {
    double h = 0;
    for (double p : probs)
        if (p > 0) h -= p * std::log2(p);
    return h;
}

} // namespace gac
