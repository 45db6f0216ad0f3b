#pragma once

#include <cstdint>
#include <vector>

namespace gac {

// Zipf probabilities p_i proportional to (i+1)^-alpha, i = 0..n-1.
std::vector<double> zipf_probs(uint32_t n, double alpha);

// Truncated geometric probabilities p_i proportional to q^i, 0 < q < 1.
std::vector<double> geometric_probs(uint32_t n, double q);

// i.i.d. samples from an arbitrary distribution, seeded mt19937_64.
std::vector<uint32_t> sample_iid(const std::vector<double>& probs, uint64_t len,
                                 uint64_t seed);

double entropy_bits(const std::vector<double>& probs);

} // namespace gac
