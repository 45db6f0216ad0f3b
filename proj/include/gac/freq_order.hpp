#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gac {

// Keeps the alphabet sorted by occurrence count with O(1) increment and
// decrement. Letters with equal count form a contiguous run ("class") in the
// sorted array; an update swaps the touched letter to the edge of its class
// and shifts two class boundaries.
//
// Internally everything is 0-based: letters 0..N-1, positions 0..N-1 in
// ascending count order. The descending rank of a letter (1 = most frequent)
// is N - position.
class FrequencyOrder {
public:
    FrequencyOrder(uint32_t n, uint32_t max_count);

    uint32_t size() const { return n_; }
    uint32_t max_count() const { return max_count_; }
    uint32_t count(uint32_t letter) const { return fr_[letter]; }

    // pre: count(letter) < max_count
    void increment(uint32_t letter);
    // pre: count(letter) > 0
    void decrement(uint32_t letter);

    uint32_t position(uint32_t letter) const { return inverse_[letter]; }
    uint32_t letter_at_position(uint32_t pos) const { return sorted_[pos]; }
    uint32_t rank_of(uint32_t letter) const { return n_ - inverse_[letter]; }
    uint32_t letter_at_rank(uint32_t rank) const { return sorted_[n_ - rank]; }

    // Reset all counts at once (used by model rescaling). O(N log N).
    void rebuild(const std::vector<uint32_t>& counts);

    // Full invariant check: permutation, sortedness, class tiling.
    bool validate() const;

    // Five lines (Fr, SortedAlphabet, InverseSort, SetBegin, SetEnd) with
    // 1-based letters and positions; set arrays cover classes 0..max count.
    std::string dump() const;

    // Primitive array touches performed by increment/decrement so far.
    uint64_t op_count() const { return ops_; }

private:
    void ensure_class(uint32_t k);

    uint32_t n_;
    uint32_t max_count_;
    std::vector<uint32_t> fr_;       // per-letter count
    std::vector<uint32_t> sorted_;   // position -> letter, ascending count
    std::vector<uint32_t> inverse_;  // letter -> position
    std::vector<uint32_t> set_begin_, set_end_; // class k -> position range
    std::vector<uint32_t> class_size_;
    uint64_t ops_ = 0;
};

} // namespace gac
