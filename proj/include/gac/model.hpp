#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gac/fenwick.hpp"
#include "gac/freq_order.hpp"
#include "gac/grouping.hpp"

namespace gac {

// Smoothing constant c = c_num/c_den keeps all masses integral:
// mass(letter) = count*c_den + c_num, total = t*c_den + N*c_num.
struct ModelConfig {
    uint32_t c_num = 1;
    uint32_t c_den = 1;
    uint32_t max_count = 1u << 24;      // per-letter count cap
    uint64_t total_limit = 1u << 22;    // rescale before total exceeds this
    bool full_width_last_group = false; // code ordinals with the plan's full
                                        // size even when truncated by N
};

// Adaptive grouped source model. Groups are fixed windows over descending
// frequency ranks; the letter->rank map moves with the counts, so a symbol
// update touches one frequency, at most one group mass, and the log-time
// cumulative structure over the s groups.
class GroupedModel {
public:
    GroupedModel(uint32_t alphabet, GroupingPlan plan, ModelConfig cfg = {});

    uint32_t alphabet_size() const { return n_; }
    uint32_t group_count() const { return static_cast<uint32_t>(eff_size_.size()); }
    uint64_t total() const { return total_; }
    const GroupingPlan& plan() const { return plan_; }
    const ModelConfig& config() const { return cfg_; }
    const FrequencyOrder& order() const { return order_; }

    uint32_t group_of_rank(uint32_t rank) const { return rank_group_[rank - 1]; }
    uint64_t group_mass(uint32_t g) const { return fen_.value(g); }
    uint64_t group_cum(uint32_t g) const { return fen_.prefix(g); }
    // [Q_g, Q_{g+1}) as integer masses over total().
    std::pair<uint64_t, uint64_t> group_interval(uint32_t g) const;
    uint32_t group_begin_rank(uint32_t g) const { return begin_rank_[g]; }
    uint32_t group_size(uint32_t g) const { return eff_size_[g]; }
    // Stage-2 ordinal alphabet size (effective size, or the plan's full size
    // for a truncated pow2 last group in full-width mode).
    uint32_t coded_width(uint32_t g) const;

    uint32_t find_group(uint64_t target) const { return static_cast<uint32_t>(fen_.find(target)); }

    uint32_t letter_rank(uint32_t letter) const { return order_.rank_of(letter); }
    uint32_t letter_at_rank(uint32_t rank) const { return order_.letter_at_rank(rank); }

    // (count*c_den + c_num, total) -- the smoothed estimate as an exact ratio.
    std::pair<uint64_t, uint64_t> letter_probability(uint32_t letter) const;

    void update(uint32_t letter);

    uint64_t cum_ops() const { return fen_.op_count(); }
    void reset_cum_ops() { fen_.reset_op_count(); }
    uint32_t rescales() const { return rescales_; }
    uint64_t state_hash() const;

    // From-scratch recomputation of the group masses (test oracle).
    std::vector<uint64_t> masses_from_scratch() const;

private:
    void rebuild_masses();
    void rescale();

    uint32_t n_;
    GroupingPlan plan_;
    ModelConfig cfg_;
    FrequencyOrder order_;
    std::vector<uint32_t> rank_group_;  // rank-1 -> group index
    std::vector<uint32_t> eff_size_;    // group sizes truncated to N
    std::vector<uint32_t> begin_rank_;  // first rank of each group (1-based)
    FenwickTree fen_;
    uint64_t total_ = 0;
    uint32_t rescales_ = 0;
};

// Baseline adaptive model over all N letters with a per-letter cumulative
// structure; no ordering needed since each letter owns its slot.
class PlainModel {
public:
    PlainModel(uint32_t alphabet, ModelConfig cfg = {});

    uint32_t alphabet_size() const { return n_; }
    uint64_t total() const { return total_; }
    const ModelConfig& config() const { return cfg_; }

    uint32_t count(uint32_t letter) const { return counts_[letter]; }
    uint64_t letter_mass(uint32_t letter) const { return fen_.value(letter); }
    uint64_t letter_cum(uint32_t letter) const { return fen_.prefix(letter); }
    uint32_t find_letter(uint64_t target) const { return static_cast<uint32_t>(fen_.find(target)); }

    void update(uint32_t letter);

    uint64_t cum_ops() const { return fen_.op_count(); }
    void reset_cum_ops() { fen_.reset_op_count(); }
    uint32_t rescales() const { return rescales_; }
    uint64_t state_hash() const;

private:
    void rebuild();
    void rescale();

    uint32_t n_;
    ModelConfig cfg_;
    std::vector<uint32_t> counts_;
    FenwickTree fen_;
    uint64_t total_ = 0;
    uint32_t rescales_ = 0;
};

} // namespace gac
