#include "gac/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace gac {

namespace {

uint64_t fnv1a(uint64_t h, uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xFF;
        h *= 0x100000001b3ull;
    }
    return h;
}

bool is_pow2(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

void check_config(uint32_t n, const ModelConfig& cfg) {
    if (cfg.c_num == 0 || cfg.c_den == 0)
        throw std::invalid_argument("smoothing constant must be positive");
    if (cfg.max_count == 0)
        throw std::invalid_argument("max count must be positive");
    if (cfg.total_limit >= (uint64_t{1} << 24))
        throw std::invalid_argument("total limit must stay below the coder's 2^24 threshold");
    const uint64_t base = uint64_t{n} * cfg.c_num;
    if (base + cfg.c_den > cfg.total_limit)
        throw std::invalid_argument("total limit too small for this alphabet");
}

} // namespace

GroupedModel::GroupedModel(uint32_t alphabet, GroupingPlan plan, ModelConfig cfg)
    : n_(alphabet), plan_(std::move(plan)), cfg_(cfg),
      order_(alphabet, cfg.max_count) {
    check_config(n_, cfg_);
    if (plan_.covered() < n_)
        throw std::invalid_argument("plan covers fewer letters than the alphabet");
    rank_group_.resize(n_);
    for (uint32_t g = 0; g < plan_.groups(); ++g) {
        const uint64_t begin = plan_.prefixes[g];
        if (begin >= n_) break;
        const uint64_t end = std::min<uint64_t>(plan_.prefixes[g + 1], n_);
        eff_size_.push_back(static_cast<uint32_t>(end - begin));
        begin_rank_.push_back(static_cast<uint32_t>(begin) + 1);
        for (uint64_t r = begin; r < end; ++r)
            rank_group_[r] = static_cast<uint32_t>(eff_size_.size()) - 1;
    }
    rebuild_masses();
}

void GroupedModel::rebuild_masses() {
    std::vector<uint64_t> masses(eff_size_.size(), 0);
    total_ = 0;
    for (uint32_t rank = 1; rank <= n_; ++rank) {
        const uint32_t letter = order_.letter_at_rank(rank);
        const uint64_t m = uint64_t{order_.count(letter)} * cfg_.c_den + cfg_.c_num;
        masses[rank_group_[rank - 1]] += m;
        total_ += m;
    }
    fen_.build(masses);
}

std::pair<uint64_t, uint64_t> GroupedModel::group_interval(uint32_t g) const {
    const uint64_t lo = fen_.prefix(g);
    return {lo, lo + fen_.value(g)};
}

uint32_t GroupedModel::coded_width(uint32_t g) const {
    if (cfg_.full_width_last_group) {
        const uint64_t full = plan_.sizes[g];
        if (is_pow2(full)) return static_cast<uint32_t>(full);
    }
    return eff_size_[g];
}

std::pair<uint64_t, uint64_t> GroupedModel::letter_probability(uint32_t letter) const {
    return {uint64_t{order_.count(letter)} * cfg_.c_den + cfg_.c_num, total_};
}

void GroupedModel::update(uint32_t letter) {
    if (letter >= n_) throw std::out_of_range("letter out of range");
    if (total_ + cfg_.c_den > cfg_.total_limit ||
        order_.count(letter) + 1 >= cfg_.max_count)
        rescale();
    // The incremented letter swaps with the least-ranked letter of its count
    // class; both carried the same mass, so only the destination rank's group
    // gains the extra c_den.
    order_.increment(letter);
    const uint32_t new_rank = order_.rank_of(letter);
    fen_.add(rank_group_[new_rank - 1], cfg_.c_den);
    total_ += cfg_.c_den;
}

void GroupedModel::rescale() {
    std::vector<uint32_t> counts(n_);
    for (uint32_t a = 0; a < n_; ++a)
        counts[a] = (order_.count(a) + 1) / 2;
    order_.rebuild(counts);
    rebuild_masses();
    ++rescales_;
}

uint64_t GroupedModel::state_hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint32_t a = 0; a < n_; ++a) h = fnv1a(h, order_.count(a));
    for (uint32_t r = 1; r <= n_; ++r) h = fnv1a(h, order_.letter_at_rank(r));
    h = fnv1a(h, total_);
    return h;
}

std::vector<uint64_t> GroupedModel::masses_from_scratch() const {
    std::vector<uint64_t> masses(eff_size_.size(), 0);
    for (uint32_t rank = 1; rank <= n_; ++rank) {
        const uint32_t letter = order_.letter_at_rank(rank);
        masses[rank_group_[rank - 1]] +=
            uint64_t{order_.count(letter)} * cfg_.c_den + cfg_.c_num;
    }
    return masses;
}

PlainModel::PlainModel(uint32_t alphabet, ModelConfig cfg)
    : n_(alphabet), cfg_(cfg), counts_(alphabet, 0) {
    if (alphabet == 0) throw std::invalid_argument("alphabet size must be positive");
    check_config(n_, cfg_);
    rebuild();
}

void PlainModel::rebuild() {
    std::vector<uint64_t> masses(n_);
    total_ = 0;
    for (uint32_t a = 0; a < n_; ++a) {
        masses[a] = uint64_t{counts_[a]} * cfg_.c_den + cfg_.c_num;
        total_ += masses[a];
    }
    fen_.build(masses);
}

void PlainModel::update(uint32_t letter) {
    if (letter >= n_) throw std::out_of_range("letter out of range");
    if (total_ + cfg_.c_den > cfg_.total_limit ||
        counts_[letter] + 1 >= cfg_.max_count)
        rescale();
    counts_[letter]++;
    fen_.add(letter, cfg_.c_den);
    total_ += cfg_.c_den;
}

void PlainModel::rescale() {
    for (auto& c : counts_) c = (c + 1) / 2;
    rebuild();
    ++rescales_;
}

uint64_t PlainModel::state_hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint32_t a = 0; a < n_; ++a) h = fnv1a(h, counts_[a]);
    h = fnv1a(h, total_);
    return h;
}

} // namespace gac
