#include "gac/freq_order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gac {

FrequencyOrder::FrequencyOrder(uint32_t n, uint32_t max_count)
    : n_(n), max_count_(max_count) {
    if (n == 0) throw std::invalid_argument("alphabet size must be positive");
    if (max_count == 0) throw std::invalid_argument("max count must be positive");
    fr_.assign(n, 0);
    sorted_.resize(n);
    std::iota(sorted_.begin(), sorted_.end(), 0);
    inverse_ = sorted_;
    set_begin_.assign(1, 0);
    set_end_.assign(1, n - 1);
    class_size_.assign(1, n);
}

void FrequencyOrder::ensure_class(uint32_t k) {
    if (k >= class_size_.size()) {
        const size_t cap = std::max<size_t>(k + 1, class_size_.size() * 2);
        set_begin_.resize(cap, 0);
        set_end_.resize(cap, 0);
        class_size_.resize(cap, 0);
    }
}

void FrequencyOrder::increment(uint32_t letter) {
    if (letter >= n_) throw std::out_of_range("letter out of range");
    const uint32_t k = fr_[letter];
    if (k >= max_count_)
        throw std::overflow_error("count saturated; rescale required");
    ensure_class(k + 1);

    const uint32_t pos = inverse_[letter];
    const uint32_t last = set_end_[k];
    const uint32_t other = sorted_[last];
    sorted_[last] = letter;
    sorted_[pos] = other;
    inverse_[letter] = last;
    inverse_[other] = pos;

    set_end_[k] = last - 1; // may wrap if class k empties at position 0; never read then
    class_size_[k]--;
    if (class_size_[k + 1] > 0) {
        set_begin_[k + 1] = last; // was last+1: class k+1 starts right after class k
    } else {
        set_begin_[k + 1] = last;
        set_end_[k + 1] = last;
    }
    class_size_[k + 1]++;
    fr_[letter] = k + 1;
    ops_ += 16;
}

void FrequencyOrder::decrement(uint32_t letter) {
    if (letter >= n_) throw std::out_of_range("letter out of range");
    const uint32_t k = fr_[letter];
    if (k == 0) throw std::underflow_error("count already zero");

    const uint32_t pos = inverse_[letter];
    const uint32_t first = set_begin_[k];
    const uint32_t other = sorted_[first];
    sorted_[first] = letter;
    sorted_[pos] = other;
    inverse_[letter] = first;
    inverse_[other] = pos;

    set_begin_[k] = first + 1;
    class_size_[k]--;
    if (class_size_[k - 1] > 0) {
        set_end_[k - 1] = first;
    } else {
        set_begin_[k - 1] = first;
        set_end_[k - 1] = first;
    }
    class_size_[k - 1]++;
    fr_[letter] = k - 1;
    ops_ += 16;
}

void FrequencyOrder::rebuild(const std::vector<uint32_t>& counts) {
    if (counts.size() != n_) throw std::invalid_argument("count vector size mismatch");
    for (uint32_t c : counts)
        if (c > max_count_) throw std::invalid_argument("count above max");
    fr_ = counts;
    std::iota(sorted_.begin(), sorted_.end(), 0);
    std::stable_sort(sorted_.begin(), sorted_.end(),
                     [&](uint32_t a, uint32_t b) { return fr_[a] < fr_[b]; });
    const uint32_t kmax = *std::max_element(fr_.begin(), fr_.end());
    set_begin_.assign(kmax + 1, 0);
    set_end_.assign(kmax + 1, 0);
    class_size_.assign(kmax + 1, 0);
    for (uint32_t pos = 0; pos < n_; ++pos) {
        const uint32_t letter = sorted_[pos];
        inverse_[letter] = pos;
        const uint32_t k = fr_[letter];
        if (class_size_[k] == 0) set_begin_[k] = pos;
        set_end_[k] = pos;
        class_size_[k]++;
    }
}

bool FrequencyOrder::validate() const {
    std::vector<bool> seen(n_, false);
    for (uint32_t pos = 0; pos < n_; ++pos) {
        const uint32_t letter = sorted_[pos];
        if (letter >= n_ || seen[letter]) return false;
        seen[letter] = true;
        if (inverse_[letter] != pos) return false;
        if (pos > 0 && fr_[sorted_[pos - 1]] > fr_[letter]) return false;
    }
    // classes must tile 0..n-1 in increasing count order
    uint32_t pos = 0;
    uint32_t total = 0;
    for (uint32_t k = 0; k < class_size_.size(); ++k) {
        if (class_size_[k] == 0) continue;
        if (set_begin_[k] != pos) return false;
        if (set_end_[k] != pos + class_size_[k] - 1) return false;
        for (uint32_t p = set_begin_[k]; p <= set_end_[k]; ++p)
            if (fr_[sorted_[p]] != k) return false;
        pos = set_end_[k] + 1;
        total += class_size_[k];
    }
    return total == n_;
}

std::string FrequencyOrder::dump() const {
    std::ostringstream os;
    auto line = [&os](const char* name, auto begin, auto end, uint32_t bias) {
        os << name << ':';
        for (auto it = begin; it != end; ++it) os << ' ' << (*it + bias);
        os << '\n';
    };
    line("Fr", fr_.begin(), fr_.end(), 0);
    line("SortedAlphabet", sorted_.begin(), sorted_.end(), 1);
    line("InverseSort", inverse_.begin(), inverse_.end(), 1);
    const uint32_t kmax = *std::max_element(fr_.begin(), fr_.end());
    line("SetBegin", set_begin_.begin(), set_begin_.begin() + kmax + 1, 1);
    line("SetEnd", set_end_.begin(), set_end_.begin() + kmax + 1, 1);
    return os.str();
}

} // namespace gac
