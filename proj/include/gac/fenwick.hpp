#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gac {

// Binary indexed tree over u64 masses with an instrumented node-visit
// counter (the portable speed proxy: visits scale with log of the size).
class FenwickTree {
public:
    FenwickTree() = default;

    explicit FenwickTree(const std::vector<uint64_t>& values) { build(values); }

    void build(const std::vector<uint64_t>& values) {
        n_ = values.size();
        tree_.assign(n_ + 1, 0);
        total_ = 0;
        for (size_t i = 0; i < n_; ++i) {
            tree_[i + 1] += values[i];
            const size_t parent = (i + 1) + ((i + 1) & -(i + 1));
            if (parent <= n_) tree_[parent] += tree_[i + 1];
            total_ += values[i];
        }
    }

    size_t size() const { return n_; }
    uint64_t total() const { return total_; }

    void add(size_t index, uint64_t delta) {
        for (size_t i = index + 1; i <= n_; i += i & -i) {
            tree_[i] += delta;
            ++ops_;
        }
        total_ += delta;
    }

    // Sum of values[0..index).
    uint64_t prefix(size_t index) const {
        uint64_t sum = 0;
        for (size_t i = index; i > 0; i -= i & -i) {
            sum += tree_[i];
            ++ops_;
        }
        return sum;
    }

    uint64_t value(size_t index) const {
        return prefix(index + 1) - prefix(index);
    }

    // Index of the bucket containing target, i.e. the largest i with
    // prefix(i) <= target. pre: target < total().
    size_t find(uint64_t target) const {
        if (target >= total_) throw std::out_of_range("fenwick target >= total");
        size_t pos = 0;
        size_t step = 1;
        while (step * 2 <= n_) step *= 2;
        for (; step > 0; step /= 2) {
            if (pos + step <= n_ && tree_[pos + step] <= target) {
                pos += step;
                target -= tree_[pos];
            }
            ++ops_;
        }
        return pos; // 0-based bucket index
    }

    uint64_t op_count() const { return ops_; }
    void reset_op_count() { ops_ = 0; }

private:
    size_t n_ = 0;
    uint64_t total_ = 0;
    std::vector<uint64_t> tree_;
    mutable uint64_t ops_ = 0;
};

} // namespace gac
