#include "gac/huffman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "gac/errors.hpp"

namespace gac {

namespace {

unsigned log2_exact(uint64_t x) {
    unsigned b = 0;
    while ((uint64_t{1} << b) < x) ++b;
    return b;
}

// Huffman code lengths for integer weights, ties broken by smallest
// original index so builds are reproducible.
std::vector<uint8_t> huffman_lengths(const std::vector<uint64_t>& weights) {
    const size_t s = weights.size();
    if (s == 1) return {0};
    struct Node {
        uint64_t weight;
        uint32_t tie;
        int32_t left, right; // -1 for leaves
    };
    std::vector<Node> nodes;
    nodes.reserve(2 * s);
    using Entry = std::tuple<uint64_t, uint32_t, uint32_t>; // weight, tie, node id
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    for (size_t i = 0; i < s; ++i) {
        nodes.push_back({weights[i], static_cast<uint32_t>(i), -1, -1});
        pq.emplace(weights[i], static_cast<uint32_t>(i), static_cast<uint32_t>(i));
    }
    while (pq.size() > 1) {
        auto [wa, ta, a] = pq.top();
        pq.pop();
        auto [wb, tb, b] = pq.top();
        pq.pop();
        const uint32_t id = static_cast<uint32_t>(nodes.size());
        nodes.push_back({wa + wb, std::min(ta, tb),
                         static_cast<int32_t>(a), static_cast<int32_t>(b)});
        pq.emplace(wa + wb, std::min(ta, tb), id);
    }
    std::vector<uint8_t> lengths(s, 0);
    // iterative depth walk from the root
    std::vector<std::pair<uint32_t, uint8_t>> stack{{static_cast<uint32_t>(nodes.size() - 1), 0}};
    while (!stack.empty()) {
        auto [id, depth] = stack.back();
        stack.pop_back();
        const Node& nd = nodes[id];
        if (nd.left < 0) {
            lengths[id] = depth;
        } else {
            stack.emplace_back(nd.left, depth + 1);
            stack.emplace_back(nd.right, depth + 1);
        }
    }
    return lengths;
}

} // namespace

GroupedHuffmanCode GroupedHuffmanCode::build(const OrderedDistribution& p,
                                             const GroupingPlan& plan) {
    if (!plan.pow2)
        throw std::invalid_argument("grouped Huffman needs a pow2 plan");
    const uint32_t n = p.size();
    if (plan.covered() < n)
        throw std::invalid_argument("plan covers fewer letters than the alphabet");

    const uint32_t s = plan.groups();
    std::vector<uint64_t> weights(s, 0);
    for (uint32_t g = 0; g < s; ++g) {
        const uint64_t begin = plan.prefixes[g];
        const uint64_t end = std::min<uint64_t>(plan.prefixes[g + 1], n);
        double pi = 0;
        for (uint64_t j = begin; j < end && j < n; ++j) pi += p.probs[j];
        weights[g] = static_cast<uint64_t>(std::llround(pi * 4294967296.0));
        if (weights[g] == 0) weights[g] = 1;
    }

    GroupedHuffmanCode code;
    code.n_ = n;
    code.plan_ = plan;
    code.lengths_ = huffman_lengths(weights);
    code.finish_tables();
    return code;
}

GroupedHuffmanCode GroupedHuffmanCode::from_lengths(const GroupingPlan& plan,
                                                    std::vector<uint8_t> lengths,
                                                    uint32_t alphabet) {
    if (!plan.pow2)
        throw DecodeError("grouped Huffman needs a pow2 plan");
    if (lengths.size() != plan.groups())
        throw DecodeError("code length list does not match the plan");
    if (plan.covered() < alphabet)
        throw DecodeError("plan covers fewer letters than the alphabet");
    GroupedHuffmanCode code;
    code.n_ = alphabet;
    code.plan_ = plan;
    code.lengths_ = std::move(lengths);
    code.finish_tables();
    return code;
}

void GroupedHuffmanCode::finish_tables() {
    const uint32_t s = plan_.groups();
    index_bits_.resize(s);
    for (uint32_t g = 0; g < s; ++g)
        index_bits_[g] = static_cast<uint8_t>(log2_exact(plan_.sizes[g]));

    decode_order_.resize(s);
    std::iota(decode_order_.begin(), decode_order_.end(), 0);
    std::sort(decode_order_.begin(), decode_order_.end(), [&](uint32_t a, uint32_t b) {
        return std::tie(lengths_[a], a) < std::tie(lengths_[b], b);
    });
    max_length_ = lengths_.empty() ? 0 : *std::max_element(lengths_.begin(), lengths_.end());
    if (s > 1 && max_length_ == 0)
        throw DecodeError("zero code length with more than one group");
    if (max_length_ >= 64)
        throw DecodeError("code length out of range");

    codes_.assign(s, 0);
    first_code_.assign(max_length_ + 1, 0);
    first_index_.assign(max_length_ + 1, 0);
    uint64_t next = 0;
    unsigned prev_len = lengths_[decode_order_[0]];
    // Kraft check while assigning canonical codes.
    long double kraft = 0;
    for (uint32_t i = 0; i < s; ++i) {
        const uint32_t g = decode_order_[i];
        const unsigned len = lengths_[g];
        if (len > 0) kraft += std::pow(0.5L, static_cast<int>(len));
        next <<= (len - prev_len);
        if (i == 0 || len != prev_len) {
            first_code_[len] = next;
            first_index_[len] = i;
        }
        codes_[g] = next;
        ++next;
        prev_len = len;
    }
    if (s > 1 && kraft > 1.0L + 1e-12L)
        throw DecodeError("code lengths violate the Kraft inequality");
}

unsigned GroupedHuffmanCode::codeword_length(uint32_t letter) const {
    const uint32_t g = [&] {
        for (uint32_t i = 0; i < plan_.groups(); ++i)
            if (letter < plan_.prefixes[i + 1]) return i;
        throw std::out_of_range("letter out of range");
    }();
    return lengths_[g] + index_bits_[g];
}

void GroupedHuffmanCode::encode_letter(BitWriter& out, uint32_t letter) const {
    if (letter >= n_) throw std::out_of_range("letter out of range");
    uint32_t g = 0;
    while (letter >= plan_.prefixes[g + 1]) ++g;
    out.put_bits(codes_[g], lengths_[g]);
    out.put_bits(letter - plan_.prefixes[g], index_bits_[g]);
}

uint32_t GroupedHuffmanCode::decode_letter(BitReader& in) const {
    uint32_t g;
    if (plan_.groups() == 1) {
        g = 0;
    } else {
        uint64_t acc = 0;
        unsigned len = 0;
        for (;;) {
            if (len >= max_length_ || in.overran())
                throw DecodeError("invalid Huffman codeword");
            acc = (acc << 1) | in.get_bit();
            ++len;
            const uint32_t cnt = [&]() -> uint32_t {
                // number of codewords of this length
                uint32_t c = 0;
                for (uint32_t i = first_index_[len];
                     i < plan_.groups() && lengths_[decode_order_[i]] == len; ++i)
                    ++c;
                return c;
            }();
            if (cnt > 0 && acc >= first_code_[len] && acc - first_code_[len] < cnt) {
                g = decode_order_[first_index_[len] + (acc - first_code_[len])];
                break;
            }
        }
    }
    const uint64_t index = in.get_bits(index_bits_[g]);
    const uint64_t letter = plan_.prefixes[g] + index;
    if (letter >= n_) throw DecodeError("in-group index past the alphabet");
    return static_cast<uint32_t>(letter);
}

void GroupedHuffmanCode::encode(BitWriter& out, const std::vector<uint32_t>& letters) const {
    for (uint32_t a : letters) encode_letter(out, a);
}

std::vector<uint32_t> GroupedHuffmanCode::decode(BitReader& in, uint64_t count) const {
    std::vector<uint32_t> letters;
    letters.reserve(count);
    for (uint64_t i = 0; i < count; ++i) letters.push_back(decode_letter(in));
    if (in.overran()) throw DecodeError("truncated bit stream");
    return letters;
}

double GroupedHuffmanCode::average_length(const OrderedDistribution& p) const {
    double sum = 0;
    uint32_t g = 0;
    for (uint32_t j = 0; j < p.size(); ++j) {
        while (j >= plan_.prefixes[g + 1]) ++g;
        sum += p.probs[j] * (lengths_[g] + index_bits_[g]);
    }
    return sum;
}

} // namespace gac
