#pragma once

#include <cstdint>
#include <vector>

#include "gac/bitio.hpp"
#include "gac/grouping.hpp"

namespace gac {

// Static two-part code: a canonical Huffman codeword for the letter's group
// followed by a fixed-width in-group index. Requires a pow2 plan so the
// index widths are integral. Letters are identified by their descending
// probability rank minus one (0-based).
class GroupedHuffmanCode {
public:
    // Builds from the grouped probability masses; zero-mass groups get one
    // count of weight so the static code still covers them.
    static GroupedHuffmanCode build(const OrderedDistribution& p,
                                    const GroupingPlan& plan);

    // Reconstructs from serialized canonical code lengths.
    static GroupedHuffmanCode from_lengths(const GroupingPlan& plan,
                                           std::vector<uint8_t> lengths,
                                           uint32_t alphabet);

    uint32_t alphabet_size() const { return n_; }
    const GroupingPlan& plan() const { return plan_; }
    const std::vector<uint8_t>& group_lengths() const { return lengths_; }
    uint64_t group_code(uint32_t g) const { return codes_[g]; }
    unsigned index_bits(uint32_t g) const { return index_bits_[g]; }
    unsigned codeword_length(uint32_t letter) const;

    void encode_letter(BitWriter& out, uint32_t letter) const;
    // Throws DecodeError (std::runtime_error) on malformed input.
    uint32_t decode_letter(BitReader& in) const;

    void encode(BitWriter& out, const std::vector<uint32_t>& letters) const;
    std::vector<uint32_t> decode(BitReader& in, uint64_t count) const;

    // Expected bits per letter under p.
    double average_length(const OrderedDistribution& p) const;

private:
    void finish_tables();

    uint32_t n_ = 0;
    GroupingPlan plan_;
    std::vector<uint8_t> lengths_;      // canonical Huffman lengths per group
    std::vector<uint64_t> codes_;       // canonical codewords per group
    std::vector<uint8_t> index_bits_;   // log2(m_i)
    // canonical decode tables indexed by length
    std::vector<uint64_t> first_code_;
    std::vector<uint32_t> first_index_;
    std::vector<uint32_t> decode_order_; // groups sorted by (length, index)
    unsigned max_length_ = 0;
};

} // namespace gac
