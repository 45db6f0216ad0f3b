#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gac/errors.hpp"
#include "gac/grouping.hpp"
#include "gac/huffman.hpp"
#include "gac/model.hpp"
#include "gac/range_coder.hpp"

namespace gac {

enum class Mode : uint8_t { Plain = 0, Grouped = 1, Huffman = 2 };

// Container metadata; fully determines the decoder configuration.
struct StreamHeader {
    Mode mode = Mode::Grouped;
    uint32_t alphabet_size = 0;
    uint8_t c_num = 1;
    uint8_t c_den = 1;
    uint32_t max_count = 1u << 24;
    bool full_width_last_group = false;
    GroupingPlan plan;                       // empty for plain mode
    uint64_t message_length = 0;
    std::vector<uint8_t> huff_lengths;       // huffman mode only
    std::vector<uint32_t> rank_to_letter;    // huffman mode only
};

void write_header(std::vector<uint8_t>& out, const StreamHeader& h);
StreamHeader read_header(const uint8_t* data, size_t size, size_t& offset);

struct CodecParams {
    Mode mode = Mode::Grouped;
    uint32_t alphabet_size = 256;
    double delta = 0.08;
    bool pow2 = false;
    uint32_t c_num = 1;
    uint32_t c_den = 1;
    uint32_t max_count = 1u << 24;
    bool full_width_last_group = false;
    std::optional<GroupingPlan> plan; // overrides (alphabet_size, delta, pow2)
};

// Adaptive two-stage symbol coder: the group is coded against the model's
// integer masses, the in-group ordinal as a uniform symbol.
class GroupedStreamEncoder {
public:
    GroupedStreamEncoder(std::vector<uint8_t>& out, uint32_t alphabet,
                         GroupingPlan plan, ModelConfig cfg = {});
    void put(uint32_t letter);
    void finish() { rc_.finish(); }
    GroupedModel& model() { return model_; }

private:
    GroupedModel model_;
    RangeEncoder rc_;
};

class GroupedStreamDecoder {
public:
    GroupedStreamDecoder(const uint8_t* data, size_t size, uint32_t alphabet,
                         GroupingPlan plan, ModelConfig cfg = {});
    uint32_t get();
    GroupedModel& model() { return model_; }

private:
    GroupedModel model_;
    RangeDecoder rc_;
};

class PlainStreamEncoder {
public:
    PlainStreamEncoder(std::vector<uint8_t>& out, uint32_t alphabet,
                       ModelConfig cfg = {});
    void put(uint32_t letter);
    void finish() { rc_.finish(); }
    PlainModel& model() { return model_; }

private:
    PlainModel model_;
    RangeEncoder rc_;
};

class PlainStreamDecoder {
public:
    PlainStreamDecoder(const uint8_t* data, size_t size, uint32_t alphabet,
                       ModelConfig cfg = {});
    uint32_t get();
    PlainModel& model() { return model_; }

private:
    PlainModel model_;
    RangeDecoder rc_;
};

// Whole-message container round trip.
std::vector<uint8_t> encode_message(const std::vector<uint32_t>& symbols,
                                    const CodecParams& params);
std::vector<uint32_t> decode_message(const std::vector<uint8_t>& container);
StreamHeader peek_header(const std::vector<uint8_t>& container);

} // namespace gac
