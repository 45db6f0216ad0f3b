#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gac {

// 64-bit low / 32-bit range coder with byte renormalization and carry
// propagation through a cache + pending-0xFF run. Total frequency must stay
// below 2^24 so the scaled range never collapses.
class RangeEncoder {
public:
    explicit RangeEncoder(std::vector<uint8_t>& out) : out_(out) {}

    void encode(uint64_t cum, uint64_t freq, uint64_t tot) {
        const uint32_t r = range_ / static_cast<uint32_t>(tot);
        low_ += cum * r;
        range_ = static_cast<uint32_t>(freq) * r;
        normalize();
    }

    // Uniform symbol over 2^bits outcomes; same arithmetic as
    // encode(value, 1, 2^bits) but with shifts.
    void encode_bits(uint32_t value, unsigned bits) {
        const uint32_t r = range_ >> bits;
        low_ += uint64_t{value} * r;
        range_ = r;
        normalize();
    }

    void finish() {
        for (int i = 0; i < 5; ++i) shift_low();
    }

private:
    void normalize() {
        while (range_ < kTop) {
            shift_low();
            range_ <<= 8;
        }
    }

    void shift_low() {
        if (static_cast<uint32_t>(low_) < 0xFF000000u || (low_ >> 32) != 0) {
            const uint8_t carry = static_cast<uint8_t>(low_ >> 32);
            uint8_t byte = cache_;
            do {
                out_.push_back(static_cast<uint8_t>(byte + carry));
                byte = 0xFF;
            } while (--cache_size_ != 0);
            cache_ = static_cast<uint8_t>(low_ >> 24);
        }
        ++cache_size_;
        low_ = (low_ << 8) & 0xFFFFFFFFull;
    }

    static constexpr uint32_t kTop = 1u << 24;
    std::vector<uint8_t>& out_;
    uint64_t low_ = 0;
    uint32_t range_ = 0xFFFFFFFFu;
    uint8_t cache_ = 0;
    uint64_t cache_size_ = 1;
};

class RangeDecoder {
public:
    RangeDecoder(const uint8_t* data, size_t size) : data_(data), size_(size) {
        for (int i = 0; i < 5; ++i) code_ = (code_ << 8) | next_byte();
    }

    // Scaled value in [0, tot); caller maps it to a symbol interval and then
    // calls consume with that interval.
    uint64_t peek(uint64_t tot) {
        r_ = range_ / static_cast<uint32_t>(tot);
        uint64_t value = code_ / r_;
        if (value >= tot) value = tot - 1; // clamp rounding at interval top
        return value;
    }

    void consume(uint64_t cum, uint64_t freq) {
        code_ -= static_cast<uint32_t>(cum * r_);
        range_ = static_cast<uint32_t>(freq) * r_;
        normalize();
    }

    uint32_t decode_bits(unsigned bits) {
        r_ = range_ >> bits;
        uint32_t value = code_ / r_;
        const uint32_t top = (1u << bits) - 1;
        if (value > top) value = top;
        code_ -= value * r_;
        range_ = r_;
        normalize();
        return value;
    }

    size_t consumed() const { return pos_; }

private:
    void normalize() {
        while (range_ < kTop) {
            code_ = (code_ << 8) | next_byte();
            range_ <<= 8;
        }
    }

    uint8_t next_byte() { return pos_ < size_ ? data_[pos_++] : 0; }

    static constexpr uint32_t kTop = 1u << 24;
    const uint8_t* data_;
    size_t size_;
    size_t pos_ = 0;
    uint32_t range_ = 0xFFFFFFFFu;
    uint32_t code_ = 0;
    uint32_t r_ = 0;
};

} // namespace gac
