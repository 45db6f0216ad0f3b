#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gac {

// MSB-first bit writer over a byte vector.
class BitWriter {
public:
    explicit BitWriter(std::vector<uint8_t>& out) : out_(out) {}

    void put_bits(uint64_t value, unsigned bits) {
        for (unsigned i = bits; i-- > 0;) put_bit((value >> i) & 1);
    }

    void put_bit(unsigned bit) {
        acc_ = static_cast<uint8_t>((acc_ << 1) | (bit & 1));
        if (++filled_ == 8) {
            out_.push_back(acc_);
            acc_ = 0;
            filled_ = 0;
        }
    }

    // Pads the last byte with zero bits.
    void flush() {
        if (filled_ > 0) {
            out_.push_back(static_cast<uint8_t>(acc_ << (8 - filled_)));
            acc_ = 0;
            filled_ = 0;
        }
    }

private:
    std::vector<uint8_t>& out_;
    uint8_t acc_ = 0;
    unsigned filled_ = 0;
};

// MSB-first bit reader; reads past the end return zero bits.
class BitReader {
public:
    BitReader(const uint8_t* data, size_t size) : data_(data), size_(size) {}

    unsigned get_bit() {
        if (pos_ >= size_ * 8) {
            ++pos_;
            return 0;
        }
        const unsigned bit = (data_[pos_ / 8] >> (7 - pos_ % 8)) & 1;
        ++pos_;
        return bit;
    }

    uint64_t get_bits(unsigned bits) {
        uint64_t v = 0;
        for (unsigned i = 0; i < bits; ++i) v = (v << 1) | get_bit();
        return v;
    }

    bool overran() const { return pos_ > size_ * 8; }

private:
    const uint8_t* data_;
    size_t size_;
    size_t pos_ = 0;
};

} // namespace gac
