#include "gac/codec.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace gac {

namespace {

constexpr uint8_t kMagic[4] = {'G', 'A', 'C', 'F'};
constexpr uint8_t kVersion = 1;
constexpr uint8_t kFlagFullWidth = 0x01;
constexpr uint8_t kFlagPow2 = 0x02;

void put_u8(std::vector<uint8_t>& out, uint8_t v) { out.push_back(v); }
void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

struct Cursor {
    const uint8_t* data;
    size_t size;
    size_t pos = 0;

    void need(size_t n) const {
        if (pos + n > size) throw DecodeError("truncated container header");
    }
    uint8_t u8() {
        need(1);
        return data[pos++];
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= uint32_t{data[pos++]} << (8 * i);
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t{data[pos++]} << (8 * i);
        return v;
    }
};

unsigned log2_exact(uint32_t x) {
    unsigned b = 0;
    while ((uint32_t{1} << b) < x) ++b;
    return b;
}

bool is_pow2(uint32_t x) { return x != 0 && (x & (x - 1)) == 0; }

ModelConfig config_from_header(const StreamHeader& h) {
    ModelConfig cfg;
    cfg.c_num = h.c_num;
    cfg.c_den = h.c_den;
    cfg.max_count = h.max_count;
    cfg.full_width_last_group = h.full_width_last_group;
    return cfg;
}

} // namespace

void write_header(std::vector<uint8_t>& out, const StreamHeader& h) {
    out.insert(out.end(), kMagic, kMagic + 4);
    put_u8(out, kVersion);
    put_u8(out, static_cast<uint8_t>(h.mode));
    put_u32(out, h.alphabet_size);
    put_u8(out, h.c_num);
    put_u8(out, h.c_den);
    put_u32(out, h.max_count);
    uint8_t flags = 0;
    if (h.full_width_last_group) flags |= kFlagFullWidth;
    if (h.plan.pow2) flags |= kFlagPow2;
    put_u8(out, flags);
    put_u32(out, h.plan.groups());
    for (uint32_t m : h.plan.sizes) put_u32(out, m);
    put_u64(out, h.message_length);
    if (h.mode == Mode::Huffman) {
        for (uint8_t len : h.huff_lengths) put_u8(out, len);
        for (uint32_t a : h.rank_to_letter) put_u32(out, a);
    }
}

StreamHeader read_header(const uint8_t* data, size_t size, size_t& offset) {
    Cursor c{data, size};
    c.need(4);
    if (std::memcmp(data, kMagic, 4) != 0) throw DecodeError("bad magic");
    c.pos = 4;
    if (c.u8() != kVersion) throw DecodeError("unsupported version");
    StreamHeader h;
    const uint8_t mode = c.u8();
    if (mode > 2) throw DecodeError("unknown mode");
    h.mode = static_cast<Mode>(mode);
    h.alphabet_size = c.u32();
    if (h.alphabet_size == 0) throw DecodeError("zero alphabet size");
    h.c_num = c.u8();
    h.c_den = c.u8();
    if (h.c_num == 0 || h.c_den == 0) throw DecodeError("bad smoothing constant");
    h.max_count = c.u32();
    if (h.max_count == 0) throw DecodeError("bad max count");
    const uint8_t flags = c.u8();
    h.full_width_last_group = (flags & kFlagFullWidth) != 0;
    const uint32_t s = c.u32();
    if (s > (1u << 24)) throw DecodeError("implausible group count");
    if (s > 0) {
        std::vector<uint32_t> sizes(s);
        for (uint32_t i = 0; i < s; ++i) {
            sizes[i] = c.u32();
            if (sizes[i] == 0) throw DecodeError("zero group size in plan");
        }
        try {
            h.plan = GroupingPlan::from_sizes(sizes, (flags & kFlagPow2) != 0);
        } catch (const std::invalid_argument& e) {
            throw DecodeError(e.what());
        }
        if (h.plan.covered() < h.alphabet_size)
            throw DecodeError("plan does not cover the alphabet");
    } else if (h.mode != Mode::Plain) {
        throw DecodeError("missing grouping plan");
    }
    h.message_length = c.u64();
    if (h.mode == Mode::Huffman) {
        h.huff_lengths.resize(s);
        for (uint32_t i = 0; i < s; ++i) h.huff_lengths[i] = c.u8();
        h.rank_to_letter.resize(h.alphabet_size);
        std::vector<bool> seen(h.alphabet_size, false);
        for (uint32_t i = 0; i < h.alphabet_size; ++i) {
            h.rank_to_letter[i] = c.u32();
            if (h.rank_to_letter[i] >= h.alphabet_size || seen[h.rank_to_letter[i]])
                throw DecodeError("rank table is not a permutation");
            seen[h.rank_to_letter[i]] = true;
        }
    }
    offset = c.pos;
    return h;
}

GroupedStreamEncoder::GroupedStreamEncoder(std::vector<uint8_t>& out, uint32_t alphabet,
                                           GroupingPlan plan, ModelConfig cfg)
    : model_(alphabet, std::move(plan), cfg), rc_(out) {}

void GroupedStreamEncoder::put(uint32_t letter) {
    const uint32_t rank = model_.letter_rank(letter);
    const uint32_t g = model_.group_of_rank(rank);
    const auto [lo, hi] = model_.group_interval(g);
    rc_.encode(lo, hi - lo, model_.total());
    const uint32_t width = model_.coded_width(g);
    if (width > 1) {
        const uint32_t ordinal = rank - model_.group_begin_rank(g);
        if (is_pow2(width))
            rc_.encode_bits(ordinal, log2_exact(width));
        else
            rc_.encode(ordinal, 1, width);
    }
    model_.update(letter);
}

GroupedStreamDecoder::GroupedStreamDecoder(const uint8_t* data, size_t size,
                                           uint32_t alphabet, GroupingPlan plan,
                                           ModelConfig cfg)
    : model_(alphabet, std::move(plan), cfg), rc_(data, size) {}

uint32_t GroupedStreamDecoder::get() {
    const uint64_t target = rc_.peek(model_.total());
    const uint32_t g = model_.find_group(target);
    const auto [lo, hi] = model_.group_interval(g);
    rc_.consume(lo, hi - lo);
    uint32_t ordinal = 0;
    const uint32_t width = model_.coded_width(g);
    if (width > 1) {
        if (is_pow2(width)) {
            ordinal = rc_.decode_bits(log2_exact(width));
        } else {
            ordinal = static_cast<uint32_t>(rc_.peek(width));
            rc_.consume(ordinal, 1);
        }
    }
    if (ordinal >= model_.group_size(g))
        throw DecodeError("in-group ordinal out of range");
    const uint32_t rank = model_.group_begin_rank(g) + ordinal;
    const uint32_t letter = model_.letter_at_rank(rank);
    model_.update(letter);
    return letter;
}

PlainStreamEncoder::PlainStreamEncoder(std::vector<uint8_t>& out, uint32_t alphabet,
                                       ModelConfig cfg)
    : model_(alphabet, cfg), rc_(out) {}

void PlainStreamEncoder::put(uint32_t letter) {
    rc_.encode(model_.letter_cum(letter), model_.letter_mass(letter), model_.total());
    model_.update(letter);
}

PlainStreamDecoder::PlainStreamDecoder(const uint8_t* data, size_t size,
                                       uint32_t alphabet, ModelConfig cfg)
    : model_(alphabet, cfg), rc_(data, size) {}

uint32_t PlainStreamDecoder::get() {
    const uint64_t target = rc_.peek(model_.total());
    const uint32_t letter = model_.find_letter(target);
    rc_.consume(model_.letter_cum(letter), model_.letter_mass(letter));
    model_.update(letter);
    return letter;
}

namespace {

std::vector<uint8_t> encode_huffman(const std::vector<uint32_t>& symbols,
                                    const CodecParams& params, StreamHeader h) {
    const uint32_t n = params.alphabet_size;
    std::vector<uint64_t> counts(n, 0);
    for (uint32_t a : symbols) counts[a]++;

    std::vector<uint32_t> rank_to_letter(n);
    std::iota(rank_to_letter.begin(), rank_to_letter.end(), 0);
    std::stable_sort(rank_to_letter.begin(), rank_to_letter.end(),
                     [&](uint32_t a, uint32_t b) { return counts[a] > counts[b]; });
    std::vector<uint32_t> letter_to_rank(n);
    for (uint32_t r = 0; r < n; ++r) letter_to_rank[rank_to_letter[r]] = r;

    std::vector<double> probs(n);
    const uint64_t total = symbols.size();
    for (uint32_t r = 0; r < n; ++r)
        probs[r] = total == 0 ? 1.0 / n
                              : static_cast<double>(counts[rank_to_letter[r]]) /
                                    static_cast<double>(total);
    const auto code =
        GroupedHuffmanCode::build(OrderedDistribution{std::move(probs)}, h.plan);

    h.huff_lengths = code.group_lengths();
    h.rank_to_letter = std::move(rank_to_letter);
    std::vector<uint8_t> out;
    write_header(out, h);
    BitWriter bw(out);
    for (uint32_t a : symbols) code.encode_letter(bw, letter_to_rank[a]);
    bw.flush();
    return out;
}

} // namespace

std::vector<uint8_t> encode_message(const std::vector<uint32_t>& symbols,
                                    const CodecParams& params) {
    for (uint32_t a : symbols)
        if (a >= params.alphabet_size)
            throw std::invalid_argument("symbol outside the alphabet");
    if (params.c_num > 255 || params.c_den > 255 || params.c_num == 0 || params.c_den == 0)
        throw std::invalid_argument("smoothing constant out of range");

    StreamHeader h;
    h.mode = params.mode;
    h.alphabet_size = params.alphabet_size;
    h.c_num = static_cast<uint8_t>(params.c_num);
    h.c_den = static_cast<uint8_t>(params.c_den);
    h.max_count = params.max_count;
    h.full_width_last_group = params.full_width_last_group;
    h.message_length = symbols.size();
    if (params.mode != Mode::Plain) {
        const bool pow2 = params.mode == Mode::Huffman ? true : params.pow2;
        h.plan = params.plan ? *params.plan
                             : optimal_grouping(params.alphabet_size, params.delta, pow2);
        if (params.mode == Mode::Huffman && !h.plan.pow2)
            throw std::invalid_argument("huffman mode needs a pow2 plan");
    }

    if (params.mode == Mode::Huffman) return encode_huffman(symbols, params, std::move(h));

    std::vector<uint8_t> out;
    write_header(out, h);
    if (symbols.empty()) return out;

    ModelConfig cfg = config_from_header(h);
    if (params.mode == Mode::Grouped) {
        GroupedStreamEncoder enc(out, h.alphabet_size, h.plan, cfg);
        for (uint32_t a : symbols) enc.put(a);
        enc.finish();
    } else {
        PlainStreamEncoder enc(out, h.alphabet_size, cfg);
        for (uint32_t a : symbols) enc.put(a);
        enc.finish();
    }
    return out;
}

std::vector<uint32_t> decode_message(const std::vector<uint8_t>& container) {
    size_t offset = 0;
    const StreamHeader h = read_header(container.data(), container.size(), offset);
    const uint8_t* payload = container.data() + offset;
    const size_t payload_size = container.size() - offset;

    std::vector<uint32_t> symbols;
    symbols.reserve(h.message_length);
    if (h.message_length == 0) return symbols;

    ModelConfig cfg = config_from_header(h);
    if (h.mode == Mode::Huffman) {
        const auto code =
            GroupedHuffmanCode::from_lengths(h.plan, h.huff_lengths, h.alphabet_size);
        BitReader br(payload, payload_size);
        for (uint64_t i = 0; i < h.message_length; ++i)
            symbols.push_back(h.rank_to_letter[code.decode_letter(br)]);
    } else if (h.mode == Mode::Grouped) {
        GroupedStreamDecoder dec(payload, payload_size, h.alphabet_size, h.plan, cfg);
        for (uint64_t i = 0; i < h.message_length; ++i) symbols.push_back(dec.get());
    } else {
        PlainStreamDecoder dec(payload, payload_size, h.alphabet_size, cfg);
        for (uint64_t i = 0; i < h.message_length; ++i) symbols.push_back(dec.get());
    }
    return symbols;
}

StreamHeader peek_header(const std::vector<uint8_t>& container) {
    size_t offset = 0;
    return read_header(container.data(), container.size(), offset);
}

} // namespace gac
