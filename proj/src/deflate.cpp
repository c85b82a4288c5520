#include "cbst/deflate.hpp"

#include <bit>
#include <stdexcept>

#include <zlib.h>

namespace cbst {

namespace {

int symbol_width(std::uint32_t n) { return std::bit_width(n - 1); }

std::uint64_t packed_size(std::uint32_t n, std::uint64_t t) {
    return (t * std::uint64_t(symbol_width(n)) + 7) / 8;
}

} // namespace

std::vector<std::uint8_t> DeflateCodec::pack(const SampleSequence& x) {
    const int w = symbol_width(x.alphabet().size());
    std::vector<std::uint8_t> bytes(packed_size(x.alphabet().size(), x.length()), 0);
    std::uint64_t bit = 0;
    for (Symbol s : x.symbols())
        for (int i = w - 1; i >= 0; --i, ++bit)
            if ((s >> i) & 1u) bytes[bit >> 3] |= std::uint8_t(1u << (7 - (bit & 7)));
    return bytes;
}

std::vector<Symbol> DeflateCodec::unpack(const std::vector<std::uint8_t>& bytes,
                                         std::uint32_t alphabet_size, std::uint64_t t) {
    const int w = symbol_width(alphabet_size);
    std::vector<Symbol> symbols(t, 0);
    std::uint64_t bit = 0;
    for (std::uint64_t i = 0; i < t; ++i)
        for (int j = 0; j < w; ++j, ++bit)
            symbols[i] = Symbol(symbols[i] << 1) |
                         Symbol((bytes[bit >> 3] >> (7 - (bit & 7))) & 1u);
    return symbols;
}

void DeflateCodec::write_payload(const SampleSequence& x, BitWriter& out) const {
    std::vector<std::uint8_t> raw = pack(x);
    const std::uint64_t raw_size = raw.size();
    raw.resize(raw_size + 1); // keep data() valid for empty input
    uLongf bound = compressBound(uLongf(raw_size));
    std::vector<std::uint8_t> compressed(bound > 0 ? bound : 1);
    int rc = compress2(compressed.data(), &bound, raw.data(), uLongf(raw_size),
                       Z_BEST_COMPRESSION);
    if (rc != Z_OK) throw std::runtime_error("deflate failed: zlib error " + std::to_string(rc));
    compressed.resize(bound);

    out.put_gamma(std::uint64_t(compressed.size()) + 1);
    for (std::uint8_t b : compressed) out.put_bits(b, 8);
}

void DeflateCodec::read_payload(BitReader& in, std::uint64_t t,
                                std::vector<Symbol>& out) const {
    std::uint64_t count = in.get_gamma() - 1;
    if (count * 8 > in.remaining())
        throw DecodeError("compressed block longer than remaining stream", in.pos());
    std::vector<std::uint8_t> compressed(count);
    for (std::uint64_t i = 0; i < count; ++i)
        compressed[i] = std::uint8_t(in.get_bits(8));

    const std::uint64_t expected = packed_size(alphabet().size(), t);
    // deflate cannot expand by more than ~1032x, so a larger claim is corrupt
    if (expected > 1040 * count + 4096)
        throw DecodeError("declared length implausible for the compressed size", in.pos());
    std::vector<std::uint8_t> raw(expected + 1); // non-null data() even when empty
    uLongf raw_len = uLongf(raw.size());
    int rc = uncompress(raw.data(), &raw_len, compressed.data(), uLongf(compressed.size()));
    if (rc != Z_OK || raw_len != expected)
        throw DecodeError("inflate failed: zlib error " + std::to_string(rc), in.pos());
    raw.resize(expected);

    auto symbols = unpack(raw, alphabet().size(), t);
    for (Symbol s : symbols) {
        if (s >= alphabet().size())
            throw DecodeError("unpacked symbol out of alphabet range", in.pos());
        out.push_back(s);
    }
}

} // namespace cbst
