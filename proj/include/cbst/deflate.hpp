#ifndef CBST_DEFLATE_HPP
#define CBST_DEFLATE_HPP

#include "cbst/codec.hpp"

namespace cbst {

// Adapter around a general-purpose DEFLATE byte compressor (zlib). Symbols
// are packed into bytes at a fixed width of ceil(log2 |A|) bits, MSB-first
// with zero padding to the byte boundary; a 256-ary alphabet maps one symbol
// per byte. The payload is gamma(B+1) followed by the B compressed bytes, so
// the code length is 8 x compressed bytes plus the header. Lengths are
// counted in whole bytes, which is conservative and keeps the Type I bound.
class DeflateCodec final : public Codec {
public:
    explicit DeflateCodec(Alphabet alphabet) : Codec(std::move(alphabet)) {}

    std::string name() const override { return "ext:deflate"; }

    static std::vector<std::uint8_t> pack(const SampleSequence& x);
    static std::vector<Symbol> unpack(const std::vector<std::uint8_t>& bytes,
                                      std::uint32_t alphabet_size, std::uint64_t t);

protected:
    void write_payload(const SampleSequence& x, BitWriter& out) const override;
    void read_payload(BitReader& in, std::uint64_t t,
                      std::vector<Symbol>& out) const override;
};

} // namespace cbst

#endif // CBST_DEFLATE_HPP
