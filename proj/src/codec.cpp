#include "cbst/codec.hpp"

#include <stdexcept>

#include "cbst/ctw.hpp"
#include "cbst/deflate.hpp"
#include "cbst/kt.hpp"
#include "cbst/lz78.hpp"

namespace cbst {

void Codec::check_alphabet(const SampleSequence& x) const {
    if (!(x.alphabet() == alphabet_))
        throw std::invalid_argument("sequence alphabet does not match codec alphabet");
}

Codeword Codec::encode(const SampleSequence& x) const {
    check_alphabet(x);
    BitWriter out;
    out.put_gamma(alphabet_.size());
    out.put_gamma(std::uint64_t(x.length()) + 1);
    write_payload(x, out);
    return out.take();
}

std::int64_t Codec::code_length_bits(const SampleSequence& x) const {
    check_alphabet(x);
    std::uint64_t bits = std::uint64_t(gamma_length(alphabet_.size())) +
                         std::uint64_t(gamma_length(std::uint64_t(x.length()) + 1));
    return std::int64_t(bits + payload_bits(x));
}

std::uint64_t Codec::payload_bits(const SampleSequence& x) const {
    BitWriter counter(false);
    write_payload(x, counter);
    return counter.bit_count();
}

std::vector<SampleSequence> Codec::decode(const Codeword& stream) const {
    std::vector<SampleSequence> messages;
    BitReader in(stream);
    while (in.remaining() > 0) {
        std::uint64_t frame_alphabet = in.get_gamma();
        if (frame_alphabet != alphabet_.size())
            throw DecodeError("frame alphabet size " + std::to_string(frame_alphabet) +
                                  " does not match codec alphabet " +
                                  std::to_string(alphabet_.size()),
                              in.pos());
        std::uint64_t t = in.get_gamma() - 1;
        std::vector<Symbol> symbols;
        symbols.reserve(std::min<std::uint64_t>(t, std::uint64_t(1) << 20));
        read_payload(in, t, symbols);
        messages.emplace_back(alphabet_, std::move(symbols));
    }
    return messages;
}

std::unique_ptr<Codec> make_codec(const std::string& spec, const Alphabet& alphabet) {
    auto starts_with = [&](const char* p) { return spec.rfind(p, 0) == 0; };
    if (starts_with("kt:k=")) {
        int k = std::stoi(spec.substr(5));
        if (k < 0) throw std::invalid_argument("kt order must be >= 0");
        return std::make_unique<KtCodec>(alphabet, std::uint32_t(k));
    }
    if (starts_with("ctw:d=")) {
        int d = std::stoi(spec.substr(6));
        if (d < 0) throw std::invalid_argument("ctw depth must be >= 0");
        return std::make_unique<CtwCodec>(alphabet, std::uint32_t(d));
    }
    if (spec == "lz78") return std::make_unique<Lz78Codec>(alphabet);
    if (spec == "ext:deflate") return std::make_unique<DeflateCodec>(alphabet);
    throw std::invalid_argument("unknown codec spec: " + spec);
}

} // namespace cbst
