#ifndef CBST_CODEC_HPP
#define CBST_CODEC_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cbst/bitio.hpp"
#include "cbst/model.hpp"

namespace cbst {

// A uniquely decodable, self-delimiting code over a fixed alphabet. Every
// frame starts with Elias-gamma fields for the alphabet size and the
// sequence length, so concatenated codewords parse back into the original
// message list; the payload layout is codec-specific and documented
// bit-exactly in docs/FORMAT.md.
//
// Instances are immutable configurations; encode/decode allocate all working
// state per call, so one codec value may be used from many threads at once.
class Codec {
public:
    explicit Codec(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
    virtual ~Codec() = default;

    const Alphabet& alphabet() const { return alphabet_; }

    // Descriptor in the CLI spelling, e.g. "kt:k=1", "ctw:d=3", "lz78".
    virtual std::string name() const = 0;

    // Self-delimiting codeword for x; frame header plus payload.
    Codeword encode(const SampleSequence& x) const;

    // Exact inverse of encode over a stream of concatenated frames.
    std::vector<SampleSequence> decode(const Codeword& stream) const;

    // Exactly |encode(x)| in bits, computed without materializing the bits.
    std::int64_t code_length_bits(const SampleSequence& x) const;

protected:
    virtual void write_payload(const SampleSequence& x, BitWriter& out) const = 0;
    virtual void read_payload(BitReader& in, std::uint64_t t,
                              std::vector<Symbol>& out) const = 0;

    // Length fast path; the default runs write_payload against a counting
    // sink, subclasses may do better.
    virtual std::uint64_t payload_bits(const SampleSequence& x) const;

private:
    void check_alphabet(const SampleSequence& x) const;

    Alphabet alphabet_;
};

// Factory for the CLI codec grammar: kt:k=K | ctw:d=D | lz78 | ext:deflate.
std::unique_ptr<Codec> make_codec(const std::string& spec, const Alphabet& alphabet);

} // namespace cbst

#endif // CBST_CODEC_HPP
