#ifndef CBST_LZ78_HPP
#define CBST_LZ78_HPP

#include "cbst/codec.hpp"

namespace cbst {

// Classic LZ78 incremental parsing. Each phrase is emitted as the index of
// its longest proper prefix already in the dictionary, in
// ceil(log2(dictionary size)) bits, followed by one literal symbol in
// ceil(log2 |A|) bits. A trailing partial phrase (a prefix of an existing
// entry) is emitted as an index alone; the decoder detects it from the
// declared sequence length. Universal over all stationary ergodic sources.
class Lz78Codec final : public Codec {
public:
    explicit Lz78Codec(Alphabet alphabet) : Codec(std::move(alphabet)) {}

    std::string name() const override { return "lz78"; }

protected:
    void write_payload(const SampleSequence& x, BitWriter& out) const override;
    void read_payload(BitReader& in, std::uint64_t t,
                      std::vector<Symbol>& out) const override;
};

} // namespace cbst

#endif // CBST_LZ78_HPP
