#ifndef CBST_CTW_HPP
#define CBST_CTW_HPP

#include "cbst/codec.hpp"

namespace cbst {

// Context-tree-weighting codec: KT estimators at every context node of a
// depth-D suffix tree, mixed with weight 1/2 per node between the node's own
// estimate and the product of its children. Universal over all finite-memory
// sources of order up to D, which makes it the recommended default codec.
//
// The per-step conditional distribution is computed in the log domain with
// doubles and quantized deterministically into integer coder frequencies;
// the decoder replays the identical computation. The first D symbols are
// coded uniformly, as in the KT codec.
class CtwCodec final : public Codec {
public:
    CtwCodec(Alphabet alphabet, std::uint32_t depth);

    std::uint32_t depth() const { return depth_; }
    std::string name() const override;

protected:
    void write_payload(const SampleSequence& x, BitWriter& out) const override;
    void read_payload(BitReader& in, std::uint64_t t,
                      std::vector<Symbol>& out) const override;
    std::uint64_t payload_bits(const SampleSequence& x) const override;

private:
    std::uint64_t coded_bits(const SampleSequence& x, BitWriter& out) const;

    std::uint32_t depth_;
};

} // namespace cbst

#endif // CBST_CTW_HPP
