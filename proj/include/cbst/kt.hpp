#ifndef CBST_KT_HPP
#define CBST_KT_HPP

#include "cbst/codec.hpp"

namespace cbst {

// Order-k Krichevsky-Trofimov codec: the add-1/2 sequential estimator
// P(a | v) = (nu(va) + 1/2) / (nubar(v) + |A|/2) driven through the integer
// arithmetic coder with exact count-based frequencies. The first k symbols
// have no context and are coded uniformly at log2|A| bits each.
//
// Payload layout: gamma(L+1) where L is the arithmetic-coded bit count,
// followed by the L coded bits.
class KtCodec final : public Codec {
public:
    KtCodec(Alphabet alphabet, std::uint32_t order);

    std::uint32_t order() const { return order_; }
    std::string name() const override;

protected:
    void write_payload(const SampleSequence& x, BitWriter& out) const override;
    void read_payload(BitReader& in, std::uint64_t t,
                      std::vector<Symbol>& out) const override;
    std::uint64_t payload_bits(const SampleSequence& x) const override;

private:
    std::uint64_t coded_bits(const SampleSequence& x, BitWriter& out) const;

    std::uint32_t order_;
};

// -log2 of the KT probability of x with order-k contexts; the exact target
// the coder payload must approach within its <= 2 bit termination overhead.
double kt_ideal_neg_log(const SampleSequence& x, std::uint32_t order);

} // namespace cbst

#endif // CBST_KT_HPP
