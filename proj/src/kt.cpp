#include "cbst/kt.hpp"

#include <cmath>
#include <unordered_map>

#include "cbst/arith.hpp"

namespace cbst {

namespace {

// Per-context symbol counts, dense when n^k is small and hashed otherwise.
class CountTable {
public:
    CountTable(std::uint32_t n, std::uint32_t k) : n_(n) {
        std::uint64_t contexts = 1;
        bool dense = true;
        for (std::uint32_t i = 0; i < k; ++i) {
            if (contexts > (std::uint64_t(1) << 22) / n) {
                dense = false;
                break;
            }
            contexts *= n;
        }
        if (dense) dense_.assign(contexts * n, 0);
    }

    std::uint32_t* row(std::uint64_t context) {
        if (!dense_.empty()) return dense_.data() + context * n_;
        auto [it, inserted] = sparse_.try_emplace(context);
        if (inserted) it->second.assign(n_, 0);
        return it->second.data();
    }

private:
    std::uint32_t n_;
    std::vector<std::uint32_t> dense_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> sparse_;
};

// Rolling packed context over the last k symbols; 0 while k == 0.
struct ContextRoller {
    ContextRoller(std::uint32_t n, std::uint32_t k) : n_(n) {
        mod_ = 1;
        for (std::uint32_t i = 0; i + 1 < k; ++i) mod_ *= n;
        if (k == 0) mod_ = 0;
    }
    void push(Symbol a) {
        if (mod_ == 0) return;
        value_ = (value_ % mod_) * n_ + a;
    }
    std::uint64_t value() const { return value_; }

    std::uint32_t n_;
    std::uint64_t mod_;
    std::uint64_t value_ = 0;
};

} // namespace

KtCodec::KtCodec(Alphabet alphabet, std::uint32_t order)
    : Codec(std::move(alphabet)), order_(order) {
    // keep packed contexts within 64 bits
    (void)pack_word(std::vector<Symbol>(order, this->alphabet().size() - 1),
                    this->alphabet().size());
}

std::string KtCodec::name() const { return "kt:k=" + std::to_string(order_); }

// Runs the sequential KT coder over x into `out`; returns the bit count.
std::uint64_t KtCodec::coded_bits(const SampleSequence& x, BitWriter& out) const {
    const std::uint32_t n = alphabet().size();
    if (x.length() == 0) return 0;

    ArithEncoder enc(out);
    CountTable counts(n, order_);
    ContextRoller context(n, order_);
    const std::uint64_t start = out.bit_count();

    for (std::size_t i = 0; i < x.length(); ++i) {
        Symbol a = x[i];
        if (i < order_) {
            enc.encode(a, a + 1, n); // uniform bootstrap, log2 n bits
        } else {
            std::uint32_t* row = counts.row(context.value());
            std::uint64_t lo = 0;
            for (Symbol b = 0; b < a; ++b) lo += 2 * std::uint64_t(row[b]) + 1;
            std::uint64_t total = n;
            for (Symbol b = 0; b < n; ++b) total += 2 * std::uint64_t(row[b]);
            enc.encode(lo, lo + 2 * std::uint64_t(row[a]) + 1, total);
            ++row[a];
        }
        context.push(a);
    }
    enc.finish();
    return out.bit_count() - start;
}

std::uint64_t KtCodec::payload_bits(const SampleSequence& x) const {
    BitWriter counter(false);
    std::uint64_t coded = coded_bits(x, counter);
    return std::uint64_t(gamma_length(coded + 1)) + coded;
}

void KtCodec::write_payload(const SampleSequence& x, BitWriter& out) const {
    if (!out.materializing()) {
        BitWriter counter(false);
        std::uint64_t coded = coded_bits(x, counter);
        out.put_gamma(coded + 1);
        out.advance(coded);
        return;
    }
    BitWriter body;
    coded_bits(x, body);
    Codeword coded = body.take();
    out.put_gamma(coded.bit_count + 1);
    out.append(coded);
}

void KtCodec::read_payload(BitReader& in, std::uint64_t t,
                           std::vector<Symbol>& out) const {
    const std::uint32_t n = alphabet().size();
    std::uint64_t coded = in.get_gamma() - 1;
    if (t == 0) {
        in.seek(in.pos() + coded);
        return;
    }
    ArithDecoder dec(in, coded);
    CountTable counts(n, order_);
    ContextRoller context(n, order_);

    for (std::uint64_t i = 0; i < t; ++i) {
        Symbol a;
        if (i < order_) {
            a = Symbol(dec.decode_target(n));
            dec.consume(a, a + 1, n);
        } else {
            std::uint32_t* row = counts.row(context.value());
            std::uint64_t total = n;
            for (Symbol b = 0; b < n; ++b) total += 2 * std::uint64_t(row[b]);
            std::uint64_t target = dec.decode_target(total);
            std::uint64_t lo = 0;
            a = 0;
            while (lo + 2 * std::uint64_t(row[a]) + 1 <= target) {
                lo += 2 * std::uint64_t(row[a]) + 1;
                ++a;
            }
            dec.consume(lo, lo + 2 * std::uint64_t(row[a]) + 1, total);
            ++row[a];
        }
        context.push(a);
        out.push_back(a);
    }
    dec.finish();
}

double kt_ideal_neg_log(const SampleSequence& x, std::uint32_t order) {
    const std::uint32_t n = x.alphabet().size();
    double bits = std::min<std::size_t>(order, x.length()) * std::log2(double(n));

    CountTable counts(n, order);
    ContextRoller context(n, order);
    for (std::size_t i = 0; i < x.length(); ++i) {
        Symbol a = x[i];
        if (i >= order) {
            std::uint32_t* row = counts.row(context.value());
            std::uint64_t total = n;
            for (Symbol b = 0; b < n; ++b) total += 2 * std::uint64_t(row[b]);
            bits -= std::log2((2.0 * row[a] + 1.0) / double(total));
            ++row[a];
        }
        context.push(a);
    }
    return bits;
}

} // namespace cbst
