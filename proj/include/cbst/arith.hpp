#ifndef CBST_ARITH_HPP
#define CBST_ARITH_HPP

#include <cassert>
#include <cstdint>

#include "cbst/bitio.hpp"

namespace cbst {

// Integer arithmetic coder, 62-bit state, bit-at-a-time renormalization with
// underflow counting. Probabilities enter as integer cumulative frequencies
// (cum_lo, cum_hi, total); interval subdivision uses 128-bit products, so the
// decoder reproduces the encoder arithmetic exactly. total must stay below
// 2^60 so every nonzero frequency keeps a nonzero slice.
//
// Termination emits the shortest bit string whose dyadic interval lies inside
// the final coding interval; since the interval width always exceeds a
// quarter of the range, this costs at most 2 bits beyond the ideal code
// length (plus the flushed underflow bits, which are part of the ideal).

namespace arith {
constexpr int kValueBits = 62;
constexpr std::uint64_t kTop = std::uint64_t(1) << kValueBits;
constexpr std::uint64_t kHalf = kTop >> 1;
constexpr std::uint64_t kQuarter = kTop >> 2;
constexpr std::uint64_t kMaxTotal = std::uint64_t(1) << 60;
} // namespace arith

class ArithEncoder {
public:
    explicit ArithEncoder(BitWriter& out) : out_(out) {}

    void encode(std::uint64_t cum_lo, std::uint64_t cum_hi, std::uint64_t total) {
        using u128 = unsigned __int128;
        assert(cum_lo < cum_hi && cum_hi <= total && total <= arith::kMaxTotal);
        u128 width = u128(high_ - low_) + 1;
        high_ = low_ + std::uint64_t(width * cum_hi / total) - 1;
        low_ = low_ + std::uint64_t(width * cum_lo / total);
        renormalize();
    }

    // Pins a dyadic interval inside [low, high]; call exactly once.
    void finish() {
        using namespace arith;
        for (int k = 1; k <= kValueBits; ++k) {
            std::uint64_t step = kTop >> k;
            std::uint64_t v = (low_ + step - 1) / step; // ceil
            if (v * step >= low_ && v * step + (step - 1) <= high_) {
                for (int i = k - 1; i >= 0; --i) emit((v >> i) & 1u);
                return;
            }
        }
    }

private:
    void emit(bool b) {
        out_.put_bit(b);
        for (; pending_ > 0; --pending_) out_.put_bit(!b);
    }

    void renormalize() {
        using namespace arith;
        while (true) {
            if (high_ < kHalf) {
                emit(false);
            } else if (low_ >= kHalf) {
                emit(true);
                low_ -= kHalf;
                high_ -= kHalf;
            } else if (low_ >= kQuarter && high_ < kHalf + kQuarter) {
                ++pending_;
                low_ -= kQuarter;
                high_ -= kQuarter;
            } else {
                break;
            }
            low_ <<= 1;
            high_ = (high_ << 1) | 1;
        }
    }

    std::uint64_t low_ = 0;
    std::uint64_t high_ = arith::kTop - 1;
    std::uint64_t pending_ = 0;
    BitWriter& out_;
};

// Mirrors ArithEncoder over a window of payload_bits bits taken from the
// reader; reads past the window were never written by the encoder and are
// supplied as zeros. finish() leaves the reader positioned at the first bit
// after the window.
class ArithDecoder {
public:
    ArithDecoder(BitReader& in, std::uint64_t payload_bits)
        : in_(in), window_start_(in.pos()), window_bits_(payload_bits) {
        for (int i = 0; i < arith::kValueBits; ++i)
            value_ = (value_ << 1) | std::uint64_t(next_bit());
    }

    std::uint64_t decode_target(std::uint64_t total) const {
        using u128 = unsigned __int128;
        u128 width = u128(high_ - low_) + 1;
        return std::uint64_t((u128(value_ - low_ + 1) * total - 1) / width);
    }

    void consume(std::uint64_t cum_lo, std::uint64_t cum_hi, std::uint64_t total) {
        using u128 = unsigned __int128;
        assert(cum_lo < cum_hi && cum_hi <= total && total <= arith::kMaxTotal);
        u128 width = u128(high_ - low_) + 1;
        high_ = low_ + std::uint64_t(width * cum_hi / total) - 1;
        low_ = low_ + std::uint64_t(width * cum_lo / total);
        renormalize();
    }

    void finish() { in_.seek(window_start_ + window_bits_); }

private:
    bool next_bit() {
        bool b = consumed_ < window_bits_ ? in_.get_bit() : false;
        ++consumed_;
        return b;
    }

    void renormalize() {
        using namespace arith;
        while (true) {
            if (high_ < kHalf) {
                // nothing
            } else if (low_ >= kHalf) {
                low_ -= kHalf;
                high_ -= kHalf;
                value_ -= kHalf;
            } else if (low_ >= kQuarter && high_ < kHalf + kQuarter) {
                low_ -= kQuarter;
                high_ -= kQuarter;
                value_ -= kQuarter;
            } else {
                break;
            }
            low_ <<= 1;
            high_ = (high_ << 1) | 1;
            value_ = (value_ << 1) | std::uint64_t(next_bit());
        }
    }

    BitReader& in_;
    std::uint64_t window_start_;
    std::uint64_t window_bits_;
    std::uint64_t consumed_ = 0;
    std::uint64_t low_ = 0;
    std::uint64_t high_ = arith::kTop - 1;
    std::uint64_t value_ = 0;
};

} // namespace cbst

#endif // CBST_ARITH_HPP
