#ifndef CBST_PRNG_HPP
#define CBST_PRNG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cbst/model.hpp"

namespace cbst {

using u128 = unsigned __int128;

// Linear congruential generator X_{n+1} = (A X_n + C) mod M. The modulus may
// reach 2^64; the step is taken with 128-bit intermediates so it never
// overflows.
struct LcgSpec {
    u128 modulus;              // M >= 2
    std::uint64_t multiplier;  // A < M
    std::uint64_t increment;   // C < M
    std::uint64_t seed;        // X0 < M

    LcgSpec(u128 m, std::uint64_t a, std::uint64_t c, std::uint64_t x0);
};

// X_1 .. X_count (the seed itself is not emitted).
std::vector<std::uint64_t> lcg_stream(const LcgSpec& spec, std::size_t count);

// How one generated value becomes an octet. With mu = floor(M/256), values
// >= 256*mu are dropped in every mode; the modes differ in the mapping of the
// retained values. top8 (floor(X/mu), the default) and mod256 always land in
// 0..255; literal_div256 (floor(X/256)) only does for M <= 2^16 and is
// rejected for larger moduli.
enum class ExtractionMode { top8, literal_div256, mod256 };

ExtractionMode parse_extraction_mode(const std::string& name);
const char* extraction_mode_name(ExtractionMode mode);

// Maps generator output to a sequence over the 256-ary alphabet. Requires
// M >= 256 and every value < M.
SampleSequence extract_octets(std::span<const std::uint64_t> values, u128 modulus,
                              ExtractionMode mode);

// Counter-based splittable pseudorandom stream (splitmix64 construction,
// documented in docs/FORMAT.md) used for every synthetic draw; the same seed
// always reproduces the same stream, and substream_seed(master, index) gives
// independent per-trial streams.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double next_unit(); // uniform in [0,1), 53 random bits

    static std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

private:
    std::uint64_t state_;
};

// n equiprobable independent bits, MSB-first out of successive stream words.
SampleSequence uniform_bits(std::uint64_t seed, std::size_t n_bits);

// A length-t sample path of the source: initial block from the declared
// initial distribution, then transitions.
SampleSequence sample_sequence(const FiniteMemorySource& source, std::size_t t,
                               std::uint64_t seed);

// Accepts "123", "2^31", "2^16+3", "10^8+1" style integer spellings.
u128 parse_big_int(const std::string& text);
std::string format_big_int(u128 value);

} // namespace cbst

#endif // CBST_PRNG_HPP
