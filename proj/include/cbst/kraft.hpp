#ifndef CBST_KRAFT_HPP
#define CBST_KRAFT_HPP

#include "cbst/codec.hpp"

namespace cbst {

// Exhaustive Kraft sum over all |A|^t words of length t:
// sum_u 2^(-code_length_bits(u)). Unique decodability forces this to stay
// at or below 1; the suites verify it directly.
//
// kraft_sum runs the enumeration across OpenMP threads; kraft_sum_serial is
// the reference implementation the tests compare against.
double kraft_sum(const Codec& codec, std::uint32_t t);
double kraft_sum_serial(const Codec& codec, std::uint32_t t);

} // namespace cbst

#endif // CBST_KRAFT_HPP
