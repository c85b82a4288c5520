#ifndef CBST_IO_HPP
#define CBST_IO_HPP

#include <string>
#include <vector>

#include "cbst/model.hpp"

namespace cbst {

// Raw bytes from a file, or from stdin when path is "-".
std::vector<std::uint8_t> read_input(const std::string& path);

// MSB-first bit unpacking into the binary alphabet; t = 8 x byte count.
SampleSequence sequence_from_bits(const std::vector<std::uint8_t>& bytes);

// One byte per symbol over the 256-ary alphabet.
SampleSequence sequence_from_bytes(const std::vector<std::uint8_t>& bytes);

void write_output(const std::string& path, const std::vector<std::uint8_t>& bytes);

} // namespace cbst

#endif // CBST_IO_HPP
