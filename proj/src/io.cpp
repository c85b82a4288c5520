#include "cbst/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>

namespace cbst {

std::vector<std::uint8_t> read_input(const std::string& path) {
    if (path == "-") {
        std::vector<std::uint8_t> bytes;
        char c;
        while (std::cin.get(c)) bytes.push_back(std::uint8_t(c));
        return bytes;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SampleSequence sequence_from_bits(const std::vector<std::uint8_t>& bytes) {
    std::vector<Symbol> bits;
    bits.reserve(bytes.size() * 8);
    for (std::uint8_t b : bytes)
        for (int i = 7; i >= 0; --i) bits.push_back(Symbol((b >> i) & 1u));
    return SampleSequence(Alphabet(2), std::move(bits));
}

SampleSequence sequence_from_bytes(const std::vector<std::uint8_t>& bytes) {
    std::vector<Symbol> symbols(bytes.begin(), bytes.end());
    return SampleSequence(Alphabet(256), std::move(symbols));
}

void write_output(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                        std::streamsize(bytes.size()));
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

} // namespace cbst
