#include "cbst/kraft.hpp"

#include <cmath>
#include <stdexcept>

namespace cbst {

namespace {

double term(const Codec& codec, std::uint32_t t, std::uint64_t index) {
    const std::uint32_t n = codec.alphabet().size();
    std::vector<Symbol> sym(t);
    for (std::uint32_t i = t; i-- > 0;) {
        sym[i] = Symbol(index % n);
        index /= n;
    }
    SampleSequence x(codec.alphabet(), std::move(sym));
    return std::exp2(-double(codec.code_length_bits(x)));
}

std::uint64_t word_count(const Codec& codec, std::uint32_t t) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        count *= codec.alphabet().size();
        if (count > (std::uint64_t(1) << 26))
            throw std::invalid_argument("kraft enumeration too large");
    }
    return count;
}

} // namespace

double kraft_sum(const Codec& codec, std::uint32_t t) {
    const std::int64_t count = std::int64_t(word_count(codec, t));
    double sum = 0.0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : sum)
    for (std::int64_t i = 0; i < count; ++i) sum += term(codec, t, std::uint64_t(i));
    return sum;
}

double kraft_sum_serial(const Codec& codec, std::uint32_t t) {
    const std::uint64_t count = word_count(codec, t);
    double sum = 0.0;
    for (std::uint64_t i = 0; i < count; ++i) sum += term(codec, t, i);
    return sum;
}

} // namespace cbst
