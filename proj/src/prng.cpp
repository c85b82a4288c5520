#include "cbst/prng.hpp"

#include <stdexcept>
#include <string>

namespace cbst {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ull;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}
} // namespace

LcgSpec::LcgSpec(u128 m, std::uint64_t a, std::uint64_t c, std::uint64_t x0)
    : modulus(m), multiplier(a), increment(c), seed(x0) {
    if (modulus < 2) throw std::invalid_argument("lcg modulus must be at least 2");
    if (u128(multiplier) >= modulus || u128(increment) >= modulus ||
        u128(seed) >= modulus)
        throw std::invalid_argument("lcg parameters must be smaller than the modulus");
}

std::vector<std::uint64_t> lcg_stream(const LcgSpec& spec, std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    u128 x = spec.seed;
    for (std::size_t i = 0; i < count; ++i) {
        x = (u128(spec.multiplier) * x + spec.increment) % spec.modulus;
        out.push_back(std::uint64_t(x));
    }
    return out;
}

ExtractionMode parse_extraction_mode(const std::string& name) {
    if (name == "top8") return ExtractionMode::top8;
    if (name == "literal-div256") return ExtractionMode::literal_div256;
    if (name == "mod256") return ExtractionMode::mod256;
    throw std::invalid_argument("unknown extraction mode: " + name);
}

const char* extraction_mode_name(ExtractionMode mode) {
    switch (mode) {
        case ExtractionMode::top8: return "top8";
        case ExtractionMode::literal_div256: return "literal-div256";
        default: return "mod256";
    }
}

SampleSequence extract_octets(std::span<const std::uint64_t> values, u128 modulus,
                              ExtractionMode mode) {
    std::uint64_t mu = std::uint64_t(modulus / 256);
    if (mu == 0) throw std::invalid_argument("extraction requires a modulus of at least 256");
    if (mode == ExtractionMode::literal_div256 && modulus > 65536)
        throw std::invalid_argument(
            "literal-div256 extraction only yields octets for moduli up to 2^16");
    const u128 cutoff = u128(mu) * 256;

    std::vector<Symbol> octets;
    octets.reserve(values.size());
    for (std::uint64_t x : values) {
        if (u128(x) >= modulus)
            throw std::invalid_argument("generator value exceeds the modulus");
        if (u128(x) >= cutoff) continue; // dropped: maps to the empty word
        switch (mode) {
            case ExtractionMode::top8: octets.push_back(Symbol(x / mu)); break;
            case ExtractionMode::literal_div256: octets.push_back(Symbol(x / 256)); break;
            case ExtractionMode::mod256: octets.push_back(Symbol(x % 256)); break;
        }
    }
    return SampleSequence(Alphabet(256), std::move(octets));
}

std::uint64_t RandomStream::next_u64() {
    state_ += kGamma;
    return mix64(state_);
}

double RandomStream::next_unit() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::substream_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ (kStreamSalt * (index + 1)));
}

SampleSequence uniform_bits(std::uint64_t seed, std::size_t n_bits) {
    RandomStream rs(seed);
    std::vector<Symbol> bits(n_bits);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n_bits; ++i) {
        if (i % 64 == 0) word = rs.next_u64();
        bits[i] = Symbol((word >> (63 - i % 64)) & 1u);
    }
    return SampleSequence(Alphabet(2), std::move(bits));
}

namespace {

Symbol draw(std::span<const double> distribution, double u) {
    double cum = 0.0;
    for (std::size_t a = 0; a + 1 < distribution.size(); ++a) {
        cum += distribution[a];
        if (u < cum) return Symbol(a);
    }
    return Symbol(distribution.size() - 1);
}

} // namespace

SampleSequence sample_sequence(const FiniteMemorySource& source, std::size_t t,
                               std::uint64_t seed) {
    const std::uint32_t n = source.alphabet().size();
    const std::uint32_t s = source.order();
    RandomStream rs(seed);
    std::vector<Symbol> sym;
    sym.reserve(t);

    if (s > 0 && t > 0) {
        // draw the initial block from the declared initial distribution
        double u = rs.next_unit();
        std::uint64_t block = 0;
        double cum = 0.0;
        for (std::uint64_t w = 0; w < source.context_count(); ++w) {
            cum += source.initial_block_prob(w);
            block = w;
            if (u < cum) break;
        }
        auto word = unpack_word(block, n, s);
        for (std::uint32_t i = 0; i < s && sym.size() < t; ++i) sym.push_back(word[i]);
    }

    std::uint64_t context = s > 0 ? pack_word(std::span(sym).subspan(0, std::min<std::size_t>(s, sym.size())), n) : 0;
    const std::uint64_t context_mod = s > 0 ? source.context_count() / n : 1;
    std::vector<double> row(n);
    while (sym.size() < t) {
        for (Symbol a = 0; a < n; ++a) row[a] = source.transition(context, a);
        Symbol a = draw(row, rs.next_unit());
        sym.push_back(a);
        if (s > 0) context = (context % context_mod) * n + a;
    }
    return SampleSequence(source.alphabet(), std::move(sym));
}

u128 parse_big_int(const std::string& text) {
    auto parse_plain = [](const std::string& s) -> u128 {
        if (s.empty()) throw std::invalid_argument("empty integer");
        u128 v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad integer: " + s);
            u128 next = v * 10 + u128(c - '0');
            if (next < v) throw std::invalid_argument("integer overflow: " + s);
            v = next;
        }
        return v;
    };

    auto caret = text.find('^');
    if (caret == std::string::npos) return parse_plain(text);

    std::size_t tail = text.find_first_of("+-", caret);
    u128 base = parse_plain(text.substr(0, caret));
    u128 exponent = parse_plain(text.substr(caret + 1, tail == std::string::npos
                                                           ? std::string::npos
                                                           : tail - caret - 1));
    u128 value = 1;
    for (u128 i = 0; i < exponent; ++i) {
        u128 next = value * base;
        if (base != 0 && next / base != value)
            throw std::invalid_argument("integer overflow: " + text);
        value = next;
    }
    if (tail != std::string::npos) {
        u128 addend = parse_plain(text.substr(tail + 1));
        value = text[tail] == '+' ? value + addend : value - addend;
    }
    return value;
}

std::string format_big_int(u128 value) {
    if (value == 0) return "0";
    std::string out;
    while (value > 0) {
        out.insert(out.begin(), char('0' + int(value % 10)));
        value /= 10;
    }
    return out;
}

} // namespace cbst
