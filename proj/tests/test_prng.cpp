#include <doctest.h>

#include <cmath>
#include <random>

#include "cbst/prng.hpp"
#include "test_support.hpp"

using namespace cbst;
using namespace cbst::testsupport;

namespace {

// independent modular-arithmetic oracle: schoolbook double-and-add so no
// 128-bit multiply is ever formed
std::uint64_t mulmod_oracle(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t result = 0;
    a %= m;
    while (b > 0) {
        if (b & 1) result = (result + a) % m;
        a = (a + a) % m;
        b >>= 1;
    }
    return result;
}

} // namespace

TEST_SUITE_BEGIN("prng");

TEST_CASE("the classic 65539 generator starts 65539, 393225") {
    LcgSpec spec(u128(1) << 31, 65539, 0, 1);
    auto xs = lcg_stream(spec, 2);
    REQUIRE(xs.size() == 2);
    CHECK(xs[0] == 65539);
    CHECK(xs[1] == 393225);
}

TEST_CASE("identity multiplier yields a constant stream") {
    LcgSpec spec(1000, 1, 0, 123);
    auto xs = lcg_stream(spec, 5);
    for (auto x : xs) CHECK(x == 123);
    CHECK(lcg_stream(spec, 0).empty());
}

TEST_CASE("lcg stream matches the double-and-add oracle") {
    std::mt19937_64 gen(51);
    for (int round = 0; round < 100; ++round) {
        std::uint64_t m = 2 + gen() % ((std::uint64_t(1) << 62) - 2);
        LcgSpec spec(m, gen() % m, gen() % m, gen() % m);
        auto xs = lcg_stream(spec, 100);
        std::uint64_t x = spec.seed;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            x = (mulmod_oracle(spec.multiplier, x, m) + spec.increment) % m;
            REQUIRE(xs[i] == x);
        }
    }
}

TEST_CASE("top8 extraction boundaries for the modulus 10^8+1") {
    const u128 m = 100000001;
    // mu = 390625; values at or above 256 mu = 10^8 drop
    std::vector<std::uint64_t> values{99999999, 100000000, 390624, 390625, 0};
    auto x = extract_octets(values, m, ExtractionMode::top8);
    REQUIRE(x.length() == 4); // 100000000 dropped
    CHECK(x[0] == 255);
    CHECK(x[1] == 0);
    CHECK(x[2] == 1);
    CHECK(x[3] == 0);
}

TEST_CASE("drop rule applies in every mode and the count is exact") {
    const u128 m = 1000; // mu = 3, cutoff 768
    std::vector<std::uint64_t> values;
    for (std::uint64_t v = 0; v < 1000; ++v) values.push_back(v);
    for (auto mode : {ExtractionMode::top8, ExtractionMode::literal_div256,
                      ExtractionMode::mod256}) {
        auto x = extract_octets(values, m, mode);
        CHECK(x.length() == 768); // exactly M - 256 mu = 232 dropped
    }
}

TEST_CASE("literal-div256 refuses moduli whose quotients overflow an octet") {
    std::vector<std::uint64_t> values{300};
    CHECK_NOTHROW(extract_octets(values, 65536, ExtractionMode::literal_div256));
    CHECK_THROWS_AS(extract_octets(values, 65537, ExtractionMode::literal_div256),
                    std::invalid_argument);
    CHECK_THROWS_AS(extract_octets(values, 255, ExtractionMode::top8),
                    std::invalid_argument);
}

TEST_CASE("top8 octets of uniform draws are uniform within 4 sigma") {
    const u128 m = 100000001;
    const std::uint64_t mu = 390625;
    std::mt19937_64 gen(52);
    std::vector<std::uint64_t> values(1000000);
    for (auto& v : values) v = gen() % std::uint64_t(m);
    auto x = extract_octets(values, m, ExtractionMode::top8);

    std::vector<std::uint64_t> freq(256, 0);
    for (Symbol s : x.symbols()) ++freq[s];
    double expected = double(x.length()) / 256.0;
    double sigma = std::sqrt(expected * (1.0 - 1.0 / 256.0));
    for (int b = 0; b < 256; ++b) CHECK(std::abs(double(freq[b]) - expected) <= 4.0 * sigma);

    // dropped count matches the rule exactly
    std::uint64_t dropped = 0;
    for (auto v : values)
        if (v >= 256 * mu) ++dropped;
    CHECK(values.size() - x.length() == dropped);
}

TEST_CASE("uniform bits are deterministic per seed") {
    auto a = uniform_bits(7, 4096);
    auto b = uniform_bits(7, 4096);
    CHECK(std::equal(a.symbols().begin(), a.symbols().end(), b.symbols().begin(),
                     b.symbols().end()));
    CHECK(uniform_bits(7, 0).length() == 0);
}

TEST_CASE("different seeds disagree on about half the positions") {
    auto a = uniform_bits(1, 10000);
    auto b = uniform_bits(2, 10000);
    std::size_t differing = 0;
    for (std::size_t i = 0; i < a.length(); ++i)
        if (a[i] != b[i]) ++differing;
    CHECK(differing > 4500);
    CHECK(differing < 5500);
}

TEST_CASE("uniform bits are balanced") {
    auto x = uniform_bits(3, 100000);
    std::size_t ones = 0;
    for (Symbol s : x.symbols()) ones += s;
    CHECK(std::abs(double(ones) - 50000.0) < 4.0 * std::sqrt(25000.0));
}

TEST_CASE("sampled paths follow the source statistics") {
    auto x = sample_sequence(bernoulli(0.7), 100000, 8);
    std::size_t zeros = 0;
    for (Symbol s : x.symbols()) zeros += s == 0;
    CHECK(std::abs(double(zeros) - 70000.0) < 4.0 * std::sqrt(100000.0 * 0.7 * 0.3));

    auto y = sample_sequence(sticky_chain(0.9), 100000, 9);
    std::size_t stays = 0;
    for (std::size_t i = 1; i < y.length(); ++i) stays += y[i] == y[i - 1];
    CHECK(std::abs(double(stays) - 0.9 * 99999.0) < 4.0 * std::sqrt(99999.0 * 0.09));

    // determinism
    auto y2 = sample_sequence(sticky_chain(0.9), 100000, 9);
    CHECK(std::equal(y.symbols().begin(), y.symbols().end(), y2.symbols().begin(),
                     y2.symbols().end()));
}

TEST_CASE("substream seeds separate trials") {
    CHECK(RandomStream::substream_seed(1, 0) != RandomStream::substream_seed(1, 1));
    CHECK(RandomStream::substream_seed(1, 0) != RandomStream::substream_seed(2, 0));
}

TEST_CASE("big integer spellings parse") {
    CHECK(parse_big_int("123") == 123);
    CHECK(parse_big_int("2^31") == (u128(1) << 31));
    CHECK(parse_big_int("2^16+3") == 65539);
    CHECK(parse_big_int("10^8+1") == 100000001);
    CHECK(format_big_int(parse_big_int("2^32")) == "4294967296");
    CHECK_THROWS_AS(parse_big_int("12a"), std::invalid_argument);
}

TEST_CASE("lcg parameters must sit below the modulus") {
    CHECK_THROWS_AS(LcgSpec(100, 100, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(LcgSpec(1, 0, 0, 0), std::invalid_argument);
}

TEST_SUITE_END();
