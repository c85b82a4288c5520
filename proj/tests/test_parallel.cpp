#include <doctest.h>

#include <cmath>

#include "cbst/kraft.hpp"
#include "cbst/montecarlo.hpp"
#include "test_support.hpp"

using namespace cbst;
using namespace cbst::testsupport;

TEST_SUITE_BEGIN("parallel");

TEST_CASE("kraft enumeration agrees between openmp and the serial reference") {
    for (const char* spec : {"kt:k=1", "ctw:d=1", "lz78"}) {
        auto codec = make_codec(spec, Alphabet(2));
        for (std::uint32_t t : {3u, 7u, 10u}) {
            double serial = kraft_sum_serial(*codec, t);
            double parallel = kraft_sum(*codec, t);
            CHECK(std::abs(serial - parallel) < 1e-9);
        }
    }
}

TEST_CASE("monte carlo agrees between openmp and the serial reference") {
    auto codec = make_codec("kt:k=0", Alphabet(2));
    MonteCarloConfig config{.kind = TestKind::identity,
                            .null_source = FiniteMemorySource::uniform_iid(2),
                            .codec = codec.get(),
                            .alpha = 0.2,
                            .t = 512,
                            .m = 0,
                            .trials = 64,
                            .master_seed = 99,
                            .alternative = std::nullopt};
    auto serial = monte_carlo_serial(config);
    auto parallel = monte_carlo(config);
    CHECK(serial.rejections == parallel.rejections);
    CHECK(serial.mean_statistic == parallel.mean_statistic); // bit identical
}

TEST_CASE("same master seed reproduces the summary exactly") {
    auto codec = make_codec("ctw:d=1", Alphabet(2));
    MonteCarloConfig config{.kind = TestKind::independence,
                            .null_source = bernoulli(0.6),
                            .codec = codec.get(),
                            .alpha = 0.05,
                            .t = 256,
                            .m = 0,
                            .trials = 32,
                            .master_seed = 5,
                            .alternative = std::nullopt};
    auto a = monte_carlo(config);
    auto b = monte_carlo(config);
    CHECK(a.rejections == b.rejections);
    CHECK(a.mean_statistic == b.mean_statistic);

    config.master_seed = 6;
    auto c = monte_carlo(config);
    CHECK(c.mean_statistic != a.mean_statistic);
}

TEST_CASE("single-trial runs are degenerate but consistent") {
    auto codec = make_codec("kt:k=0", Alphabet(2));
    MonteCarloConfig config{.kind = TestKind::identity,
                            .null_source = FiniteMemorySource::uniform_iid(2),
                            .codec = codec.get(),
                            .alpha = 0.05,
                            .t = 128,
                            .m = 0,
                            .trials = 1,
                            .master_seed = 17,
                            .alternative = std::nullopt};
    auto s = monte_carlo(config);
    CHECK((s.rate == 0.0 || s.rate == 1.0));
    CHECK(s.pass == (s.rate <= s.bound));
}

TEST_CASE("an over-ordered null is refused for the independence harness") {
    auto codec = make_codec("ctw:d=1", Alphabet(2));
    MonteCarloConfig config{.kind = TestKind::independence,
                            .null_source = sticky_chain(0.9),
                            .codec = codec.get(),
                            .alpha = 0.05,
                            .t = 256,
                            .m = 0, // chain has order 1 > m
                            .trials = 8,
                            .master_seed = 1,
                            .alternative = std::nullopt};
    CHECK_THROWS_AS(monte_carlo(config), std::invalid_argument);

    // as an explicit alternative it is a power study and runs
    config.alternative = sticky_chain(0.9);
    config.null_source = FiniteMemorySource::uniform_iid(2);
    auto s = monte_carlo(config);
    CHECK_FALSE(s.bound_checked);
}

namespace {

// negative control: a fake codec that claims impossibly short codewords (a
// Kraft violation); the type I harness must flag it
class TooShortCodec final : public Codec {
public:
    explicit TooShortCodec(Alphabet a) : Codec(std::move(a)) {}
    std::string name() const override { return "too-short"; }

protected:
    void write_payload(const SampleSequence& x, BitWriter& out) const override {
        std::uint64_t claimed =
            x.length() > 60 ? std::uint64_t(x.length()) - 50 : std::uint64_t(x.length());
        for (std::uint64_t i = 0; i < claimed; ++i) out.put_bit(false);
    }
    void read_payload(BitReader&, std::uint64_t, std::vector<Symbol>&) const override {
        throw DecodeError("not decodable", 0);
    }
};

} // namespace

TEST_CASE("the harness flags a codec that undercuts valid code lengths") {
    TooShortCodec codec(Alphabet(2));
    MonteCarloConfig config{.kind = TestKind::identity,
                            .null_source = FiniteMemorySource::uniform_iid(2),
                            .codec = &codec,
                            .alpha = 0.05,
                            .t = 512,
                            .m = 0,
                            .trials = 100,
                            .master_seed = 11,
                            .alternative = std::nullopt};
    auto s = monte_carlo(config);
    CHECK(s.rate == 1.0); // every trial "rejects": statistic = 50 - header
    CHECK_FALSE(s.pass);
}

TEST_CASE("power studies reject a strong alternative") {
    auto codec = make_codec("kt:k=0", Alphabet(2));
    MonteCarloConfig config{.kind = TestKind::identity,
                            .null_source = FiniteMemorySource::uniform_iid(2),
                            .codec = codec.get(),
                            .alpha = 0.01,
                            .t = 20000,
                            .m = 0,
                            .trials = 20,
                            .master_seed = 8,
                            .alternative = bernoulli(0.7)};
    auto s = monte_carlo(config);
    CHECK(s.rate == 1.0);
    CHECK(s.mean_statistic > 1000.0);
}

TEST_SUITE_END();
