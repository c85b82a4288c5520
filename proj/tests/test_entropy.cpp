#include <doctest.h>

#include <cmath>
#include <random>

#include "cbst/entropy.hpp"
#include "test_support.hpp"

using namespace cbst;
using namespace cbst::testsupport;

namespace {

// literal window-enumeration oracle: counts every word by scanning and
// evaluates the order-k formula exactly as displayed
std::uint64_t naive_count(const SampleSequence& x, const std::vector<Symbol>& v) {
    std::uint64_t hits = 0;
    if (v.size() > x.length()) return 0;
    for (std::size_t i = 0; i + v.size() <= x.length(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (x[i + j] != v[j]) match = false;
        if (match) ++hits;
    }
    return hits;
}

double entropy_oracle(const SampleSequence& x, std::uint32_t k) {
    const std::uint32_t n = x.alphabet().size();
    const double t = double(x.length());
    std::uint64_t contexts = 1;
    for (std::uint32_t i = 0; i < k; ++i) contexts *= n;

    double sum = 0.0;
    for (std::uint64_t ci = 0; ci < contexts; ++ci) {
        auto v = unpack_word(ci, n, k);
        double nubar = 0.0;
        std::vector<double> nu(n);
        for (Symbol a = 0; a < n; ++a) {
            auto va = v;
            va.push_back(a);
            nu[a] = double(naive_count(x, va));
            nubar += nu[a];
        }
        if (nubar == 0.0) continue;
        for (Symbol a = 0; a < n; ++a) {
            double ratio = nu[a] / nubar;
            if (ratio > 0.0) sum -= nubar * ratio * std::log2(ratio);
        }
    }
    return sum / (t - double(k));
}

} // namespace

TEST_SUITE_BEGIN("entropy");

TEST_CASE("counting 00 in 000100 gives 3") {
    auto x = seq(2, "000100");
    std::vector<Symbol> v{0, 0};
    CHECK(count_occurrences(x, v) == 3);
}

TEST_CASE("overlapping occurrences all count") {
    SampleSequence x(Alphabet(2), {1, 1, 1, 1});
    std::vector<Symbol> v{1, 1};
    CHECK(count_occurrences(x, v) == 3);
}

TEST_CASE("words longer than the sample never occur") {
    auto x = seq(2, "01");
    std::vector<Symbol> v{0, 1, 0};
    CHECK(count_occurrences(x, v) == 0);
}

TEST_CASE("empirical entropy closed forms") {
    CHECK(empirical_entropy(seq(2, "0011"), 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(empirical_entropy(seq(2, "010101"), 1) == doctest::Approx(0.0).epsilon(1e-12));
    double expected = -(5.0 / 6.0 * std::log2(5.0 / 6.0) + 1.0 / 6.0 * std::log2(1.0 / 6.0));
    CHECK(empirical_entropy(seq(2, "000100"), 0) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(empirical_entropy(seq(2, "000100"), 0) == doctest::Approx(0.65002).epsilon(1e-4));
}

TEST_CASE("empirical entropy agrees with the literal oracle") {
    std::mt19937 gen(31);
    for (int round = 0; round < 200; ++round) {
        std::uint32_t n = 2 + round % 3;
        std::uint32_t k = round % 4;
        auto x = random_seq(n, k + 1 + gen() % 200, gen);
        CHECK(empirical_entropy(x, k) ==
              doctest::Approx(entropy_oracle(x, k)).epsilon(1e-9));
    }
}

TEST_CASE("empirical entropy stays within [0, log2 n]") {
    std::mt19937 gen(32);
    for (int round = 0; round < 60; ++round) {
        std::uint32_t n = 2 + round % 4;
        std::uint32_t k = round % 3;
        auto x = random_seq(n, k + 1 + gen() % 128, gen);
        double h = empirical_entropy(x, k);
        CHECK(h >= 0.0);
        CHECK(h <= std::log2(double(n)) + 1e-12);
    }
}

TEST_CASE("window totals account for every position") {
    std::mt19937 gen(33);
    auto x = random_seq(3, 100, gen);
    for (std::uint32_t k : {0u, 1u, 2u}) {
        ContextCounts cc(x, k);
        std::uint64_t total = 0;
        for (const auto& [gram, c] : cc.counts()) total += c;
        CHECK(total == x.length() - k);
    }
}

TEST_CASE("k not below t is rejected") {
    CHECK_THROWS_AS(empirical_entropy(seq(2, "0101"), 4), std::invalid_argument);
}

TEST_CASE("kl divergence closed forms and sign") {
    std::vector<double> p{0.75, 0.25}, u{0.5, 0.5}, degenerate{1.0, 0.0};
    CHECK(kl_divergence(p, p) == 0.0);
    CHECK(kl_divergence(degenerate, u) == doctest::Approx(1.0).epsilon(1e-12));
    double expected = 0.75 * std::log2(1.5) + 0.25 * std::log2(0.5);
    CHECK(kl_divergence(p, u) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(kl_divergence(p, u) == doctest::Approx(0.18872).epsilon(1e-4));
}

TEST_CASE("kl divergence is nonnegative and zero only at equality") {
    std::mt19937 gen(34);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    for (int round = 0; round < 500; ++round) {
        std::size_t n = 2 + round % 5;
        std::vector<double> p(n), q(n);
        double ps = 0, qs = 0;
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = u(gen);
            q[i] = u(gen);
            ps += p[i];
            qs += q[i];
        }
        bool different = false;
        for (std::size_t i = 0; i < n; ++i) {
            p[i] /= ps;
            q[i] /= qs;
            if (std::abs(p[i] - q[i]) > 1e-12) different = true;
        }
        double kl = kl_divergence(p, q);
        CHECK(kl >= 0.0);
        if (different) CHECK(kl > 0.0);
    }
}

TEST_CASE("kl divergence without absolute continuity is infinite") {
    std::vector<double> p{0.5, 0.5}, q{1.0, 0.0};
    CHECK(kl_divergence(p, q) == kInfiniteBits);
    std::vector<double> short_q{1.0};
    CHECK_THROWS_AS(kl_divergence(p, short_q), std::invalid_argument);
}

TEST_CASE("maximum-likelihood dominance over finite-memory sources") {
    // for every source theta of order <= m: (t-m) h*_m(x) <= -log2 theta(x),
    // hence also within the s log2|A| slack
    std::mt19937 gen(35);
    for (std::uint32_t m : {0u, 1u, 2u}) {
        std::vector<FiniteMemorySource> sources;
        for (int i = 0; i < 5; ++i) sources.push_back(random_source(2, m, gen));
        for (int round = 0; round < 30; ++round) {
            std::size_t t = m + 2 + gen() % 11;
            auto x = random_seq(2, t, gen);
            double lhs = double(t - m) * empirical_entropy(x, m);
            for (const auto& theta : sources) {
                double rhs = neg_log_prob(theta, x);
                CHECK(lhs <= rhs + 1e-9);
                CHECK(lhs <= rhs + double(theta.order()) * std::log2(2.0) + 1e-9);
            }
        }
    }
}

TEST_SUITE_END();
