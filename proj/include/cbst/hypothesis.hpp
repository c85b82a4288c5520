#ifndef CBST_HYPOTHESIS_HPP
#define CBST_HYPOTHESIS_HPP

#include <string>

#include "cbst/codec.hpp"
#include "cbst/model.hpp"

namespace cbst {

enum class Decision { accept, reject };

// Outcome of either test. The statistic is the model term minus the actual
// code length, in bits; H0 is rejected exactly when it exceeds log2(1/alpha)
// (equality accepts). p_bound = min(1, 2^-statistic) is a conservative upper
// bound on the exact p-value, not the p-value itself; for very large
// statistics it underflows to 0 in double precision.
struct TestOutcome {
    double statistic_bits = 0.0;
    double threshold_bits = 0.0;
    Decision decision = Decision::accept;
    double p_bound = 1.0;
    double model_term_bits = 0.0;   // -log2 pi(x), or (t-m) h*_m(x)
    std::int64_t code_length_bits = 0;
    std::string codec;
    double alpha = 0.0;
};

const char* decision_name(Decision d); // "accept" | "reject"

// Conservative p-value bound min(1, 2^-statistic).
double p_value_bound(double statistic_bits);

// Assembles an outcome from the two statistic terms; shared by both tests.
TestOutcome make_outcome(double model_term_bits, std::int64_t code_length_bits,
                         double alpha, std::string codec_name);

// Identity test: is x a sample from the known source pi? Rejects when
// -log2 pi(x) - |code(x)| exceeds log2(1/alpha). Type I error <= alpha for
// any uniquely decodable codec; an impossible symbol under pi rejects with
// p_bound 0.
TestOutcome identity_test(const SampleSequence& x, const FiniteMemorySource& pi,
                          const Codec& codec, double alpha);

// Serial independence / Markov order test: is x a sample from some source of
// order at most m? Rejects when (t-m) h*_m(x) - |code(x)| exceeds
// log2(1/alpha).
TestOutcome independence_test(const SampleSequence& x, std::uint32_t m,
                              const Codec& codec, double alpha);

} // namespace cbst

#endif // CBST_HYPOTHESIS_HPP
