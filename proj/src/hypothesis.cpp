#include "cbst/hypothesis.hpp"

#include <cmath>
#include <stdexcept>

#include "cbst/entropy.hpp"

namespace cbst {

const char* decision_name(Decision d) {
    return d == Decision::accept ? "accept" : "reject";
}

double p_value_bound(double statistic_bits) {
    if (statistic_bits <= 0.0) return 1.0;
    return std::exp2(-statistic_bits); // +inf maps to 0
}

TestOutcome make_outcome(double model_term_bits, std::int64_t code_length_bits,
                         double alpha, std::string codec_name) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie strictly between 0 and 1");
    TestOutcome o;
    o.model_term_bits = model_term_bits;
    o.code_length_bits = code_length_bits;
    o.statistic_bits = model_term_bits - double(code_length_bits);
    o.threshold_bits = -std::log2(alpha);
    o.decision = o.statistic_bits > o.threshold_bits ? Decision::reject : Decision::accept;
    o.p_bound = p_value_bound(o.statistic_bits);
    o.codec = std::move(codec_name);
    o.alpha = alpha;
    return o;
}

TestOutcome identity_test(const SampleSequence& x, const FiniteMemorySource& pi,
                          const Codec& codec, double alpha) {
    if (!(x.alphabet() == pi.alphabet()))
        throw std::invalid_argument("sample and null source alphabets differ");
    double model_term = neg_log_prob(pi, x);
    return make_outcome(model_term, codec.code_length_bits(x), alpha, codec.name());
}

TestOutcome independence_test(const SampleSequence& x, std::uint32_t m,
                              const Codec& codec, double alpha) {
    if (m >= x.length())
        throw std::invalid_argument("order m must be smaller than the sample length");
    double model_term = double(x.length() - m) * empirical_entropy(x, m);
    return make_outcome(model_term, codec.code_length_bits(x), alpha, codec.name());
}

} // namespace cbst
