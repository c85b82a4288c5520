#include "cbst/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace cbst {

namespace {

void check_config(const MonteCarloConfig& config) {
    if (config.codec == nullptr) throw std::invalid_argument("monte carlo needs a codec");
    if (config.trials < 1) throw std::invalid_argument("at least one trial required");
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
        throw std::invalid_argument("alpha must lie strictly between 0 and 1");
    if (config.kind == TestKind::independence && !config.alternative &&
        config.null_source.order() > config.m)
        throw std::invalid_argument(
            "null source of order " + std::to_string(config.null_source.order()) +
            " is not a valid null for the independence test with m = " +
            std::to_string(config.m) + "; pass it as the alternative instead");
    if (!(config.codec->alphabet() == config.null_source.alphabet()))
        throw std::invalid_argument("codec and null source alphabets differ");
    if (config.alternative &&
        !(config.alternative->alphabet() == config.null_source.alphabet()))
        throw std::invalid_argument("alternative and null source alphabets differ");
    if (config.kind == TestKind::independence && config.m >= config.t)
        throw std::invalid_argument("order m must be smaller than the trial length");
}

HarnessSummary summarize(const MonteCarloConfig& config,
                         const std::vector<double>& statistics, int rejections) {
    HarnessSummary s;
    s.trials = config.trials;
    s.rejections = rejections;
    s.alpha = config.alpha;
    s.rate = double(rejections) / double(config.trials);
    s.bound = config.alpha +
              3.0 * std::sqrt(config.alpha * (1.0 - config.alpha) / double(config.trials));
    s.bound_checked = !config.alternative.has_value();
    s.pass = !s.bound_checked || s.rate <= s.bound;
    // summed in trial order, independent of execution order
    double sum = 0.0;
    for (double v : statistics) sum += v;
    s.mean_statistic = sum / double(config.trials);
    s.master_seed = config.master_seed;
    return s;
}

} // namespace

TestOutcome monte_carlo_trial(const MonteCarloConfig& config, int index) {
    const FiniteMemorySource& data_source =
        config.alternative ? *config.alternative : config.null_source;
    std::uint64_t seed = RandomStream::substream_seed(config.master_seed,
                                                      std::uint64_t(index));
    SampleSequence x = sample_sequence(data_source, config.t, seed);
    if (config.kind == TestKind::identity)
        return identity_test(x, config.null_source, *config.codec, config.alpha);
    return independence_test(x, config.m, *config.codec, config.alpha);
}

HarnessSummary monte_carlo(const MonteCarloConfig& config) {
    check_config(config);
    std::vector<double> statistics(std::size_t(config.trials));
    int rejections = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : rejections)
    for (int i = 0; i < config.trials; ++i) {
        TestOutcome o = monte_carlo_trial(config, i);
        statistics[std::size_t(i)] = o.statistic_bits;
        if (o.decision == Decision::reject) ++rejections;
    }
    return summarize(config, statistics, rejections);
}

HarnessSummary monte_carlo_serial(const MonteCarloConfig& config) {
    check_config(config);
    std::vector<double> statistics(std::size_t(config.trials));
    int rejections = 0;
    for (int i = 0; i < config.trials; ++i) {
        TestOutcome o = monte_carlo_trial(config, i);
        statistics[std::size_t(i)] = o.statistic_bits;
        if (o.decision == Decision::reject) ++rejections;
    }
    return summarize(config, statistics, rejections);
}

} // namespace cbst
