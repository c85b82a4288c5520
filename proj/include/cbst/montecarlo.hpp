#ifndef CBST_MONTECARLO_HPP
#define CBST_MONTECARLO_HPP

#include <optional>

#include "cbst/hypothesis.hpp"
#include "cbst/prng.hpp"

namespace cbst {

enum class TestKind { identity, independence };

// One study: N trials of length-t data, each tested at level alpha.
//
// In null mode data is drawn from null_source itself (which for the
// independence test must have order <= m, otherwise the run is refused) and
// the empirical rejection rate is held against alpha + 3 sqrt(alpha(1-alpha)/N).
// With an alternative source set, data comes from it instead and the summary
// reports the raw rejection rate with no bound check (a power study).
struct MonteCarloConfig {
    TestKind kind = TestKind::identity;
    FiniteMemorySource null_source;
    const Codec* codec = nullptr;
    double alpha = 0.05;
    std::size_t t = 4096;
    std::uint32_t m = 0; // independence order
    int trials = 100;
    std::uint64_t master_seed = 1;
    std::optional<FiniteMemorySource> alternative;
};

struct HarnessSummary {
    int trials = 0;
    int rejections = 0;
    double alpha = 0.0;
    double rate = 0.0;           // rejections / trials
    double bound = 0.0;          // alpha + 3 sqrt(alpha(1-alpha)/N)
    bool bound_checked = false;  // false for power studies
    bool pass = true;            // rate <= bound whenever checked
    double mean_statistic = 0.0;
    std::uint64_t master_seed = 0;
};

// Trial i uses RandomStream::substream_seed(master_seed, i), and the
// aggregation is order-independent, so both entry points return identical
// summaries; monte_carlo spreads trials across OpenMP threads while
// monte_carlo_serial is the reference loop.
HarnessSummary monte_carlo(const MonteCarloConfig& config);
HarnessSummary monte_carlo_serial(const MonteCarloConfig& config);

// The outcome of trial `index`, exactly as the harness computes it.
TestOutcome monte_carlo_trial(const MonteCarloConfig& config, int index);

} // namespace cbst

#endif // CBST_MONTECARLO_HPP
