#ifndef CBST_EXPERIMENTS_HPP
#define CBST_EXPERIMENTS_HPP

#include <vector>

#include "cbst/prng.hpp"
#include "cbst/report.hpp"

namespace cbst {

// The four standard congruential generators exercised by the `table1`
// subcommand: a short-multiplier modulus-10^8+1 generator, RANDU, the
// Borland-style generator, and the multiplier-69069 generator. The first two
// have well-documented defects; the last two are regarded as good.
std::vector<LcgSpec> standard_lcg_battery();

struct LcgExperimentConfig {
    std::uint64_t bits = 400000; // octet budget x 8; at least 10^4
    std::vector<std::string> codec_specs{"ext:deflate", "ctw:d=1"};
    double alpha = 0.01;
    ExtractionMode mode = ExtractionMode::top8;
};

struct LcgExperimentRow {
    std::string generator; // "lcg(M,A,C,X0)"
    Report report;
};

// For each generator: draw values, extract octets until the bit budget is
// met, and run the identity test against the uniform i.i.d. octet source
// with each codec in the battery. A codec that expands the input (code
// length >= original bits) accepts for any reasonable alpha.
std::vector<LcgExperimentRow> run_lcg_experiment(const LcgExperimentConfig& config);

// Octets for one generator under the drop rule, sized to the budget.
SampleSequence lcg_octets(const LcgSpec& spec, std::uint64_t octet_count,
                          ExtractionMode mode);

std::string lcg_label(const LcgSpec& spec);

} // namespace cbst

#endif // CBST_EXPERIMENTS_HPP
