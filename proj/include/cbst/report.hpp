#ifndef CBST_REPORT_HPP
#define CBST_REPORT_HPP

#include <optional>
#include <string>

#include "cbst/hypothesis.hpp"
#include "cbst/montecarlo.hpp"

namespace cbst {

// One test invocation, ready for printing. Mirrors TestOutcome field for
// field plus the run metadata the CLI adds.
struct Report {
    std::string test;  // "identity" | "independence"
    std::string codec;
    double alpha = 0.0;
    std::uint64_t t = 0;
    double statistic_bits = 0.0;
    double threshold_bits = 0.0;
    double model_term_bits = 0.0;
    std::int64_t code_length_bits = 0;
    std::string decision; // "accept" | "reject"
    double p_value_bound = 1.0;
    std::string input_digest;
    std::optional<std::uint64_t> seed;
    double wall_time_s = 0.0;

    bool operator==(const Report&) const = default;
};

Report make_report(const std::string& test, const TestOutcome& outcome,
                   std::uint64_t t, const std::string& input_digest,
                   std::optional<std::uint64_t> seed, double wall_time_s);

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& json_text);
std::string report_to_text(const Report& r);

std::string summary_to_json(const HarnessSummary& s);
std::string summary_to_text(const HarnessSummary& s);

// FNV-1a 64-bit digest, hex encoded; identifies the tested input bytes.
std::string fnv1a_digest(std::span<const std::uint8_t> bytes);

} // namespace cbst

#endif // CBST_REPORT_HPP
