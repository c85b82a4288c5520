#include "cbst/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace cbst {

Report make_report(const std::string& test, const TestOutcome& outcome,
                   std::uint64_t t, const std::string& input_digest,
                   std::optional<std::uint64_t> seed, double wall_time_s) {
    Report r;
    r.test = test;
    r.codec = outcome.codec;
    r.alpha = outcome.alpha;
    r.t = t;
    r.statistic_bits = outcome.statistic_bits;
    r.threshold_bits = outcome.threshold_bits;
    r.model_term_bits = outcome.model_term_bits;
    r.code_length_bits = outcome.code_length_bits;
    r.decision = decision_name(outcome.decision);
    r.p_value_bound = outcome.p_bound;
    r.input_digest = input_digest;
    r.seed = seed;
    r.wall_time_s = wall_time_s;
    return r;
}

namespace {

// infinities survive the JSON round trip as strings
nlohmann::json bits_to_json(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double bits_from_json(const nlohmann::json& j) {
    if (j.is_string()) return j.get<std::string>() == "-inf" ? -kInfiniteBits : kInfiniteBits;
    return j.get<double>();
}

} // namespace

std::string report_to_json(const Report& r) {
    nlohmann::json j{{"test", r.test},
                     {"codec", r.codec},
                     {"alpha", r.alpha},
                     {"t", r.t},
                     {"statistic_bits", bits_to_json(r.statistic_bits)},
                     {"threshold_bits", r.threshold_bits},
                     {"model_term_bits", bits_to_json(r.model_term_bits)},
                     {"code_length_bits", r.code_length_bits},
                     {"decision", r.decision},
                     {"p_value_bound", r.p_value_bound},
                     {"input_digest", r.input_digest},
                     {"wall_time_s", r.wall_time_s}};
    if (r.seed) j["seed"] = *r.seed;
    return j.dump();
}

Report report_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Report r;
    r.test = j.at("test").get<std::string>();
    r.codec = j.at("codec").get<std::string>();
    r.alpha = j.at("alpha").get<double>();
    r.t = j.at("t").get<std::uint64_t>();
    r.statistic_bits = bits_from_json(j.at("statistic_bits"));
    r.threshold_bits = j.at("threshold_bits").get<double>();
    r.model_term_bits = bits_from_json(j.at("model_term_bits"));
    r.code_length_bits = j.at("code_length_bits").get<std::int64_t>();
    r.decision = j.at("decision").get<std::string>();
    r.p_value_bound = j.at("p_value_bound").get<double>();
    r.input_digest = j.at("input_digest").get<std::string>();
    if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
    r.wall_time_s = j.at("wall_time_s").get<double>();
    return r;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os.precision(6);
    os << r.test << " test, codec " << r.codec << ", alpha " << r.alpha << "\n"
       << "  t               " << r.t << " symbols\n"
       << "  model term      " << r.model_term_bits << " bits\n"
       << "  code length     " << r.code_length_bits << " bits\n"
       << "  statistic       " << r.statistic_bits << " bits (threshold "
       << r.threshold_bits << ")\n"
       << "  p-value bound   " << r.p_value_bound << "\n"
       << "  decision        " << r.decision;
    if (r.seed) os << "\n  seed            " << *r.seed;
    return os.str();
}

std::string summary_to_json(const HarnessSummary& s) {
    nlohmann::json j{{"trials", s.trials},
                     {"rejections", s.rejections},
                     {"alpha", s.alpha},
                     {"rate", s.rate},
                     {"bound", s.bound},
                     {"bound_checked", s.bound_checked},
                     {"pass", s.pass},
                     {"mean_statistic_bits", s.mean_statistic},
                     {"seed", s.master_seed}};
    return j.dump();
}

std::string summary_to_text(const HarnessSummary& s) {
    std::ostringstream os;
    os.precision(6);
    os << "trials " << s.trials << ", rejections " << s.rejections << " (rate " << s.rate
       << ")\n"
       << "mean statistic " << s.mean_statistic << " bits\n";
    if (s.bound_checked)
        os << "type I bound " << s.bound << " -> " << (s.pass ? "pass" : "FAIL");
    else
        os << "power study (no bound check)";
    return os.str();
}

std::string fnv1a_digest(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001B3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace cbst
