#include <doctest.h>

#include "cbst/report.hpp"
#include "test_support.hpp"

using namespace cbst;
using namespace cbst::testsupport;

TEST_SUITE_BEGIN("report");

TEST_CASE("json reports round-trip") {
    Report r;
    r.test = "identity";
    r.codec = "ctw:d=3";
    r.alpha = 0.01;
    r.t = 50000;
    r.statistic_bits = 9760.0;
    r.threshold_bits = 6.6438561897747395;
    r.model_term_bits = 400000.0;
    r.code_length_bits = 390240;
    r.decision = "reject";
    r.p_value_bound = 0.0;
    r.input_digest = "00ff00ff00ff00ff";
    r.seed = 42;
    r.wall_time_s = 0.125;

    CHECK(report_from_json(report_to_json(r)) == r);

    r.seed.reset();
    CHECK(report_from_json(report_to_json(r)) == r);
}

TEST_CASE("infinite statistics survive the round trip") {
    Report r;
    r.test = "identity";
    r.codec = "kt:k=0";
    r.alpha = 0.5;
    r.t = 4;
    r.statistic_bits = kInfiniteBits;
    r.model_term_bits = kInfiniteBits;
    r.threshold_bits = 1.0;
    r.code_length_bits = 12;
    r.decision = "reject";
    r.p_value_bound = 0.0;
    r.input_digest = "deadbeefdeadbeef";
    auto back = report_from_json(report_to_json(r));
    CHECK(back == r);
    CHECK(std::isinf(back.statistic_bits));
}

TEST_CASE("reports mirror outcomes field for field") {
    auto o = make_outcome(120.0, 100, 0.25, "lz78");
    auto r = make_report("independence", o, 64, "0123456789abcdef", std::nullopt, 0.5);
    CHECK(r.statistic_bits == o.statistic_bits);
    CHECK(r.threshold_bits == o.threshold_bits);
    CHECK(r.model_term_bits == o.model_term_bits);
    CHECK(r.code_length_bits == o.code_length_bits);
    CHECK(r.decision == decision_name(o.decision));
    CHECK(r.p_value_bound == o.p_bound);
    CHECK(r.alpha == o.alpha);
    CHECK(r.codec == o.codec);
}

TEST_CASE("summaries serialize and digests are stable") {
    HarnessSummary s;
    s.trials = 2000;
    s.rejections = 3;
    s.alpha = 0.05;
    s.rate = 3.0 / 2000.0;
    s.bound = 0.0646;
    s.bound_checked = true;
    s.pass = true;
    s.mean_statistic = -21.5;
    s.master_seed = 1;
    auto text = summary_to_json(s);
    CHECK(text.find("\"pass\":true") != std::string::npos);
    CHECK(text.find("\"rejections\":3") != std::string::npos);

    std::vector<std::uint8_t> bytes{'a', 'b', 'c'};
    CHECK(fnv1a_digest(bytes) == "e71fa2190541574b");
    CHECK(fnv1a_digest({}) == "cbf29ce484222325");
}

TEST_SUITE_END();
