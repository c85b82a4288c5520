// cbst - compression-based statistical tests for finite-alphabet sequences.
//
// Subcommands: identity, independence, generate, montecarlo, table1.
// Exit codes: 0 = H0 accepted (or harness/bound passed), 2 = H0 rejected
// (or bound violated), 1 = usage or data error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cbst/experiments.hpp"
#include "cbst/io.hpp"
#include "cbst/montecarlo.hpp"
#include "cbst/report.hpp"

namespace {

using namespace cbst;

struct TestOptions {
    std::string input;
    std::string format = "bits";
    std::string model = "uniform-iid";
    std::string codec = "ctw:d=3";
    double alpha = 0.01;
    std::uint32_t m = 0;
    std::string report = "text";
};

SampleSequence load_sequence(const TestOptions& opt, std::string& digest) {
    auto bytes = read_input(opt.input);
    digest = fnv1a_digest(bytes);
    if (opt.format == "bits") return sequence_from_bits(bytes);
    if (opt.format == "bytes") return sequence_from_bytes(bytes);
    throw std::invalid_argument("unknown format: " + opt.format);
}

FiniteMemorySource load_model(const std::string& name, std::uint32_t alphabet_size) {
    if (name == "uniform-iid") return FiniteMemorySource::uniform_iid(alphabet_size);
    return load_source_file(name);
}

int emit_outcome(const TestOptions& opt, const std::string& test_name,
                 const TestOutcome& outcome, std::uint64_t t,
                 const std::string& digest, double seconds) {
    Report r = make_report(test_name, outcome, t, digest, std::nullopt, seconds);
    if (opt.report == "json")
        std::cout << report_to_json(r) << "\n";
    else
        std::cout << report_to_text(r) << "\n";
    return outcome.decision == Decision::accept ? 0 : 2;
}

int run_identity(const TestOptions& opt) {
    std::string digest;
    SampleSequence x = load_sequence(opt, digest);
    FiniteMemorySource pi = load_model(opt.model, x.alphabet().size());
    auto codec = make_codec(opt.codec, x.alphabet());
    auto start = std::chrono::steady_clock::now();
    TestOutcome outcome = identity_test(x, pi, *codec, opt.alpha);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit_outcome(opt, "identity", outcome, x.length(), digest, secs);
}

int run_independence(const TestOptions& opt) {
    std::string digest;
    SampleSequence x = load_sequence(opt, digest);
    auto codec = make_codec(opt.codec, x.alphabet());
    auto start = std::chrono::steady_clock::now();
    TestOutcome outcome = independence_test(x, opt.m, *codec, opt.alpha);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit_outcome(opt, "independence", outcome, x.length(), digest, secs);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) parts.push_back(part);
    return parts;
}

LcgSpec parse_lcg(const std::string& text) {
    auto parts = split_list(text);
    if (parts.size() != 4)
        throw std::invalid_argument("--lcg expects M,A,C,X0");
    return LcgSpec(parse_big_int(parts[0]), std::uint64_t(parse_big_int(parts[1])),
                   std::uint64_t(parse_big_int(parts[2])),
                   std::uint64_t(parse_big_int(parts[3])));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compression-based identity and serial-independence tests"};
    app.require_subcommand(1);

    TestOptions opt;
    auto add_test_flags = [&](CLI::App* cmd, bool with_model, bool with_m) {
        cmd->add_option("--input", opt.input, "input file, or - for stdin")->required();
        cmd->add_option("--format", opt.format, "bits | bytes (default bits)");
        if (with_model)
            cmd->add_option("--model", opt.model, "uniform-iid or a source JSON file");
        if (with_m) cmd->add_option("--m", opt.m, "null Markov order (default 0)");
        cmd->add_option("--codec", opt.codec,
                        "kt:k=K | ctw:d=D | lz78 | ext:deflate (default ctw:d=3)");
        cmd->add_option("--alpha", opt.alpha, "significance level (default 0.01)");
        cmd->add_option("--report", opt.report, "text | json");
    };

    auto* identity = app.add_subcommand("identity", "test a sample against a known source");
    add_test_flags(identity, true, false);
    auto* independence =
        app.add_subcommand("independence", "test for Markov order at most m");
    add_test_flags(independence, false, true);

    std::string lcg_text;
    std::uint64_t octet_count = 50000;
    std::string extract_name = "top8";
    std::string out_path = "-";
    auto* generate = app.add_subcommand("generate", "emit octets from a congruential generator");
    generate->add_option("--lcg", lcg_text, "M,A,C,X0 (decimal or 2^k forms)")->required();
    generate->add_option("--octets", octet_count, "octets to emit (default 50000)");
    generate->add_option("--extract", extract_name, "top8 | literal-div256 | mod256");
    generate->add_option("--output", out_path, "output file, or - for stdout (default)");

    std::string mc_test = "identity";
    std::string mc_model = "uniform-iid";
    std::string mc_alternative;
    std::uint32_t mc_alphabet = 2;
    std::size_t mc_t = 4096;
    int mc_trials = 200;
    std::uint64_t mc_seed = 1;
    bool mc_serial = false;
    auto* montecarlo_cmd =
        app.add_subcommand("montecarlo", "seeded type I / power study over many trials");
    montecarlo_cmd->add_option("--test", mc_test, "identity | independence");
    montecarlo_cmd->add_option("--model", mc_model, "null source (uniform-iid or file)");
    montecarlo_cmd->add_option("--alphabet", mc_alphabet,
                               "alphabet size for uniform-iid (default 2)");
    montecarlo_cmd->add_option("--alternative", mc_alternative,
                               "sample from this source instead (power study)");
    montecarlo_cmd->add_option("--codec", opt.codec, "codec spec");
    montecarlo_cmd->add_option("--alpha", opt.alpha, "significance level");
    montecarlo_cmd->add_option("--t", mc_t, "sample length per trial");
    montecarlo_cmd->add_option("--m", opt.m, "independence order");
    montecarlo_cmd->add_option("--trials", mc_trials, "number of trials");
    montecarlo_cmd->add_option("--seed", mc_seed, "master seed");
    montecarlo_cmd->add_flag("--serial", mc_serial, "use the serial reference loop");
    montecarlo_cmd->add_option("--report", opt.report, "text | json");

    std::uint64_t t1_bits = 400000;
    std::string t1_codecs;
    double t1_alpha = 0.01;
    std::string t1_extract = "top8";
    auto* table1 = app.add_subcommand(
        "table1", "identity-test the four standard congruential generators");
    table1->add_option("--bits", t1_bits, "bit budget per generator (default 400000)");
    table1->add_option("--codecs", t1_codecs,
                       "comma list of codec specs (default from CBST_CODECS or "
                       "ext:deflate,ctw:d=1)");
    table1->add_option("--alpha", t1_alpha, "significance level (default 0.01)");
    table1->add_option("--extract", t1_extract, "extraction mode (default top8)");
    table1->add_option("--report", opt.report, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (identity->parsed()) return run_identity(opt);
        if (independence->parsed()) return run_independence(opt);

        if (generate->parsed()) {
            LcgSpec spec = parse_lcg(lcg_text);
            SampleSequence octets =
                lcg_octets(spec, octet_count, parse_extraction_mode(extract_name));
            std::vector<std::uint8_t> bytes(octets.symbols().begin(),
                                            octets.symbols().end());
            write_output(out_path, bytes);
            return 0;
        }

        if (montecarlo_cmd->parsed()) {
            MonteCarloConfig config{.kind = mc_test == "independence"
                                                ? TestKind::independence
                                                : TestKind::identity,
                                    .null_source = load_model(mc_model, mc_alphabet),
                                    .codec = nullptr,
                                    .alpha = opt.alpha,
                                    .t = mc_t,
                                    .m = opt.m,
                                    .trials = mc_trials,
                                    .master_seed = mc_seed,
                                    .alternative = std::nullopt};
            if (mc_test != "identity" && mc_test != "independence")
                throw std::invalid_argument("unknown test kind: " + mc_test);
            if (!mc_alternative.empty())
                config.alternative = load_model(mc_alternative, mc_alphabet);
            auto codec = make_codec(opt.codec, config.null_source.alphabet());
            config.codec = codec.get();
            HarnessSummary s = mc_serial ? monte_carlo_serial(config) : monte_carlo(config);
            std::cout << (opt.report == "json" ? summary_to_json(s) : summary_to_text(s))
                      << "\n";
            return s.pass ? 0 : 2;
        }

        if (table1->parsed()) {
            LcgExperimentConfig config;
            config.bits = t1_bits;
            config.alpha = t1_alpha;
            config.mode = parse_extraction_mode(t1_extract);
            if (!t1_codecs.empty()) {
                config.codec_specs = split_list(t1_codecs);
            } else if (const char* env = std::getenv("CBST_CODECS")) {
                config.codec_specs = split_list(env);
            }
            for (const auto& row : run_lcg_experiment(config)) {
                if (opt.report == "json") {
                    std::cout << "{\"generator\":\"" << row.generator
                              << "\",\"report\":" << report_to_json(row.report) << "}\n";
                } else {
                    std::cout << row.generator << ": codec " << row.report.codec
                              << ", code length " << row.report.code_length_bits
                              << " bits vs " << std::int64_t(row.report.model_term_bits)
                              << " -> " << row.report.decision << "\n";
                }
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
