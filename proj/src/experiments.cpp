#include "cbst/experiments.hpp"

#include <chrono>
#include <stdexcept>

#include "cbst/deflate.hpp"

namespace cbst {

std::vector<LcgSpec> standard_lcg_battery() {
    const u128 two31 = u128(1) << 31;
    const u128 two32 = u128(1) << 32;
    return {
        LcgSpec(100000001, 23, 0, 47594118),
        LcgSpec(two31, 65539, 0, 1),
        LcgSpec(two32, 134775813, 1, 0),
        LcgSpec(two32, 69069, 0, 1),
    };
}

std::string lcg_label(const LcgSpec& spec) {
    return "lcg(" + format_big_int(spec.modulus) + "," + std::to_string(spec.multiplier) +
           "," + std::to_string(spec.increment) + "," + std::to_string(spec.seed) + ")";
}

SampleSequence lcg_octets(const LcgSpec& spec, std::uint64_t octet_count,
                          ExtractionMode mode) {
    std::uint64_t mu = std::uint64_t(spec.modulus / 256);
    if (mu == 0) throw std::invalid_argument("modulus below 256");
    const u128 cutoff = u128(mu) * 256;

    std::vector<Symbol> octets;
    octets.reserve(octet_count);
    u128 x = spec.seed;
    // the drop rate is (M - 256 mu)/M < 1/256, so this cap is generous
    std::uint64_t budget = 2 * octet_count + 1000000;
    while (octets.size() < octet_count && budget-- > 0) {
        x = (u128(spec.multiplier) * x + spec.increment) % spec.modulus;
        if (x >= cutoff) continue;
        switch (mode) {
            case ExtractionMode::top8:
                octets.push_back(Symbol(std::uint64_t(x) / mu));
                break;
            case ExtractionMode::literal_div256:
                if (spec.modulus > 65536)
                    throw std::invalid_argument(
                        "literal-div256 extraction only yields octets for moduli up to 2^16");
                octets.push_back(Symbol(std::uint64_t(x) / 256));
                break;
            case ExtractionMode::mod256:
                octets.push_back(Symbol(std::uint64_t(x) % 256));
                break;
        }
    }
    if (octets.size() < octet_count)
        throw std::runtime_error("generator dropped too many values to fill the budget");
    return SampleSequence(Alphabet(256), std::move(octets));
}

std::vector<LcgExperimentRow> run_lcg_experiment(const LcgExperimentConfig& config) {
    if (config.bits < 10000)
        throw std::invalid_argument("bit budget below 10^4 carries no usable statistic");
    if (config.bits % 8 != 0)
        throw std::invalid_argument("bit budget must be a multiple of 8");
    const std::uint64_t octet_count = config.bits / 8;

    FiniteMemorySource uniform_octets = FiniteMemorySource::uniform_iid(256);
    std::vector<LcgExperimentRow> rows;
    for (const LcgSpec& spec : standard_lcg_battery()) {
        SampleSequence x = lcg_octets(spec, octet_count, config.mode);
        std::vector<std::uint8_t> raw = DeflateCodec::pack(x);
        std::string digest = fnv1a_digest(raw);
        for (const std::string& codec_spec : config.codec_specs) {
            auto codec = make_codec(codec_spec, x.alphabet());
            auto start = std::chrono::steady_clock::now();
            TestOutcome outcome = identity_test(x, uniform_octets, *codec, config.alpha);
            double secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
            rows.push_back({lcg_label(spec),
                            make_report("identity", outcome, x.length(), digest,
                                        std::nullopt, secs)});
        }
    }
    return rows;
}

} // namespace cbst
