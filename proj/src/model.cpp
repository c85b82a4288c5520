#include "cbst/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cbst {

namespace {

constexpr double kRowTolerance = 1e-12;
constexpr int kStationaryMaxIters = 200000;
constexpr double kStationaryTolerance = 1e-12;

std::uint64_t checked_pow(std::uint32_t n, std::uint32_t e, std::uint64_t limit,
                          const char* what) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (v > limit / n)
            throw std::invalid_argument(std::string(what) + ": table size overflow");
        v *= n;
    }
    return v;
}

void check_distribution(std::span<const double> row, const std::string& what) {
    double sum = 0.0;
    for (double p : row) {
        if (!(p >= 0.0))
            throw std::invalid_argument(what + " has a negative or NaN entry");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kRowTolerance) {
        std::ostringstream os;
        os << what << " sums to " << sum << ", expected 1";
        throw std::invalid_argument(os.str());
    }
}

} // namespace

Alphabet::Alphabet(std::uint32_t size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
    if (size_ < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (!labels_.empty() && labels_.size() != size_)
        throw std::invalid_argument("label count does not match alphabet size");
}

std::string Alphabet::label(Symbol s) const {
    if (s < labels_.size()) return labels_[s];
    return std::to_string(s);
}

SampleSequence::SampleSequence(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    for (Symbol s : symbols_)
        if (s >= alphabet_.size())
            throw std::invalid_argument("symbol index " + std::to_string(s) +
                                        " outside alphabet of size " +
                                        std::to_string(alphabet_.size()));
}

FiniteMemorySource::FiniteMemorySource(Alphabet alphabet, std::uint32_t order,
                                       std::vector<double> initial,
                                       std::vector<double> transitions)
    : alphabet_(std::move(alphabet)),
      order_(order),
      context_count_(checked_pow(alphabet_.size(), order, std::uint64_t(1) << 26, "source")),
      initial_(std::move(initial)),
      transitions_(std::move(transitions)) {
    const std::uint32_t n = alphabet_.size();
    if (transitions_.size() != context_count_ * n)
        throw std::invalid_argument("transition table must have one row of " +
                                    std::to_string(n) + " probabilities per context");
    if (order_ == 0 && !initial_.empty())
        throw std::invalid_argument("order-0 sources take no initial table");
    if (!initial_.empty()) {
        if (initial_.size() != context_count_)
            throw std::invalid_argument("initial table must have n^order entries");
        check_distribution(initial_, "initial distribution");
    }
    for (std::uint64_t c = 0; c < context_count_; ++c) {
        check_distribution(std::span(transitions_).subspan(c * n, n),
                           "transition row for context \"" + context_name(c) + "\"");
    }
}

FiniteMemorySource FiniteMemorySource::uniform_iid(std::uint32_t alphabet_size) {
    std::vector<double> row(alphabet_size, 1.0 / alphabet_size);
    return FiniteMemorySource(Alphabet(alphabet_size), 0, {}, std::move(row));
}

double FiniteMemorySource::initial_block_prob(std::uint64_t packed_block) const {
    if (initial_.empty()) return 1.0 / double(context_count_);
    return initial_[packed_block];
}

double FiniteMemorySource::initial_prefix_prob(std::span<const Symbol> prefix) const {
    const std::uint32_t n = alphabet_.size();
    if (prefix.size() >= order_) throw std::invalid_argument("prefix not shorter than order");
    if (initial_.empty()) {
        double p = 1.0;
        for (std::size_t i = 0; i < prefix.size(); ++i) p /= n;
        return p;
    }
    // Sum the initial table over every completion of the prefix.
    std::uint64_t suffix_count = 1;
    for (std::uint32_t i = std::uint32_t(prefix.size()); i < order_; ++i) suffix_count *= n;
    std::uint64_t base = pack_word(prefix, n) * suffix_count;
    double p = 0.0;
    for (std::uint64_t s = 0; s < suffix_count; ++s) p += initial_[base + s];
    return p;
}

std::string FiniteMemorySource::context_name(std::uint64_t context) const {
    auto word = unpack_word(context, alphabet_.size(), order_);
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (alphabet_.size() <= 10) {
            out += char('0' + word[i]);
        } else {
            if (i) out += ',';
            out += std::to_string(word[i]);
        }
    }
    return out;
}

std::vector<double> FiniteMemorySource::stationary_contexts() const {
    const std::uint32_t n = alphabet_.size();
    const std::uint64_t m = context_count_;
    std::vector<double> p(m, 1.0 / double(m)), next(m);
    if (order_ == 0) return p;
    for (int iter = 0; iter < kStationaryMaxIters; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::uint64_t c = 0; c < m; ++c) {
            if (p[c] == 0.0) continue;
            // context c followed by a shifts to ((c mod n^(s-1)) * n + a)
            std::uint64_t shifted = (c % (m / n)) * n;
            for (Symbol a = 0; a < n; ++a)
                next[shifted + a] += p[c] * transition(c, a);
        }
        double diff = 0.0;
        for (std::uint64_t c = 0; c < m; ++c) diff += std::abs(next[c] - p[c]);
        p.swap(next);
        if (diff <= kStationaryTolerance) return p;
    }
    throw std::runtime_error(
        "stationary distribution did not converge; transition table is not ergodic");
}

double neg_log_prob(const FiniteMemorySource& source, const SampleSequence& x) {
    if (!(x.alphabet() == source.alphabet()))
        throw std::invalid_argument("sample alphabet does not match source alphabet");
    const std::uint32_t n = source.alphabet().size();
    const std::uint32_t s = source.order();
    const auto sym = x.symbols();
    const std::size_t t = sym.size();

    double bits = 0.0;
    if (t < s) {
        double p = source.initial_prefix_prob(sym);
        return p > 0.0 ? -std::log2(p) : kInfiniteBits;
    }
    if (s > 0) {
        double p = source.initial_block_prob(pack_word(sym.subspan(0, s), n));
        if (p <= 0.0) return kInfiniteBits;
        bits -= std::log2(p);
    }
    std::uint64_t context = s > 0 ? pack_word(sym.subspan(0, s), n) : 0;
    const std::uint64_t context_mod = s > 0 ? source.context_count() / n : 1;
    for (std::size_t i = s; i < t; ++i) {
        double p = source.transition(context, sym[i]);
        if (p <= 0.0) return kInfiniteBits;
        bits -= std::log2(p);
        if (s > 0) context = (context % context_mod) * n + sym[i];
    }
    return bits;
}

double source_entropy_rate(const FiniteMemorySource& source, std::uint32_t k) {
    const std::uint32_t n = source.alphabet().size();
    const std::uint32_t s = source.order();

    // Stationary law over blocks of length m = max(k, s), built by extending
    // the stationary context distribution with transition factors.
    const std::uint32_t m = std::max(k, s);
    checked_pow(n, m + 1, std::uint64_t(1) << 26, "entropy rate");
    std::vector<double> block = source.stationary_contexts(); // over A^s
    std::uint64_t block_len = s;
    std::uint64_t block_size = source.context_count();
    while (block_len < m) {
        std::vector<double> bigger(block_size * n, 0.0);
        for (std::uint64_t w = 0; w < block_size; ++w) {
            // the conditioning context is the last s symbols of w
            std::uint64_t context = w % source.context_count();
            for (Symbol a = 0; a < n; ++a)
                bigger[w * n + a] = block[w] * source.transition(context, a);
        }
        block.swap(bigger);
        block_size *= n;
        ++block_len;
    }

    // h_k = -sum_{v in A^k} p(v) sum_a p(a|v) log2 p(a|v) with p from the
    // stationary law; for k >= s the conditional is the transition row.
    double h = 0.0;
    if (k >= s) {
        for (std::uint64_t v = 0; v < block_size; ++v) {
            if (block[v] == 0.0) continue;
            std::uint64_t context = s > 0 ? v % source.context_count() : 0;
            for (Symbol a = 0; a < n; ++a) {
                double p = source.transition(context, a);
                if (p > 0.0) h -= block[v] * p * std::log2(p);
            }
        }
        return h;
    }
    // k < s: marginalize the stationary s-block law to (k+1)-blocks.
    std::uint64_t tail = block_size / checked_pow(n, k + 1, block_size, "entropy rate");
    std::vector<double> joint(checked_pow(n, k + 1, std::uint64_t(1) << 26, "entropy rate"), 0.0);
    for (std::uint64_t w = 0; w < block_size; ++w) joint[w / tail] += block[w];
    std::vector<double> ctx(joint.size() / n, 0.0);
    for (std::uint64_t va = 0; va < joint.size(); ++va) ctx[va / n] += joint[va];
    for (std::uint64_t va = 0; va < joint.size(); ++va)
        if (joint[va] > 0.0) h -= joint[va] * std::log2(joint[va] / ctx[va / n]);
    return h;
}

std::uint64_t pack_word(std::span<const Symbol> word, std::uint32_t n) {
    std::uint64_t v = 0;
    for (Symbol s : word) {
        if (v > (std::numeric_limits<std::uint64_t>::max() - s) / n)
            throw std::invalid_argument("word too long to pack");
        v = v * n + s;
    }
    return v;
}

std::vector<Symbol> unpack_word(std::uint64_t packed, std::uint32_t n, std::uint32_t length) {
    std::vector<Symbol> word(length);
    for (std::uint32_t i = length; i-- > 0;) {
        word[i] = Symbol(packed % n);
        packed /= n;
    }
    return word;
}

namespace {

std::vector<Symbol> parse_context_key(const std::string& key, std::uint32_t n,
                                      std::uint32_t order) {
    std::vector<Symbol> word;
    if (key.find(',') != std::string::npos || n > 10) {
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) word.push_back(Symbol(std::stoul(part)));
    } else {
        for (char c : key) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad context key \"" + key + "\"");
            word.push_back(Symbol(c - '0'));
        }
    }
    if (word.size() != order)
        throw std::invalid_argument("context key \"" + key + "\" has length " +
                                    std::to_string(word.size()) + ", expected " +
                                    std::to_string(order));
    for (Symbol s : word)
        if (s >= n) throw std::invalid_argument("context key \"" + key + "\" out of range");
    return word;
}

} // namespace

FiniteMemorySource load_source_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::uint32_t n = j.at("alphabet_size").get<std::uint32_t>();
    std::uint32_t order = j.at("order").get<std::uint32_t>();

    std::vector<double> initial;
    if (j.contains("initial") && !j["initial"].is_string())
        initial = j["initial"].get<std::vector<double>>();
    else if (j.contains("initial") && j["initial"].get<std::string>() != "uniform")
        throw std::invalid_argument("initial must be \"uniform\" or an array");

    std::uint64_t contexts = 1;
    for (std::uint32_t i = 0; i < order; ++i) contexts *= n;
    std::vector<double> transitions(contexts * n, -1.0);
    const auto& tj = j.at("transitions");
    if (!tj.is_object()) throw std::invalid_argument("transitions must be an object");
    for (auto it = tj.begin(); it != tj.end(); ++it) {
        auto word = parse_context_key(it.key(), n, order);
        auto row = it.value().get<std::vector<double>>();
        if (row.size() != n)
            throw std::invalid_argument("transition row for context \"" + it.key() +
                                        "\" has " + std::to_string(row.size()) +
                                        " entries, expected " + std::to_string(n));
        std::uint64_t c = pack_word(word, n);
        std::copy(row.begin(), row.end(), transitions.begin() + std::ptrdiff_t(c * n));
    }
    for (std::uint64_t c = 0; c < contexts; ++c)
        if (transitions[c * n] < 0.0)
            throw std::invalid_argument("transitions missing context index " +
                                        std::to_string(c));

    return FiniteMemorySource(Alphabet(n), order, std::move(initial), std::move(transitions));
}

FiniteMemorySource load_source_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_source_json(ss.str());
}

} // namespace cbst
