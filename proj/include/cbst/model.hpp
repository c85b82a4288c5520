#ifndef CBST_MODEL_HPP
#define CBST_MODEL_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace cbst {

using Symbol = std::uint32_t;

// Code lengths and log probabilities are measured in bits (log base 2)
// throughout. +infinity marks the impossible event.
constexpr double kInfiniteBits = std::numeric_limits<double>::infinity();

// A finite alphabet; symbols are the integers 0..size-1. Labels are optional
// and cosmetic.
class Alphabet {
public:
    explicit Alphabet(std::uint32_t size, std::vector<std::string> labels = {});

    std::uint32_t size() const { return size_; }
    std::string label(Symbol s) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.size_ == b.size_;
    }

private:
    std::uint32_t size_;
    std::vector<std::string> labels_;
};

// A finite word x_1..x_t over a declared alphabet.
class SampleSequence {
public:
    SampleSequence(Alphabet alphabet, std::vector<Symbol> symbols);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t length() const { return symbols_.size(); }
    std::span<const Symbol> symbols() const { return symbols_; }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

// A Markov source of finite order s over a finite alphabet: an initial
// distribution over length-s contexts plus a conditional row per context.
// Rows are validated to be nonnegative and to sum to 1 within 1e-12.
class FiniteMemorySource {
public:
    // initial: either empty, meaning the uniform distribution over A^s, or a
    // table of n^s probabilities indexed by packed context.
    // transitions: n^s rows of n probabilities, row-major by packed context.
    FiniteMemorySource(Alphabet alphabet, std::uint32_t order,
                       std::vector<double> initial, std::vector<double> transitions);

    static FiniteMemorySource uniform_iid(std::uint32_t alphabet_size);

    const Alphabet& alphabet() const { return alphabet_; }
    std::uint32_t order() const { return order_; }
    std::uint64_t context_count() const { return context_count_; }
    bool uniform_initial() const { return initial_.empty(); }

    // P(a | packed context v), contexts packed oldest-symbol-first.
    double transition(std::uint64_t context, Symbol a) const {
        return transitions_[context * alphabet_.size() + a];
    }

    // Probability of the full initial block w, |w| = order.
    double initial_block_prob(std::uint64_t packed_block) const;

    // Marginal probability of the first |prefix| symbols of the initial
    // block, used for samples shorter than the order.
    double initial_prefix_prob(std::span<const Symbol> prefix) const;

    // Stationary distribution over packed contexts, by power iteration to
    // 1e-12; throws if it fails to converge in the iteration budget.
    std::vector<double> stationary_contexts() const;

    // Label for diagnostics, e.g. "01" or "3,17".
    std::string context_name(std::uint64_t context) const;

private:
    Alphabet alphabet_;
    std::uint32_t order_;
    std::uint64_t context_count_; // n^order
    std::vector<double> initial_;
    std::vector<double> transitions_;
};

// -log2 of the source probability of x, factored as initial block times
// transitions and accumulated in the log domain. A zero-probability step
// yields +infinity rather than an error.
double neg_log_prob(const FiniteMemorySource& source, const SampleSequence& x);

// Order-k conditional Shannon entropy of the stationary law, in bits per
// symbol; equals the entropy rate for k >= order.
double source_entropy_rate(const FiniteMemorySource& source, std::uint32_t k);

// Packing helpers for words over an alphabet of size n, leftmost symbol most
// significant. Word length is limited so the packed value fits in 64 bits.
std::uint64_t pack_word(std::span<const Symbol> word, std::uint32_t n);
std::vector<Symbol> unpack_word(std::uint64_t packed, std::uint32_t n, std::uint32_t length);

// Source description files: JSON with fields alphabet_size, order, initial
// ("uniform" or an array of n^order probabilities) and transitions (object
// mapping context strings to rows of n probabilities). Context keys are
// digit strings for n <= 10 ("01"), comma-separated integers otherwise.
// The name "uniform-iid" with a declared alphabet size is accepted anywhere
// a file path is.
FiniteMemorySource load_source_json(const std::string& json_text);
FiniteMemorySource load_source_file(const std::string& path);

} // namespace cbst

#endif // CBST_MODEL_HPP
