#ifndef CBST_ENTROPY_HPP
#define CBST_ENTROPY_HPP

#include <cstdint>
#include <unordered_map>

#include "cbst/model.hpp"

namespace cbst {

// Overlapping-window counts of (k+1)-grams: counts[pack(v a)] is the number
// of positions where the word v a occurs in x, and totals(v) sums it over
// the final symbol. Exactly t - k windows exist, so the per-context totals
// sum to t - k. Stored sparsely; observed contexts never exceed t.
class ContextCounts {
public:
    ContextCounts(const SampleSequence& x, std::uint32_t k);

    std::uint32_t order() const { return k_; }
    std::uint64_t window_count() const { return windows_; }
    const std::unordered_map<std::uint64_t, std::uint64_t>& counts() const {
        return counts_;
    }
    // nubar(v) = sum_a nu(va) for a packed context v
    std::uint64_t total(std::uint64_t context) const;

private:
    std::uint32_t k_;
    std::uint64_t windows_;
    std::unordered_map<std::uint64_t, std::uint64_t> counts_;  // over (k+1)-grams
    std::unordered_map<std::uint64_t, std::uint64_t> totals_;  // over k-contexts
};

// Number of (overlapping) occurrences of the word v in x; 0 when v is longer
// than x.
std::uint64_t count_occurrences(const SampleSequence& x, std::span<const Symbol> v);

// Order-k empirical Shannon entropy in bits per symbol, with the conventions
// 0 log 0 = 0 and unseen contexts contributing nothing. Requires k < t.
double empirical_entropy(const SampleSequence& x, std::uint32_t k);

// KL divergence sum_b p(b) log2(p(b)/q(b)); nonnegative, zero iff p = q, and
// +infinity when q(b) = 0 < p(b) for some b.
double kl_divergence(std::span<const double> p, std::span<const double> q);

} // namespace cbst

#endif // CBST_ENTROPY_HPP
