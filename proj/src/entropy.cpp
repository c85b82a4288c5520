#include "cbst/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace cbst {

ContextCounts::ContextCounts(const SampleSequence& x, std::uint32_t k) : k_(k) {
    const std::uint32_t n = x.alphabet().size();
    const std::size_t t = x.length();
    if (k >= t) throw std::invalid_argument("context order must be smaller than the length");
    windows_ = std::uint64_t(t) - k;

    // overflow guard for packed (k+1)-grams
    (void)pack_word(std::vector<Symbol>(k + 1, n - 1), n);

    const auto sym = x.symbols();
    std::uint64_t gram = pack_word(sym.subspan(0, k), n);
    std::uint64_t gram_mod = 1;
    for (std::uint32_t i = 0; i < k; ++i) gram_mod *= n;
    for (std::size_t i = k; i < t; ++i) {
        gram = (gram % gram_mod) * n + sym[i]; // rolls to pack(x[i-k..i])
        ++counts_[gram];
        ++totals_[gram / n];
    }
}

std::uint64_t ContextCounts::total(std::uint64_t context) const {
    auto it = totals_.find(context);
    return it == totals_.end() ? 0 : it->second;
}

std::uint64_t count_occurrences(const SampleSequence& x, std::span<const Symbol> v) {
    if (v.empty()) return x.length() + 1;
    if (v.size() > x.length()) return 0;
    const auto sym = x.symbols();
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i + v.size() <= sym.size(); ++i) {
        bool match = true;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (sym[i + j] != v[j]) {
                match = false;
                break;
            }
        if (match) ++hits;
    }
    return hits;
}

double empirical_entropy(const SampleSequence& x, std::uint32_t k) {
    ContextCounts cc(x, k);
    double sum = 0.0;
    for (const auto& [gram, nu] : cc.counts()) {
        std::uint64_t nubar = cc.total(gram / x.alphabet().size());
        double ratio = double(nu) / double(nubar);
        sum -= double(nu) * std::log2(ratio);
    }
    return sum / double(cc.window_count());
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw std::invalid_argument("distributions have different sizes");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return kInfiniteBits;
        sum += p[i] * std::log2(p[i] / q[i]);
    }
    return sum < 0.0 ? 0.0 : sum; // clamp float noise on the p = q case
}

} // namespace cbst
