#include "cbst/lz78.hpp"

#include <bit>
#include <unordered_map>

namespace cbst {

namespace {

int ceil_log2(std::uint64_t x) { // bits needed to address x distinct values
    return x <= 1 ? 0 : std::bit_width(x - 1);
}

} // namespace

void Lz78Codec::write_payload(const SampleSequence& x, BitWriter& out) const {
    const std::uint32_t n = alphabet().size();
    const int symbol_bits = ceil_log2(n);

    // trie edges: (node id, symbol) -> node id; entry 0 is the empty phrase
    std::unordered_map<std::uint64_t, std::uint32_t> edges;
    std::uint64_t entries = 1;
    std::uint32_t node = 0;

    for (std::size_t i = 0; i < x.length(); ++i) {
        std::uint64_t key = std::uint64_t(node) * n + x[i];
        auto it = edges.find(key);
        if (it != edges.end()) {
            node = it->second;
            continue;
        }
        out.put_bits(node, ceil_log2(entries));
        out.put_bits(x[i], symbol_bits);
        edges.emplace(key, std::uint32_t(entries));
        ++entries;
        node = 0;
    }
    if (node != 0) out.put_bits(node, ceil_log2(entries)); // partial final phrase
}

void Lz78Codec::read_payload(BitReader& in, std::uint64_t t,
                             std::vector<Symbol>& out) const {
    const std::uint32_t n = alphabet().size();
    const int symbol_bits = ceil_log2(n);

    // dictionary as (parent, symbol, length); entry 0 is the empty phrase
    std::vector<std::uint32_t> parent{0};
    std::vector<Symbol> last{0};
    std::vector<std::uint64_t> length{0};

    std::vector<Symbol> scratch;
    while (out.size() < t) {
        std::uint64_t index = in.get_bits(ceil_log2(parent.size()));
        if (index >= parent.size())
            throw DecodeError("lz78 phrase index out of range", in.pos());

        bool partial = out.size() + length[index] == t;
        if (!partial && out.size() + length[index] > t)
            throw DecodeError("lz78 phrase overruns declared length", in.pos());

        Symbol sym = 0;
        if (!partial) {
            std::uint64_t raw = in.get_bits(symbol_bits);
            if (raw >= n) throw DecodeError("lz78 literal out of range", in.pos());
            sym = Symbol(raw);
        }

        // materialize the referenced phrase back-to-front
        scratch.clear();
        for (std::uint64_t p = index; p != 0; p = parent[p]) scratch.push_back(last[p]);
        out.insert(out.end(), scratch.rbegin(), scratch.rend());
        if (partial) break;
        out.push_back(sym);

        parent.push_back(std::uint32_t(index));
        last.push_back(sym);
        length.push_back(length[index] + 1);
    }
}

} // namespace cbst
