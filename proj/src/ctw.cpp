#include "cbst/ctw.hpp"

#include <cmath>
#include <deque>

#include "cbst/arith.hpp"

namespace cbst {

namespace {

// log2(2^a + 2^b), stable for widely separated magnitudes
double log2_add_exp2(double a, double b) {
    double hi = a > b ? a : b;
    double lo = a > b ? b : a;
    if (hi - lo > 80.0) return hi;
    return hi + std::log2(1.0 + std::exp2(lo - hi));
}

struct CtwNode {
    std::vector<std::uint32_t> counts; // per-symbol KT counts at this context
    std::vector<std::uint32_t> child;  // node ids, 0 = absent; empty at max depth
    std::uint64_t total = 0;
    double log_pe = 0.0;           // log2 KT block probability at this node
    double log_pw = 0.0;           // log2 weighted block probability
    double sum_child_logpw = 0.0;  // sum over children of log_pw
};

// The sequential CTW model shared by encoder and decoder. Both sides drive
// it with the same symbols, so the floating point trajectories match and the
// quantized frequencies agree bit for bit.
class CtwModel {
public:
    CtwModel(std::uint32_t n, std::uint32_t depth)
        : n_(n),
          depth_(depth),
          quant_total_(n <= 64 ? (std::uint64_t(1) << 20) : (std::uint64_t(1) << 24)),
          history_(depth, 0),
          path_(depth + 1),
          cond_(depth + 1, std::vector<double>(n)),
          freq_(n) {
        nodes_.emplace_back(); // sentinel so that id 0 means "absent"
        nodes_.emplace_back();
        init_node(1, 0);
    }

    std::uint64_t quant_total() const { return quant_total_; }

    // Quantized cumulative frequencies for the next symbol given the current
    // history: freq[a] >= 1, sum = quant_total().
    const std::vector<std::uint64_t>& next_frequencies() {
        walk_path();
        // conditional vectors bottom-up: leaf uses raw KT, inner nodes mix
        for (std::uint32_t d = depth_ + 1; d-- > 0;) {
            const CtwNode& node = nodes_[path_[d]];
            std::vector<double>& cond = cond_[d];
            double total = double(2 * node.total + n_);
            if (d == depth_) {
                for (Symbol a = 0; a < n_; ++a)
                    cond[a] = (2.0 * node.counts[a] + 1.0) / total;
            } else {
                double w = std::exp2(-1.0 + node.log_pe - node.log_pw);
                if (w > 1.0) w = 1.0;
                const std::vector<double>& below = cond_[d + 1];
                for (Symbol a = 0; a < n_; ++a) {
                    double kt = (2.0 * node.counts[a] + 1.0) / total;
                    cond[a] = w * kt + (1.0 - w) * below[a];
                }
            }
        }
        quantize(cond_[0]);
        return freq_;
    }

    // Folds the coded symbol into every node on the current path; bootstrap
    // symbols (record = false) only enter the history.
    void update(Symbol a, bool record) {
        if (record) {
            double child_delta = 0.0;
            for (std::uint32_t d = depth_ + 1; d-- > 0;) {
                CtwNode& node = nodes_[path_[d]];
                double total = double(2 * node.total + n_);
                node.log_pe += std::log2((2.0 * node.counts[a] + 1.0) / total);
                ++node.counts[a];
                ++node.total;
                double old_pw = node.log_pw;
                if (d == depth_) {
                    node.log_pw = node.log_pe;
                } else {
                    node.sum_child_logpw += child_delta;
                    node.log_pw = -1.0 + log2_add_exp2(node.log_pe, node.sum_child_logpw);
                }
                child_delta = node.log_pw - old_pw;
            }
        }
        if (depth_ > 0) {
            for (std::uint32_t i = depth_ - 1; i > 0; --i) history_[i] = history_[i - 1];
            history_[0] = a;
        }
    }

private:
    void init_node(std::uint32_t id, std::uint32_t depth) {
        nodes_[id].counts.assign(n_, 0);
        if (depth < depth_) nodes_[id].child.assign(n_, 0);
    }

    // Path from the root along the current context, most recent symbol
    // first; creates missing nodes.
    void walk_path() {
        path_[0] = 1;
        for (std::uint32_t d = 0; d < depth_; ++d) {
            Symbol edge = history_[d];
            std::uint32_t next = nodes_[path_[d]].child[edge];
            if (next == 0) {
                next = std::uint32_t(nodes_.size());
                nodes_.emplace_back();
                init_node(next, d + 1);
                nodes_[path_[d]].child[edge] = next;
            }
            path_[d + 1] = next;
        }
    }

    // Largest-remainder-free deterministic quantization: every symbol gets
    // at least 1, the floor of its share of (total - n), and the slack goes
    // to the most probable symbol (lowest index on ties).
    void quantize(const std::vector<double>& cond) {
        const std::uint64_t spread = quant_total_ - n_;
        std::uint64_t used = 0;
        Symbol argmax = 0;
        double best = -1.0;
        for (Symbol a = 0; a < n_; ++a) {
            double c = cond[a];
            if (!(c > 0.0)) c = 0.0;
            std::uint64_t f = 1 + std::uint64_t(c * double(spread));
            freq_[a] = f;
            used += f;
            if (c > best) {
                best = c;
                argmax = a;
            }
        }
        freq_[argmax] += quant_total_ - used;
    }

    std::uint32_t n_;
    std::uint32_t depth_;
    std::uint64_t quant_total_;
    std::deque<CtwNode> nodes_;
    std::vector<Symbol> history_;
    std::vector<std::uint32_t> path_;
    std::vector<std::vector<double>> cond_;
    std::vector<std::uint64_t> freq_;
};

} // namespace

CtwCodec::CtwCodec(Alphabet alphabet, std::uint32_t depth)
    : Codec(std::move(alphabet)), depth_(depth) {}

std::string CtwCodec::name() const { return "ctw:d=" + std::to_string(depth_); }

std::uint64_t CtwCodec::coded_bits(const SampleSequence& x, BitWriter& out) const {
    const std::uint32_t n = alphabet().size();
    if (x.length() == 0) return 0;

    ArithEncoder enc(out);
    CtwModel model(n, depth_);
    const std::uint64_t start = out.bit_count();

    for (std::size_t i = 0; i < x.length(); ++i) {
        Symbol a = x[i];
        if (i < depth_) {
            enc.encode(a, a + 1, n);
        } else {
            const auto& freq = model.next_frequencies();
            std::uint64_t lo = 0;
            for (Symbol b = 0; b < a; ++b) lo += freq[b];
            enc.encode(lo, lo + freq[a], model.quant_total());
        }
        model.update(a, i >= depth_);
    }
    enc.finish();
    return out.bit_count() - start;
}

std::uint64_t CtwCodec::payload_bits(const SampleSequence& x) const {
    BitWriter counter(false);
    std::uint64_t coded = coded_bits(x, counter);
    return std::uint64_t(gamma_length(coded + 1)) + coded;
}

void CtwCodec::write_payload(const SampleSequence& x, BitWriter& out) const {
    if (!out.materializing()) {
        BitWriter counter(false);
        std::uint64_t coded = coded_bits(x, counter);
        out.put_gamma(coded + 1);
        out.advance(coded);
        return;
    }
    BitWriter body;
    coded_bits(x, body);
    Codeword coded = body.take();
    out.put_gamma(coded.bit_count + 1);
    out.append(coded);
}

void CtwCodec::read_payload(BitReader& in, std::uint64_t t,
                            std::vector<Symbol>& out) const {
    const std::uint32_t n = alphabet().size();
    std::uint64_t coded = in.get_gamma() - 1;
    if (t == 0) {
        in.seek(in.pos() + coded);
        return;
    }
    ArithDecoder dec(in, coded);
    CtwModel model(n, depth_);

    for (std::uint64_t i = 0; i < t; ++i) {
        Symbol a;
        if (i < depth_) {
            a = Symbol(dec.decode_target(n));
            dec.consume(a, a + 1, n);
        } else {
            const auto& freq = model.next_frequencies();
            std::uint64_t target = dec.decode_target(model.quant_total());
            std::uint64_t lo = 0;
            a = 0;
            while (lo + freq[a] <= target) {
                lo += freq[a];
                ++a;
            }
            dec.consume(lo, lo + freq[a], model.quant_total());
        }
        model.update(a, i >= depth_);
        out.push_back(a);
    }
    dec.finish();
}

} // namespace cbst
