#ifndef CBST_BITIO_HPP
#define CBST_BITIO_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbst {

// A finished bit string. Bits are packed MSB-first: bit i of the stream is
// bit (7 - i%8) of bytes[i/8].
struct Codeword {
    std::vector<std::uint8_t> bytes;
    std::uint64_t bit_count = 0;

    bool bit(std::uint64_t i) const {
        return (bytes[i >> 3] >> (7 - (i & 7))) & 1u;
    }
};

// Thrown when a bit stream cannot be parsed back into messages.
class DecodeError : public std::runtime_error {
public:
    DecodeError(const std::string& what, std::uint64_t bit_offset)
        : std::runtime_error(what + " (bit offset " + std::to_string(bit_offset) + ")"),
          bit_offset_(bit_offset) {}

    std::uint64_t bit_offset() const { return bit_offset_; }

private:
    std::uint64_t bit_offset_;
};

// Append-only bit sink. In counting mode no bytes are stored, only the exact
// length is tracked; encoders use this as the fast path for length queries.
class BitWriter {
public:
    explicit BitWriter(bool materialize = true) : materialize_(materialize) {}

    void put_bit(bool b) {
        if (materialize_) {
            if ((bits_ & 7) == 0) bytes_.push_back(0);
            if (b) bytes_.back() |= std::uint8_t(1u << (7 - (bits_ & 7)));
        }
        ++bits_;
    }

    // MSB-first fixed width field; width 0 writes nothing.
    void put_bits(std::uint64_t value, int width) {
        if (!materialize_) {
            bits_ += std::uint64_t(width);
            return;
        }
        for (int i = width - 1; i >= 0; --i) put_bit((value >> i) & 1u);
    }

    // Elias gamma code for v >= 1.
    void put_gamma(std::uint64_t v) {
        int n = std::bit_width(v) - 1;
        if (!materialize_) {
            bits_ += std::uint64_t(2 * n + 1);
            return;
        }
        for (int i = 0; i < n; ++i) put_bit(false);
        put_bits(v, n + 1);
    }

    void append(const Codeword& w) {
        if (!materialize_) {
            bits_ += w.bit_count;
            return;
        }
        for (std::uint64_t i = 0; i < w.bit_count; ++i) put_bit(w.bit(i));
    }

    // counting mode only: account for bits without producing them
    void advance(std::uint64_t n) {
        if (materialize_) throw std::logic_error("advance on a materializing writer");
        bits_ += n;
    }

    bool materializing() const { return materialize_; }
    std::uint64_t bit_count() const { return bits_; }

    Codeword take() {
        Codeword w{std::move(bytes_), bits_};
        bytes_ = {};
        bits_ = 0;
        return w;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t bits_ = 0;
    bool materialize_;
};

// Cursor over a packed bit string. Reading past the end throws DecodeError.
class BitReader {
public:
    BitReader(const std::uint8_t* data, std::uint64_t bit_count)
        : data_(data), size_(bit_count) {}

    explicit BitReader(const Codeword& w) : BitReader(w.bytes.data(), w.bit_count) {}

    bool get_bit() {
        if (pos_ >= size_) throw DecodeError("bit stream truncated", pos_);
        bool b = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return b;
    }

    std::uint64_t get_bits(int width) {
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | std::uint64_t(get_bit());
        return v;
    }

    std::uint64_t get_gamma() {
        int n = 0;
        while (!get_bit()) {
            if (++n > 63) throw DecodeError("malformed gamma code", pos_);
        }
        std::uint64_t v = 1;
        for (int i = 0; i < n; ++i) v = (v << 1) | std::uint64_t(get_bit());
        return v;
    }

    std::uint64_t pos() const { return pos_; }
    std::uint64_t remaining() const { return size_ - pos_; }

    void seek(std::uint64_t bit_pos) {
        if (bit_pos > size_) throw DecodeError("seek past end of stream", bit_pos);
        pos_ = bit_pos;
    }

private:
    const std::uint8_t* data_;
    std::uint64_t size_;
    std::uint64_t pos_ = 0;
};

inline int gamma_length(std::uint64_t v) { return 2 * (std::bit_width(v) - 1) + 1; }

} // namespace cbst

#endif // CBST_BITIO_HPP
