#include "lzbg/codec.hpp"

#include "lzbg/errors.hpp"

#include <array>
#include <string>

namespace lzbg {

namespace {

constexpr std::array<std::uint8_t, 5> kMagic = {'L', 'Z', 'B', 'G', 0x01};
constexpr std::size_t kHeaderSize = kMagic.size() + 16;

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_uleb(std::vector<std::uint8_t>& out, std::uint64_t v) {
    do {
        std::uint8_t b = v & 0x7f;
        v >>= 7;
        if (v != 0) b |= 0x80;
        out.push_back(b);
    } while (v != 0);
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> s) : s_(s) {}

    bool at_end() const { return pos_ == s_.size(); }

    std::uint8_t byte() {
        if (pos_ >= s_.size()) throw FormatError("LZBG1: truncated stream");
        return s_[pos_++];
    }

    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(byte()) << (8 * i);
        return v;
    }

    std::uint64_t uleb() {
        std::uint64_t v = 0;
        for (int shift = 0;; shift += 7) {
            const std::uint8_t b = byte();
            if (shift == 63 && (b & 0x7e) != 0) throw FormatError("LZBG1: varint overflow");
            if (shift > 63) throw FormatError("LZBG1: varint too long");
            v |= std::uint64_t(b & 0x7f) << shift;
            if ((b & 0x80) == 0) return v;
        }
    }

private:
    std::span<const std::uint8_t> s_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<std::uint8_t> encode_stream(const Factorization& f) {
    std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
    out.reserve(kHeaderSize + 3 * f.factors.size());
    put_u64(out, f.n);
    put_u64(out, f.factors.size());
    for (const Factor& x : f.factors) {
        put_uleb(out, x.length);
        if (x.is_literal())
            out.push_back(x.symbol());
        else
            put_uleb(out, x.source());
    }
    return out;
}

Factorization parse_stream(std::span<const std::uint8_t> stream) {
    Reader in(stream);
    for (std::uint8_t m : kMagic)
        if (in.byte() != m) throw FormatError("LZBG1: bad magic or version");
    Factorization f;
    f.n = in.u64();
    const std::uint64_t count = in.u64();
    // every factor occupies at least two bytes
    if (count > stream.size()) throw FormatError("LZBG1: truncated stream");
    f.factors.reserve(count);
    word_t written = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
        Factor x;
        x.length = in.uleb();
        if (x.length == 0) {
            x.payload = in.byte();
        } else {
            x.payload = in.uleb();
            if (x.payload == 0 || x.payload > written)
                throw FormatError("LZBG1: factor " + std::to_string(k) + " copies from position " +
                                  std::to_string(x.payload) + " at write position " +
                                  std::to_string(written + 1));
        }
        if (x.span() > f.n - written)
            throw FormatError("LZBG1: factors exceed the declared length " + std::to_string(f.n));
        written += x.span();
        f.factors.push_back(x);
    }
    if (!in.at_end()) throw FormatError("LZBG1: trailing bytes after the last factor");
    if (written != f.n)
        throw FormatError("LZBG1: factors cover " + std::to_string(written) +
                          " bytes, header declares " + std::to_string(f.n));
    return f;
}

std::vector<std::uint8_t> expand(const Factorization& f) {
    std::vector<std::uint8_t> out;
    out.reserve(f.n);
    for (const Factor& x : f.factors) {
        if (x.is_literal()) {
            out.push_back(x.symbol());
            continue;
        }
        if (x.source() == 0 || x.source() > out.size())
            throw FormatError("expand: source " + std::to_string(x.source()) +
                              " not before write position " + std::to_string(out.size() + 1));
        std::size_t from = x.source() - 1;
        for (word_t l = 0; l < x.length; ++l) out.push_back(out[from++]);
    }
    if (out.size() != f.n)
        throw FormatError("expand: factors cover " + std::to_string(out.size()) +
                          " bytes, expected " + std::to_string(f.n));
    return out;
}

std::vector<std::uint8_t> decode_stream(std::span<const std::uint8_t> stream) {
    return expand(parse_stream(stream));
}

} // namespace lzbg
