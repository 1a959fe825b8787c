#include "lzbg/codec.hpp"
#include "lzbg/errors.hpp"
#include "lzbg/lz_parse.hpp"
#include "lzbg/textgen.hpp"
#include "test_corpus.hpp"

#include <gtest/gtest.h>

namespace lzbg {
namespace {

using Bytes = std::vector<std::uint8_t>;

Factorization make(word_t n, std::vector<Factor> factors) { return {std::move(factors), n}; }

Bytes body(const Bytes& stream) { return Bytes(stream.begin() + 21, stream.end()); }

std::string as_string(const Bytes& b) { return {b.begin(), b.end()}; }

TEST(Encode, HeaderLayout) {
    const Bytes s = encode_stream(make(258, {}));
    ASSERT_EQ(s.size(), 21u);
    EXPECT_EQ(as_string(Bytes(s.begin(), s.begin() + 4)), "LZBG");
    EXPECT_EQ(s[4], 0x01);
    EXPECT_EQ(s[5], 0x02);
    EXPECT_EQ(s[6], 0x01);
    for (int i = 7; i < 21; ++i) EXPECT_EQ(s[i], 0) << i;
}

TEST(Encode, LiteralRecord) {
    EXPECT_EQ(body(encode_stream(make(1, {Factor::literal('a')}))), (Bytes{0x00, 0x61}));
}

TEST(Encode, CopyRecord) {
    EXPECT_EQ(body(encode_stream(make(4, {Factor::literal('x'), Factor::copy(3, 1)}))),
              (Bytes{0x00, 'x', 0x03, 0x01}));
}

TEST(Encode, MultiByteVarints) {
    const Bytes b = body(encode_stream(make(301, {Factor::literal('q'), Factor::copy(300, 1)})));
    EXPECT_EQ(b, (Bytes{0x00, 'q', 0xAC, 0x02, 0x01}));
}

TEST(Decode, OverlappingSelfCopy) {
    EXPECT_EQ(as_string(decode_stream(encode_stream(make(4, {Factor::literal('a'), Factor::copy(3, 1)})))),
              "aaaa");
}

TEST(Decode, Example) {
    const Factorization f = factorize(testing::view(testing::kExample), Variant::BGoneT);
    const Bytes s = encode_stream(f);
    EXPECT_EQ(parse_stream(s).factors.size(), 8u);
    EXPECT_EQ(as_string(decode_stream(s)), testing::kExample);
}

TEST(Decode, EmptyStream) {
    EXPECT_TRUE(decode_stream(encode_stream(make(0, {}))).empty());
}

TEST(Decode, RejectsCorruptedMagic) {
    Bytes s = encode_stream(make(1, {Factor::literal('a')}));
    s[0] = 'X';
    EXPECT_THROW(decode_stream(s), FormatError);
}

TEST(Decode, RejectsUnknownVersion) {
    Bytes s = encode_stream(make(1, {Factor::literal('a')}));
    s[4] = 2;
    EXPECT_THROW(decode_stream(s), FormatError);
}

TEST(Decode, RejectsTruncation) {
    const Bytes s = encode_stream(factorize(testing::view(testing::kExample), Variant::BGoneT));
    for (std::size_t cut = 0; cut < s.size(); ++cut)
        EXPECT_THROW(decode_stream(std::span(s.data(), cut)), FormatError) << cut;
}

TEST(Decode, RejectsSourceAtOrBeyondWritePosition) {
    EXPECT_THROW(decode_stream(encode_stream(make(3, {Factor::literal('a'), Factor::copy(2, 2)}))),
                 FormatError);
    EXPECT_THROW(decode_stream(encode_stream(make(3, {Factor::literal('a'), Factor::copy(2, 0)}))),
                 FormatError);
}

TEST(Decode, RejectsLengthMismatch) {
    EXPECT_THROW(decode_stream(encode_stream(make(5, {Factor::literal('a'), Factor::copy(3, 1)}))),
                 FormatError);
    EXPECT_THROW(decode_stream(encode_stream(make(3, {Factor::literal('a'), Factor::copy(3, 1)}))),
                 FormatError);
}

TEST(Decode, RejectsTrailingBytes) {
    Bytes s = encode_stream(make(1, {Factor::literal('a')}));
    s.push_back(0);
    EXPECT_THROW(decode_stream(s), FormatError);
}

TEST(Decode, RejectsOverlongVarint) {
    Bytes s = encode_stream(make(1, {}));
    s[13] = 1;
    for (int i = 0; i < 11; ++i) s.push_back(0xFF);
    s.push_back(0x01);
    EXPECT_THROW(decode_stream(s), FormatError);
}

TEST(Codec, RoundTripsEveryVariant) {
    std::vector<std::string> texts = testing::structured_corpus();
    for (unsigned sigma : testing::kSigmas)
        for (auto& s : testing::random_corpus(sigma, 20, 3000, 71)) texts.push_back(std::move(s));
    for (const auto& s : texts)
        for (Variant v : kAllVariants) {
            const Factorization f = factorize(testing::view(s), v);
            const Bytes stream = encode_stream(f);
            ASSERT_EQ(parse_stream(stream), f);
            ASSERT_EQ(as_string(decode_stream(stream)), s);
            ASSERT_EQ(as_string(expand(f)), s);
        }
}

TEST(Codec, StreamsAreDeterministic) {
    const std::string s = textgen::english_like_text(20000, 72);
    const Bytes a = encode_stream(factorize(testing::view(s), Variant::BGoneT));
    for (Variant v : kAllVariants) EXPECT_EQ(encode_stream(factorize(testing::view(s), v)), a);
}

} // namespace
} // namespace lzbg
