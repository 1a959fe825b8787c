#include "lzbg/codec.hpp"
#include "lzbg/lz_parse.hpp"
#include "lzbg/oracles.hpp"
#include "lzbg/textgen.hpp"
#include "test_corpus.hpp"

#include <gtest/gtest.h>

namespace lzbg {
namespace {

using testing::view;

Factorization example_factors() {
    Factorization f;
    f.n = 20;
    f.factors = {Factor::literal('a'), Factor::literal('b'), Factor::copy(1, 1), Factor::copy(3, 1),
                 Factor::copy(4, 5),   Factor::copy(4, 10),  Factor::copy(1, 2), Factor::copy(5, 5)};
    return f;
}

bool same_lengths(const Factorization& a, const Factorization& b) {
    if (a.n != b.n || a.factors.size() != b.factors.size()) return false;
    for (std::size_t k = 0; k < a.factors.size(); ++k)
        if (a.factors[k].length != b.factors[k].length) return false;
    return true;
}

void expect_valid(const std::string& s, const Factorization& f) {
    const auto b = oracle::bytes_of(s);
    word_t pos = 1;
    for (const Factor& x : f.factors) {
        if (x.is_literal()) {
            ASSERT_EQ(x.symbol(), b[pos - 1]);
        } else {
            ASSERT_GE(x.source(), 1u);
            ASSERT_LT(x.source(), pos);
            for (word_t l = 0; l < x.length; ++l) ASSERT_EQ(b[x.source() + l - 1], b[pos + l - 1]);
        }
        pos += x.span();
    }
    ASSERT_EQ(pos, s.size() + 1);
}

TEST(LcpFrom, ExampleFactors) {
    const Text t = view(testing::kExample);
    EXPECT_EQ(lcp_from(t, 11, 10), 4u);
    EXPECT_EQ(lcp_from(t, 16, 5), 5u);
    EXPECT_EQ(lcp_from(t, 3, 0), 0u);
    EXPECT_EQ(lcp_from(t, 1, 1), 20u);
}

TEST(ParseWithPairs, ExampleFromOraclePairs) {
    const auto pairs = oracle::naive_psv_nsv(oracle::bytes_of(testing::kExample));
    word_t i = 0;
    const Factorization f = parse_with_pairs(view(testing::kExample), [&]() -> std::optional<PsvNsv> {
        ++i;
        return PsvNsv{pairs.psv[i], pairs.nsv[i]};
    });
    EXPECT_EQ(f, example_factors());
}

TEST(ParseWithPairs, SingleSymbol) {
    const Factorization f = parse_with_pairs(view("a"), [] { return std::optional<PsvNsv>(PsvNsv{}); });
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0], Factor::literal('a'));
}

TEST(ParseWithPairs, OverlappingSelfCopy) {
    EXPECT_EQ(factorize(view("aaaa"), Variant::BGoneT).factors,
              (std::vector<Factor>{Factor::literal('a'), Factor::copy(3, 1)}));
}

TEST(ParseWithPairs, TiePrefersNsv) {
    std::vector<Factor> out;
    const std::string s = "abxabyab";
    FactorParser p(view(s), out);
    p.feed(1, 0, 0);
    p.feed(2, 0, 0);
    p.feed(3, 0, 0);
    p.feed(4, 1, 0);
    p.feed(5, 0, 0);
    p.feed(6, 0, 0);
    p.feed(7, 1, 4);
    EXPECT_TRUE(p.done());
    EXPECT_EQ(out, (std::vector<Factor>{Factor::literal('a'), Factor::literal('b'), Factor::literal('x'),
                                        Factor::copy(2, 1), Factor::literal('y'), Factor::copy(2, 4)}));
}

TEST(ParseWithPairs, SingleSymbolCopyPointsAtFirstOccurrence) {
    std::vector<Factor> out;
    const std::string s = "bxbyb";
    FactorParser p(view(s), out);
    p.feed(1, 0, 0);
    p.feed(2, 0, 0);
    p.feed(3, 1, 0);
    p.feed(4, 0, 0);
    p.feed(5, 3, 0);
    EXPECT_EQ(out.back(), Factor::copy(1, 1));
}

TEST(ParseWithPairs, ExhaustedSourceIsStructuralError) {
    int calls = 0;
    EXPECT_THROW(parse_with_pairs(view("abc"),
                                  [&]() -> std::optional<PsvNsv> {
                                      if (calls++ == 1) return std::nullopt;
                                      return PsvNsv{};
                                  }),
                 StructureError);
}

TEST(Factorize, ExampleEveryVariant) {
    for (Variant v : kAllVariants)
        EXPECT_EQ(factorize(view(testing::kExample), v), example_factors()) << variant_name(v);
}

TEST(Factorize, EmptyText) {
    for (Variant v : kAllVariants) {
        const Factorization f = factorize(Text(), v);
        EXPECT_TRUE(f.factors.empty());
        EXPECT_EQ(f.n, 0u);
    }
}

TEST(Factorize, VariantsAgreeWithEachOtherAndWithBruteForce) {
    auto check = [](const std::string& s) {
        const Factorization ref = factorize(view(s), Variant::BGoneT);
        expect_valid(s, ref);
        ASSERT_TRUE(same_lengths(ref, oracle::naive_factorize(oracle::bytes_of(s))));
        for (Variant v : kAllVariants) ASSERT_EQ(factorize(view(s), v), ref) << variant_name(v);
        const auto decoded = decode_stream(encode_stream(ref));
        ASSERT_EQ(std::string(decoded.begin(), decoded.end()), s);
    };
    for (const auto& s : testing::structured_corpus()) check(s);
    for (unsigned sigma : testing::kSigmas)
        for (const auto& s : testing::random_corpus(sigma, 100, 2000, 61)) check(s);
}

TEST(Factorize, ParseWorkIsLinear) {
    for (const std::string& s : {textgen::random_text(200000, 4, 62), textgen::repetitive_text(200000, 63),
                                 textgen::english_like_text(200000, 64), std::string(100000, 'a'),
                                 textgen::fibonacci_word(100000)}) {
        for (Variant v : kAllVariants) {
            PipelineStats st;
            const Factorization f = factorize(view(s), v, &st);
            ASSERT_EQ(st.cost.factors, f.factors.size());
            ASSERT_EQ(st.cost.lcp_calls, 2 * f.factors.size());
            ASSERT_LE(st.cost.work(), 2 * s.size() + f.factors.size()) << variant_name(v);
        }
    }
}

TEST(Factorize, StatsReportPhaseTimes) {
    const std::string s = textgen::random_text(50000, 26, 65);
    PipelineStats st;
    factorize(view(s), Variant::BGoneSA, &st);
    EXPECT_GT(st.t_total_ms, 0.0);
    EXPECT_LE(st.t_sa_ms + st.t_phi_ms + st.t_nsv_ms + st.t_parse_ms, st.t_total_ms * 1.01 + 0.01);
}

TEST(Variants, NamesAndArrayCounts) {
    const std::array<int, 4> counts = {1, 1, 2, 3};
    const std::array<const char*, 4> names = {"bgone-t", "bgone-sa", "bgtwo", "kkp3-ref"};
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(array_count(kAllVariants[k]), counts[k]);
        EXPECT_EQ(variant_name(kAllVariants[k]), names[k]);
        EXPECT_EQ(parse_variant(names[k]), kAllVariants[k]);
    }
    EXPECT_FALSE(parse_variant("kkp2").has_value());
}

} // namespace
} // namespace lzbg
