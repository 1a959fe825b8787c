#pragma once

#include "lzbg/errors.hpp"
#include "lzbg/factor.hpp"
#include "lzbg/space.hpp"
#include "lzbg/text.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace lzbg {

/// Longest common prefix of suffixes i and j (0 when j = 0), by direct comparison.
inline word_t lcp_from(const Text& t, word_t i, word_t j) {
    if (j == 0) return 0;
    const std::size_t n = t.size();
    const std::uint8_t* s = t.bytes().data();
    word_t l = 0;
    while (i + l <= n && j + l <= n && s[i + l - 1] == s[j + l - 1]) ++l;
    return l;
}

/// Work done by a parse: lcp_from calls and symbols matched across them.
struct ParseCost {
    word_t lcp_calls = 0;
    word_t matched = 0;
    word_t factors = 0;

    /// The quantity bounded by 2n + #factors.
    word_t work() const { return matched + factors; }
};

struct PsvNsv {
    word_t psv = 0;
    word_t nsv = 0;
};

/// Greedy parser fed with (i, psv, nsv) for i = 1..n in order. Only factor starts
/// are examined; other positions are skipped. The longer of the two candidates wins,
/// NSV on ties; a copy of a single symbol points at that symbol's first occurrence.
class FactorParser {
public:
    FactorParser(const Text& text, std::vector<Factor>& out) : text_(text), out_(out) {}

    void feed(word_t i, word_t psv, word_t nsv) {
        if (i != next_) return;
        const word_t l_nsv = lcp_from(text_, i, nsv);
        const word_t l_psv = lcp_from(text_, i, psv);
        cost_.lcp_calls += 2;
        cost_.matched += l_nsv + l_psv;
        ++cost_.factors;
        Factor f;
        const std::uint8_t c = text_[i];
        if (l_nsv > 0 && l_nsv >= l_psv)
            f = Factor::copy(l_nsv, nsv);
        else if (l_psv > 0)
            f = Factor::copy(l_psv, psv);
        else
            f = Factor::literal(c);
        if (f.length == 1)
            f.payload = first_[c];
        else if (f.is_literal())
            first_[c] = i;
        {
            Uncounted output;
            out_.push_back(f);
        }
        next_ = i + f.span();
    }

    void operator()(word_t i, word_t psv, word_t nsv) { feed(i, psv, nsv); }

    /// Words of the first-occurrence table, for space accounting.
    static constexpr std::size_t kTableWords = kSigma;

    /// Position of the next factor start (n+1 once the text is covered).
    word_t next_start() const { return next_; }
    bool done() const { return next_ > text_.size(); }
    const ParseCost& cost() const { return cost_; }

private:
    Text text_;
    std::vector<Factor>& out_;
    word_t next_ = 1;
    ParseCost cost_;
    std::array<word_t, kSigma> first_{};
};

/// Parse from a pull source: next() yields the pair for the next position
/// (1, 2, ...) or std::nullopt when exhausted. Throws StructureError when the source
/// runs out before position n.
template <class Source>
Factorization parse_with_pairs(const Text& text, Source&& next, ParseCost* cost = nullptr) {
    Factorization f;
    f.n = text.size();
    FactorParser parser(text, f.factors);
    for (word_t i = 1; i <= text.size(); ++i) {
        std::optional<PsvNsv> p = next();
        if (!p)
            throw StructureError("parse_with_pairs: pair source exhausted at position " +
                                 std::to_string(i));
        parser.feed(i, p->psv, p->nsv);
    }
    if (cost) *cost = parser.cost();
    return f;
}

enum class Variant { BGoneT, BGoneSA, BGtwo, Kkp3Ref };

inline constexpr std::array<Variant, 4> kAllVariants = {Variant::BGoneT, Variant::BGoneSA,
                                                        Variant::BGtwo, Variant::Kkp3Ref};

/// CLI spelling: bgone-t, bgone-sa, bgtwo, kkp3-ref.
std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
/// Integer arrays of length ~n the variant keeps alive at its peak.
int array_count(Variant v);

struct PipelineStats {
    double t_sa_ms = 0;    // suffix sorting (LMS sort for bgone-t, full SA otherwise)
    double t_phi_ms = 0;
    double t_nsv_ms = 0;   // NSV, or PSV/NSV for kkp3-ref
    double t_parse_ms = 0; // NSV->Φ rewrite with the interleaved parse
    double t_total_ms = 0;
    SpaceReport space;
    ParseCost cost;
};

/// LZ77 factorization of text by the chosen pipeline. All variants return the same
/// factors. With stats, phases are timed and, when the allocation probe is linked,
/// measured for space.
Factorization factorize(const Text& text, Variant variant, PipelineStats* stats = nullptr);

} // namespace lzbg
