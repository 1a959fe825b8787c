#include "lzbg/text.hpp"

#include <stdexcept>
#include <string>

namespace lzbg {

SuffixType classify_suffix_type(const Text& text, std::size_t i) {
    const std::size_t n = text.size();
    if (i < 1 || i > n + 1)
        throw std::out_of_range("classify_suffix_type: position " + std::to_string(i) +
                                " outside 1.." + std::to_string(n + 1));
    if (i == n + 1) return SuffixType::S;
    std::size_t j = i;
    while (j < n && text[j] == text[j + 1]) ++j;
    // suffix i has the type of suffix j, whose right neighbour differs from it
    if (j == n) return SuffixType::L;
    return text[j] < text[j + 1] ? SuffixType::S : SuffixType::L;
}

std::vector<SuffixType> classify_suffix_types(const Text& text) {
    const std::size_t n = text.size();
    std::vector<SuffixType> types(n + 2, SuffixType::S);
    for (std::size_t i = n; i >= 1; --i) {
        const int c = text[i];
        const int c1 = text.symbol_or_sentinel(i + 1);
        if (c > c1 || (c == c1 && types[i + 1] == SuffixType::L))
            types[i] = SuffixType::L;
    }
    return types;
}

void BucketTable::reset_lists() {
    lbkts.fill(kEmpty);
    lbkte.fill(kEmpty);
    sbkts.fill(kEmpty);
    sbkte.fill(kEmpty);
}

void compute_bucket_bounds(const Text& text, BucketTable& table) {
    const std::size_t n = text.size();
    std::array<word_t, kSigma> count_l{};
    std::array<word_t, kSigma> count_s{};
    bool next_is_s = true; // suffix n+1
    int next = -1;
    for (std::size_t i = n; i >= 1; --i) {
        const int c = text[i];
        const bool is_s = c < next || (c == next && next_is_s);
        (is_s ? count_s : count_l)[c]++;
        next = c;
        next_is_s = is_s;
    }
    word_t start = 1;
    for (std::size_t c = 0; c < kSigma; ++c) {
        table.l_start[c] = start;
        table.l_end[c] = start + count_l[c] - 1;
        table.s_start[c] = start + count_l[c];
        table.s_end[c] = table.s_start[c] + count_s[c] - 1;
        start += count_l[c] + count_s[c];
    }
    table.reset_lists();
}

BucketTable compute_bucket_bounds(const Text& text) {
    BucketTable t;
    compute_bucket_bounds(text, t);
    return t;
}

} // namespace lzbg
