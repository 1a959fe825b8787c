#pragma once

// Level-0 induced sorting passes over a 1-based workspace (cells[1..n]) with the
// sentinel suffix n+1 kept virtual.

#include "lzbg/text.hpp"

namespace lzbg::detail {

/// Left-to-right pass: each entry whose predecessor is L-type induces that
/// predecessor at the head of its L-interval. Seeded with suffix n.
inline void induce_l(const Text& t, word_t* cells, const BucketTable& tab) {
    const std::size_t n = t.size();
    if (n == 0) return;
    std::array<word_t, kSigma> cur = tab.l_start;
    cells[cur[t[n]]++] = n;
    for (std::size_t i = 1; i <= n; ++i) {
        const word_t j = cells[i];
        if (j == kEmpty || j <= 1) continue;
        const std::uint8_t c = t[j - 1];
        const std::uint8_t c1 = t[j];
        if (c > c1 || (c == c1 && i < tab.s_start[c1])) cells[cur[c]++] = j - 1;
    }
}

/// Right-to-left pass: each entry whose predecessor is S-type induces that
/// predecessor at the tail of its S-interval.
inline void induce_s(const Text& t, word_t* cells, const BucketTable& tab) {
    const std::size_t n = t.size();
    std::array<word_t, kSigma> cur = tab.s_end;
    for (std::size_t i = n; i >= 1; --i) {
        const word_t j = cells[i];
        if (j == kEmpty || j <= 1) continue;
        const std::uint8_t c = t[j - 1];
        const std::uint8_t c1 = t[j];
        if (c < c1 || (c == c1 && i >= tab.s_start[c1])) cells[cur[c]--] = j - 1;
    }
}

/// Steps 2-4: sorted LMS positions in cells[1..k], EMPTY beyond, become the SA.
inline void induce_from_sorted_lms(const Text& t, word_t* cells, std::size_t k,
                                   const BucketTable& tab) {
    std::array<word_t, kSigma> cur = tab.s_end;
    for (std::size_t r = k; r >= 1; --r) {
        const word_t j = cells[r];
        cells[r] = kEmpty;
        cells[cur[t[j]]--] = j;
    }
    induce_l(t, cells, tab);
    induce_s(t, cells, tab);
}

/// Whether the suffix at rank r, position j, is LMS (uses the interval rule).
inline bool is_lms_at_rank(const Text& t, const BucketTable& tab, word_t r, word_t j) {
    return j > 1 && r >= tab.s_start[t[j]] && t[j - 1] > t[j];
}

} // namespace lzbg::detail
