#include "lzbg/sa_induce.hpp"

#include "induce.hpp"
#include "lzbg/space.hpp"
#include "reduced_sort.hpp"

#include <algorithm>
#include <cstdint>

namespace lzbg {

namespace {

int sym(const Text& t, word_t p) { return t.symbol_or_sentinel(p); }

/// Length of the LMS substring starting at LMS position x (including the next LMS
/// position; the sentinel substring has length 1).
word_t lms_length(const Text& t, word_t x) {
    const word_t end = t.size() + 1;
    if (x == end) return 1;
    word_t dist = 0;
    word_t i = 1;
    while (sym(t, x + i) >= sym(t, x + i - 1)) ++i;
    for (;; ++i) {
        if (x + i > end || sym(t, x + i) > sym(t, x + i - 1)) break;
        if (x + i == end || sym(t, x + i) < sym(t, x + i - 1)) dist = i;
    }
    return dist + 1;
}

bool same_lms_substring(const Text& t, word_t a, word_t la, word_t b, word_t lb) {
    if (la != lb) return false;
    const word_t end = t.size() + 1;
    for (word_t d = 0; d < la; ++d)
        if (a + d == end || b + d == end || t[a + d] != t[b + d]) return false;
    return true;
}

void place_lms_unsorted(const Text& t, word_t* cells, const BucketTable& tab) {
    const std::size_t n = t.size();
    std::fill(cells, cells + n + 1, kEmpty);
    std::array<word_t, kSigma> cur = tab.s_end;
    bool next_s = false; // suffix n is L
    for (std::size_t i = n - 1; i >= 1; --i) {
        const bool cur_s = t[i] < t[i + 1] || (t[i] == t[i + 1] && next_s);
        if (!cur_s && next_s) cells[cur[t[i + 1]]--] = i + 1;
        next_s = cur_s;
    }
}

} // namespace

std::size_t count_lms(const Text& t) {
    const std::size_t n = t.size();
    if (n < 2) return 0;
    std::size_t k = 0;
    bool next_s = false;
    for (std::size_t i = n - 1; i >= 1; --i) {
        const bool cur_s = t[i] < t[i + 1] || (t[i] == t[i + 1] && next_s);
        if (!cur_s && next_s) ++k;
        next_s = cur_s;
    }
    return k;
}

LmsIndex sort_lms_suffixes(const Text& t, Workspace& ws) {
    ws.require(WorkspaceState::Raw, "sort_lms_suffixes");
    ws.require_size(t, "sort_lms_suffixes");
    const std::size_t n = t.size();
    word_t* cells = ws.data();
    if (n < 2) {
        std::fill(cells, cells + n + 1, kEmpty);
        cells[0] = 0;
        ws.set_state(WorkspaceState::LmsSa);
        return {0};
    }

    FixedCharge tables(BucketTable::kWords);
    BucketTable tab;
    compute_bucket_bounds(t, tab);

    // Sort LMS substrings.
    place_lms_unsorted(t, cells, tab);
    detail::induce_l(t, cells, tab);
    detail::induce_s(t, cells, tab);

    std::size_t k = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const word_t j = cells[i];
        if (detail::is_lms_at_rank(t, tab, i, j)) cells[++k] = j;
    }

    if (k >= 2) {
        // Name LMS substrings; the sentinel takes sorted slot 0 and name 0.
        const std::size_t m = k + 1;
        cells[0] = n + 1;
        std::fill(cells + m, cells + n + 1, kEmpty);
        word_t name = 0;
        word_t names = 0;
        word_t prev_pos = 0;
        word_t prev_len = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            const word_t pos = cells[i];
            const word_t len = lms_length(t, pos);
            if (i == 0 || !same_lms_substring(t, pos, len, prev_pos, prev_len)) {
                name = i;
                ++names;
                cells[name] = 1;
                prev_pos = pos;
                prev_len = len;
            } else {
                ++cells[name];
            }
            cells[k + pos / 2] = name;
        }

        // Names in text order into cells[n-k..n].
        for (std::size_t i = n, j = n; i > k; --i)
            if (cells[i] != kEmpty) cells[j--] = cells[i];

        auto* sa1 = reinterpret_cast<std::int64_t*>(cells);
        std::int64_t* s1 = sa1 + (n - k);
        const auto ms = static_cast<std::int64_t>(m);
        if (names < m) {
            bool next_s = true;
            for (std::int64_t i = ms - 1; i > 0; --i) {
                const std::int64_t ch = s1[i];
                const std::int64_t ch1 = s1[i - 1];
                const bool cur_s = ch1 < ch || (ch1 == ch && next_s);
                if (cur_s) s1[i - 1] += sa1[ch1] - 1;
                next_s = cur_s;
            }
            detail::sort_reduced(s1, sa1, ms, static_cast<std::int64_t>(n - k), 1);
        } else {
            for (std::int64_t i = 0; i < ms; ++i) sa1[s1[i]] = i;
        }

        // Reduced ranks back to text positions.
        std::int64_t j = ms - 1;
        s1[j--] = static_cast<std::int64_t>(n + 1);
        bool next_s = false;
        for (std::size_t i = n - 1; i >= 1; --i) {
            const bool cur_s = t[i] < t[i + 1] || (t[i] == t[i + 1] && next_s);
            if (!cur_s && next_s) s1[j--] = static_cast<std::int64_t>(i + 1);
            next_s = cur_s;
        }
        for (std::int64_t i = 0; i < ms; ++i) sa1[i] = s1[sa1[i]];
        // sa1[0] is the sentinel; real LMS positions already sit in cells[1..k]
    }

    cells[0] = 0;
    std::fill(cells + k + 1, cells + n + 1, kEmpty);
    ws.set_state(WorkspaceState::LmsSa);
    return {k};
}

void build_suffix_array(const Text& t, Workspace& ws) {
    ws.require(WorkspaceState::Raw, "build_suffix_array");
    const LmsIndex lms = sort_lms_suffixes(t, ws);
    FixedCharge tables(BucketTable::kWords);
    BucketTable tab;
    compute_bucket_bounds(t, tab);
    detail::induce_from_sorted_lms(t, ws.data(), lms.k, tab);
    ws.data()[0] = 0;
    ws.set_state(WorkspaceState::Sa);
}

} // namespace lzbg
