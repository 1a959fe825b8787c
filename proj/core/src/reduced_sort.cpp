// Induced sorting for recursion levels >= 1. Bucket write cursors are kept inside
// sa itself: the first (L) or last (S) slot of a bucket holds a negative counter
// while the bucket fills, and a bucket that runs into its neighbour shifts by one.

#include "reduced_sort.hpp"

namespace lzbg::detail {

namespace {

using i64 = std::int64_t;

void put_lms_substrings(i64* sa, const i64* s, i64 n) {
    for (i64 i = 0; i < n; ++i) sa[i] = kFree;

    bool next_s = false; // s[n-2] is L; the sentinel is placed separately
    i64 next = s[n - 1];
    for (i64 i = n - 2; i >= 0; --i) {
        const i64 c = s[i];
        const bool cur_s = c < next || (c == next && next_s);
        if (!cur_s && next_s) {
            const i64 p = i + 1;
            const i64 b = s[p];
            if (sa[b] >= 0) {
                // slot b was borrowed by the right neighbour; give it back
                i64 carry = sa[b];
                i64 h = b + 1;
                for (; sa[h] >= 0; ++h) {
                    const i64 t = sa[h];
                    sa[h] = carry;
                    carry = t;
                }
                sa[h] = carry;
                sa[b] = kFree;
            }
            const i64 d = sa[b];
            if (d == kFree) {
                if (sa[b - 1] == kFree) {
                    sa[b] = -1;
                    sa[b - 1] = p;
                } else {
                    sa[b] = p;
                }
            } else {
                i64 pos = b + d - 1;
                if (sa[pos] != kFree) {
                    for (i64 h = 0; h < -d; ++h) sa[b - h] = sa[b - h - 1];
                    ++pos;
                } else {
                    --sa[b];
                }
                sa[pos] = p;
            }
        }
        next = c;
        next_s = cur_s;
    }

    for (i64 i = n - 1; i > 0; --i) {
        const i64 d = sa[i];
        if (d < 0 && d != kFree) {
            i64 h = 0;
            for (; h < -d; ++h) sa[i - h] = sa[i - h - 1];
            sa[i - h] = kFree;
        }
    }
    sa[0] = n - 1;
}

void induce_l(i64* sa, const i64* s, i64 n, bool suffix) {
    i64 step = 1;
    for (i64 i = 0; i < n; i += step) {
        step = 1;
        if (sa[i] <= 0) continue;
        const i64 j = sa[i] - 1;
        const i64 c = s[j];
        const i64 c1 = s[j + 1];
        if (c < c1) continue;

        i64 d = sa[c];
        if (d >= 0) {
            // slot c is borrowed by the left neighbour, which is now complete
            i64 carry = sa[c];
            i64 h = c - 1;
            for (; sa[h] >= 0 || sa[h] == kFree; --h) {
                const i64 t = sa[h];
                sa[h] = carry;
                carry = t;
            }
            sa[h] = carry;
            if (h < i) step = 0;
            d = kFree;
        }

        if (d == kFree) {
            if (c < n - 1 && sa[c + 1] == kFree) {
                sa[c] = -1;
                sa[c + 1] = j;
            } else {
                sa[c] = j;
            }
        } else {
            i64 pos = c - d + 1;
            if (pos > n - 1 || sa[pos] != kFree) {
                for (i64 h = 0; h < -d; ++h) sa[c + h] = sa[c + h + 1];
                --pos;
                if (c < i) step = 0;
            } else {
                --sa[c];
            }
            sa[pos] = j;
        }

        const bool next_is_l = j + 1 < n - 1 && (c1 > s[j + 2] || (c1 == s[j + 2] && c1 < i));
        if ((!suffix || !next_is_l) && i > 0) sa[step == 0 ? i - 1 : i] = kFree;
    }

    for (i64 i = 1; i < n; ++i) {
        const i64 d = sa[i];
        if (d < 0 && d != kFree) {
            i64 h = 0;
            for (; h < -d; ++h) sa[i + h] = sa[i + h + 1];
            sa[i + h] = kFree;
        }
    }
}

void induce_s(i64* sa, const i64* s, i64 n, bool suffix) {
    i64 step = 1;
    for (i64 i = n - 1; i > 0; i -= step) {
        step = 1;
        if (sa[i] <= 0) continue;
        const i64 j = sa[i] - 1;
        const i64 c = s[j];
        const i64 c1 = s[j + 1];
        if (!(c < c1 || (c == c1 && c > i))) continue;

        i64 d = sa[c];
        if (d >= 0) {
            // slot c is borrowed by the right neighbour, which is now complete
            i64 carry = sa[c];
            i64 h = c + 1;
            for (; sa[h] >= 0 || sa[h] == kFree; ++h) {
                const i64 t = sa[h];
                sa[h] = carry;
                carry = t;
            }
            sa[h] = carry;
            if (h > i) step = 0;
            d = kFree;
        }

        if (d == kFree) {
            if (sa[c - 1] == kFree) {
                sa[c] = -1;
                sa[c - 1] = j;
            } else {
                sa[c] = j;
            }
        } else {
            i64 pos = c + d - 1;
            if (sa[pos] != kFree) {
                for (i64 h = 0; h < -d; ++h) sa[c - h] = sa[c - h - 1];
                ++pos;
                if (c > i) step = 0;
            } else {
                --sa[c];
            }
            sa[pos] = j;
        }

        if (!suffix) sa[step == 0 ? i + 1 : i] = kFree;
    }

    if (!suffix) {
        for (i64 i = n - 1; i > 0; --i) {
            const i64 d = sa[i];
            if (d < 0 && d != kFree) {
                i64 h = 0;
                for (; h < -d; ++h) sa[i - h] = sa[i - h - 1];
                sa[i - h] = kFree;
            }
        }
    }
}

i64 lms_length(const i64* s, i64 n, i64 x) {
    if (x == n - 1) return 1;
    i64 dist = 0;
    i64 i = 1;
    while (s[x + i] >= s[x + i - 1]) ++i;
    for (;; ++i) {
        if (x + i > n - 1 || s[x + i] > s[x + i - 1]) break;
        if (x + i == n - 1 || s[x + i] < s[x + i - 1]) dist = i;
    }
    return dist + 1;
}

i64 name_substrings(i64* sa, i64* s, i64* s1, i64 n, i64 m, i64 n1) {
    for (i64 i = n1; i < n; ++i) sa[i] = kFree;

    i64 name = 0;
    i64 names = 0;
    i64 prev_pos = 0;
    i64 prev_len = 0;
    for (i64 i = 0; i < n1; ++i) {
        const i64 pos = sa[i];
        const i64 len = lms_length(s, n, pos);
        bool diff = i == 0 || len != prev_len;
        for (i64 d = 0; !diff && d < len; ++d)
            if (pos + d == n - 1 || prev_pos + d == n - 1 || s[pos + d] != s[prev_pos + d])
                diff = true;
        if (diff) {
            name = i;
            ++names;
            sa[name] = 1;
            prev_pos = pos;
            prev_len = len;
        } else {
            ++sa[name];
        }
        sa[n1 + pos / 2] = name;
    }

    for (i64 i = n - 1, j = m - 1; i >= n1; --i)
        if (sa[i] != kFree) sa[j--] = sa[i];

    // S-type symbols become the last slot of their bucket
    bool next_s = true;
    for (i64 i = n1 - 1; i > 0; --i) {
        const i64 ch = s1[i];
        const i64 ch1 = s1[i - 1];
        const bool cur_s = ch1 < ch || (ch1 == ch && next_s);
        if (cur_s) s1[i - 1] += sa[ch1] - 1;
        next_s = cur_s;
    }
    return names;
}

void lms_positions_to_sa(i64* sa, const i64* s, i64* s1, i64 n, i64 n1) {
    i64 j = n1 - 1;
    s1[j--] = n - 1;
    bool next_s = false; // s[n-2] is L
    for (i64 i = n - 2; i > 0; --i) {
        const bool cur_s = s[i - 1] < s[i] || (s[i - 1] == s[i] && next_s);
        if (!cur_s && next_s) s1[j--] = i;
        next_s = cur_s;
    }
    for (i64 i = 0; i < n1; ++i) sa[i] = s1[sa[i]];
    for (i64 i = n1; i < n; ++i) sa[i] = kFree;
}

void put_sorted_lms(i64* sa, const i64* s, i64 n1) {
    i64 pos = 0;
    i64 prev = -1;
    for (i64 i = n1 - 1; i > 0; --i) {
        const i64 j = sa[i];
        sa[i] = kFree;
        const i64 c = s[j];
        if (c != prev) {
            prev = c;
            pos = c;
        }
        sa[pos--] = j;
    }
}

} // namespace

void sort_reduced(i64* s, i64* sa, i64 n, i64 m, int level) {
    put_lms_substrings(sa, s, n);
    induce_l(sa, s, n, false);
    induce_s(sa, s, n, false);

    i64 n1 = 0;
    for (i64 i = 0; i < n; ++i)
        if (sa[i] > 0) sa[n1++] = sa[i];

    i64* s1 = sa + m - n1;
    const i64 names = name_substrings(sa, s, s1, n, m, n1);
    if (names < n1) {
        sort_reduced(s1, sa, n1, m - n1, level + 1);
    } else {
        for (i64 i = 0; i < n1; ++i) sa[s1[i]] = i;
    }

    lms_positions_to_sa(sa, s, s1, n, n1);
    put_sorted_lms(sa, s, n1);
    induce_l(sa, s, n, true);
    induce_s(sa, s, n, true);
}

} // namespace lzbg::detail
