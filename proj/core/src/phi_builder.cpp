#include "lzbg/phi_builder.hpp"

#include "induce.hpp"
#include "lzbg/errors.hpp"
#include "lzbg/sa_induce.hpp"
#include "lzbg/space.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace lzbg {

LmsLinks rearrange_lms_to_links(Workspace& ws, std::size_t k) {
    ws.require(WorkspaceState::LmsSa, "rearrange_lms_to_links");
    word_t* a = ws.data();
    ws.set_state(WorkspaceState::LmsList);
    if (k == 0) return {};

    const word_t head = a[1];
    for (std::size_t i = k; i >= 1; --i) {
        const word_t v = a[i];
        a[2 * i - 1] = kEmpty;
        a[2 * i] = v;
    }
    for (std::size_t i = 1; i < k; ++i) {
        const word_t j1 = a[2 * i];
        const word_t j2 = a[2 * i + 2];
        if (a[j1] == kEmpty) {
            a[j1] = j2;
        } else {
            assert(a[j1 - 1] == kEmpty);
            a[j1 - 1] = j2;
        }
    }
    for (std::size_t i = 1; i <= k; ++i) a[2 * i] = kEmpty;

    word_t cur = head;
    for (std::size_t r = 1; r < k; ++r) {
        word_t next = a[cur];
        if (next == kEmpty) {
            next = a[cur - 1];
            a[cur - 1] = kEmpty;
            a[cur] = next;
        }
        cur = next;
    }
    return {head, k};
}

void induce_phi_from_links(const Text& t, Workspace& ws, LmsLinks links) {
    ws.require(WorkspaceState::LmsList, "induce_phi_from_links");
    ws.require_size(t, "induce_phi_from_links");
    const std::size_t n = t.size();
    word_t* a = ws.data();
    if (n == 0) {
        a[0] = 0;
        ws.set_state(WorkspaceState::Phi);
        return;
    }

    FixedCharge tables(BucketTable::kWords);
    BucketTable tab;
    compute_bucket_bounds(t, tab);

    // LMS suffixes, ascending, into one list per first symbol.
    word_t x = links.head;
    for (std::size_t r = 0; r < links.k; ++r) {
        const word_t next = r + 1 < links.k ? a[x] : 0;
        const std::uint8_t c = t[x];
        if (tab.sbkts[c] == kEmpty)
            tab.sbkts[c] = x;
        else
            a[tab.sbkte[c]] = x;
        tab.sbkte[c] = x;
        x = next;
    }

    auto append_l = [&](word_t p) {
        const std::uint8_t c = t[p];
        if (tab.lbkte[c] == kEmpty)
            tab.lbkts[c] = p;
        else
            a[tab.lbkte[c]] = p;
        tab.lbkte[c] = p;
    };

    // Ascending scan: L-suffixes.
    append_l(n);
    for (std::size_t c = 0; c < kSigma; ++c) {
        if (tab.lbkts[c] != kEmpty) {
            for (x = tab.lbkts[c];; x = a[x]) {
                if (x > 1 && t[x - 1] >= c) append_l(x - 1);
                if (x == tab.lbkte[c]) break;
            }
        }
        if (tab.sbkts[c] != kEmpty) {
            for (x = tab.sbkts[c];; x = a[x]) {
                append_l(x - 1);
                if (x == tab.sbkte[c]) break;
            }
        }
    }

    // Turn every L-list around so it runs from its largest suffix down.
    for (std::size_t c = 0; c < kSigma; ++c) {
        if (tab.lbkts[c] == kEmpty) continue;
        word_t prev = 0;
        for (x = tab.lbkts[c];;) {
            const bool last = x == tab.lbkte[c];
            const word_t next = last ? 0 : a[x];
            a[x] = prev;
            prev = x;
            if (last) break;
            x = next;
        }
    }

    // Descending scan: S-suffixes, linking every list to the one before it.
    tab.sbkts.fill(kEmpty);
    tab.sbkte.fill(kEmpty);
    auto prepend_s = [&](word_t p) {
        const std::uint8_t c = t[p];
        if (tab.sbkte[c] == kEmpty)
            tab.sbkte[c] = p;
        else
            a[tab.sbkts[c]] = p;
        tab.sbkts[c] = p;
    };
    word_t last = 0;
    for (std::size_t c = kSigma; c-- > 0;) {
        if (tab.sbkte[c] != kEmpty) {
            x = tab.sbkte[c];
            a[last] = x;
            for (;; x = a[x]) {
                last = x;
                if (x > 1 && t[x - 1] <= c) prepend_s(x - 1);
                if (x == tab.sbkts[c]) break;
            }
        }
        if (tab.lbkte[c] != kEmpty) {
            x = tab.lbkte[c];
            a[last] = x;
            for (;; x = a[x]) {
                last = x;
                if (x > 1 && t[x - 1] < c) prepend_s(x - 1);
                if (x == tab.lbkts[c]) break;
            }
        }
    }
    a[last] = 0;
    ws.set_state(WorkspaceState::Phi);
}

void build_phi_from_text(const Text& t, Workspace& ws) {
    ws.require(WorkspaceState::Raw, "build_phi_from_text");
    const LmsIndex lms = sort_lms_suffixes(t, ws);
    const LmsLinks links = rearrange_lms_to_links(ws, lms.k);
    induce_phi_from_links(t, ws, links);
}

void sa_to_phi_inplace(const Text& t, Workspace& ws) {
    ws.require(WorkspaceState::Sa, "sa_to_phi_inplace");
    ws.require_size(t, "sa_to_phi_inplace");
    const std::size_t n = t.size();
    word_t* a = ws.data();
    std::size_t k = 0;
    {
        FixedCharge tables(BucketTable::kWords);
        BucketTable tab;
        compute_bucket_bounds(t, tab);
        for (std::size_t i = 1; i <= n; ++i) {
            const word_t j = a[i];
            if (detail::is_lms_at_rank(t, tab, i, j)) a[++k] = j;
        }
    }
    std::fill(a + k + 1, a + n + 1, kEmpty);
    ws.set_state(WorkspaceState::LmsSa);
    const LmsLinks links = rearrange_lms_to_links(ws, k);
    induce_phi_from_links(t, ws, links);
}

void phi_to_sa_inplace(const Text& t, Workspace& ws) {
    ws.require(WorkspaceState::Phi, "phi_to_sa_inplace");
    ws.require_size(t, "phi_to_sa_inplace");
    const std::size_t n = t.size();
    word_t* a = ws.data();

    FixedCharge tables(BucketTable::kWords);
    BucketTable tab;
    compute_bucket_bounds(t, tab);

    // Walk the chain from the largest suffix, blanking it and threading the LMS
    // suffixes into a descending list. Rank r of the current suffix is n, n-1, ...
    word_t cur = a[0];
    word_t largest = 0;
    word_t prev_lms = 0;
    std::size_t k = 0;
    for (word_t r = n; r >= 1; --r) {
        if (cur == 0 || cur > n)
            throw StructureError("phi_to_sa_inplace: chain broken at rank " + std::to_string(r));
        const word_t next = a[cur];
        if (next == kEmpty)
            throw StructureError("phi_to_sa_inplace: position " + std::to_string(cur) +
                                 " visited twice");
        a[cur] = kEmpty;
        if (detail::is_lms_at_rank(t, tab, r, cur)) {
            if (prev_lms != 0)
                a[prev_lms] = cur;
            else
                largest = cur;
            prev_lms = cur;
            ++k;
        }
        cur = next;
    }
    if (cur != 0) throw StructureError("phi_to_sa_inplace: chain longer than the text");
    a[0] = kEmpty;
    if (prev_lms != 0) a[prev_lms] = 0; // list terminator, distinct from EMPTY

    // i-th largest LMS suffix to cell 2(k-i+1), or the cell before it when that
    // cell is itself a list node.
    word_t x = largest;
    for (std::size_t i = 1; i <= k; ++i) {
        const word_t next = a[x];
        const std::size_t target = 2 * (k - i + 1);
        if (a[target] == kEmpty)
            a[target] = x;
        else
            a[target - 1] = x;
        x = next;
    }
    x = largest;
    for (std::size_t i = 1; i <= k; ++i) {
        const word_t next = a[x];
        a[x] = kEmpty;
        x = next;
    }
    for (std::size_t i = 1; i <= k; ++i) {
        if (a[2 * i] == kEmpty) {
            a[2 * i] = a[2 * i - 1];
            a[2 * i - 1] = kEmpty;
        }
    }
    for (std::size_t i = 1; i <= k; ++i) a[i] = a[2 * i];
    std::fill(a + k + 1, a + n + 1, kEmpty);

    detail::induce_from_sorted_lms(t, a, k, tab);
    a[0] = 0;
    ws.set_state(WorkspaceState::Sa);
}

} // namespace lzbg
