#include "lzbg/conversions.hpp"

#include <algorithm>
#include <memory>

namespace lzbg {

void phi_to_nsv_inplace(Workspace& ws) {
    ws.require(WorkspaceState::Phi, "phi_to_nsv_inplace");
    const std::size_t n = ws.n();
    word_t* a = ws.data();
    word_t cur = a[0];
    word_t prev = 0;
    std::size_t steps = 0;
    while (cur != 0) {
        if (cur > n || ++steps > n)
            throw StructureError("phi_to_nsv_inplace: chain leaves 1.." + std::to_string(n));
        while (cur < prev) prev = a[prev];
        if (cur == prev)
            throw StructureError("phi_to_nsv_inplace: position " + std::to_string(cur) +
                                 " visited twice");
        const word_t next = a[cur];
        a[cur] = prev;
        prev = cur;
        cur = next;
    }
    if (steps != n)
        throw StructureError("phi_to_nsv_inplace: chain visits " + std::to_string(steps) +
                             " of " + std::to_string(n) + " positions");
    ws.set_state(WorkspaceState::Nsv);
}

void sa_to_psv_nsv(const Workspace& ws_sa, std::span<word_t> psv, std::span<word_t> nsv) {
    ws_sa.require(WorkspaceState::Sa, "sa_to_psv_nsv");
    const std::size_t n = ws_sa.n();
    if (psv.size() < n + 1 || nsv.size() < n + 1)
        throw std::invalid_argument("sa_to_psv_nsv: output buffers need n+1 entries");

    auto sa = std::make_unique<word_t[]>(n + 2);
    std::copy(ws_sa.data() + 1, ws_sa.data() + n + 1, sa.get() + 1);
    sa[0] = 0;
    sa[n + 1] = 0;
    psv[0] = nsv[0] = 0;

    std::size_t top = 0;
    for (std::size_t i = 1; i <= n + 1; ++i) {
        const word_t v = sa[i];
        while (sa[top] > v) {
            nsv[sa[top]] = v;
            psv[sa[top]] = sa[top - 1];
            --top;
        }
        sa[++top] = v;
    }
}

} // namespace lzbg
