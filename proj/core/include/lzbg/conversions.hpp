#pragma once

#include "lzbg/errors.hpp"
#include "lzbg/text.hpp"
#include "lzbg/workspace.hpp"

#include <span>
#include <string>

namespace lzbg {

/// PHI -> NSV in place: cells[i] = text position of the nearest lexicographically
/// smaller suffix among those starting before i on the right of i in SA order
/// (0 if none). cells[0] is left unspecified. Throws StructureError on a broken chain.
void phi_to_nsv_inplace(Workspace& ws);

/// NSV -> PHI in place, calling visit(i, psv, nsv) for i = 1..n in increasing order.
/// The final contents are exactly the Φ array that phi_to_nsv_inplace consumed.
template <class Visitor>
void nsv_to_phi_with_visitor(Workspace& ws, Visitor&& visit) {
    ws.require(WorkspaceState::Nsv, "nsv_to_phi_with_visitor");
    const std::size_t n = ws.n();
    word_t* a = ws.data();
    a[0] = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const word_t nsv = a[i];
        if (nsv >= i)
            throw StructureError("nsv_to_phi_with_visitor: NSV[" + std::to_string(i) +
                                 "] = " + std::to_string(nsv) + " is not smaller than " +
                                 std::to_string(i));
        const word_t psv = a[nsv];
        visit(static_cast<word_t>(i), psv, nsv);
        a[i] = psv;
        a[nsv] = i;
    }
    ws.set_state(WorkspaceState::Phi);
}

/// Peak elimination over a copy of the suffix array (three-array reference). psv and nsv must hold
/// n+1 entries; index 0 is unused. The SA workspace is not modified.
void sa_to_psv_nsv(const Workspace& ws_sa, std::span<word_t> psv, std::span<word_t> nsv);

} // namespace lzbg
