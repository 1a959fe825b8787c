#pragma once

#include "lzbg/text.hpp"
#include "lzbg/workspace.hpp"

namespace lzbg {

/// Sorted LMS suffixes stored as successor links inside the workspace.
struct LmsLinks {
    word_t head = 0; // lexicographically smallest LMS position, 0 when k = 0
    std::size_t k = 0;
};

/// LMS_SA -> LMS_LIST: cells[p] = next larger LMS position for every LMS p except the
/// largest; every other cell EMPTY.
LmsLinks rearrange_lms_to_links(Workspace& ws, std::size_t k);

/// LMS_LIST -> PHI by linked-list induced sorting.
void induce_phi_from_links(const Text& text, Workspace& ws, LmsLinks links);

/// RAW -> PHI.
void build_phi_from_text(const Text& text, Workspace& ws);

/// SA -> PHI in place.
void sa_to_phi_inplace(const Text& text, Workspace& ws);

/// PHI -> SA in place. Throws StructureError if the chain is malformed.
void phi_to_sa_inplace(const Text& text, Workspace& ws);

} // namespace lzbg
