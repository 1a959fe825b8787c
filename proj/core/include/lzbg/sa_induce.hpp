#pragma once

#include "lzbg/text.hpp"
#include "lzbg/workspace.hpp"

namespace lzbg {

struct LmsIndex {
    std::size_t k = 0;
};

/// Sorts the LMS suffixes of text into ws.cells[1..k] (RAW -> LMS_SA); cells[k+1..n]
/// become EMPTY. The reduced problem is solved recursively inside the workspace.
LmsIndex sort_lms_suffixes(const Text& text, Workspace& ws);

/// Suffix array of text in ws.cells[1..n] (RAW -> SA).
void build_suffix_array(const Text& text, Workspace& ws);

/// Number of LMS positions in 1..n by a direct type scan.
std::size_t count_lms(const Text& text);

} // namespace lzbg
