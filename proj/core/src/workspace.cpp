#include "lzbg/workspace.hpp"

#include "lzbg/errors.hpp"

#include <string>

namespace lzbg {

std::string_view to_string(WorkspaceState s) {
    switch (s) {
    case WorkspaceState::Raw: return "RAW";
    case WorkspaceState::LmsSa: return "LMS_SA";
    case WorkspaceState::LmsList: return "LMS_LIST";
    case WorkspaceState::Sa: return "SA";
    case WorkspaceState::Phi: return "PHI";
    case WorkspaceState::Nsv: return "NSV";
    }
    return "?";
}

void Workspace::reset(std::size_t n) {
    cells_.resize(n + 1);
    state_ = WorkspaceState::Raw;
}

void Workspace::require(WorkspaceState s, std::string_view op) const {
    if (state_ != s)
        throw StateError(std::string(op) + ": workspace is " + std::string(to_string(state_)) +
                         ", expected " + std::string(to_string(s)));
}

void Workspace::require_size(const Text& text, std::string_view op) const {
    if (n() != text.size())
        throw StateError(std::string(op) + ": workspace holds " + std::to_string(n()) +
                         " positions but the text has " + std::to_string(text.size()));
}

} // namespace lzbg
