#pragma once

#include "lzbg/text.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace lzbg {

enum class WorkspaceState : std::uint8_t {
    Raw,
    LmsSa,   // cells[1..k] sorted LMS positions, rest EMPTY
    LmsList, // LMS successor links in place, head held by the caller
    Sa,
    Phi,
    Nsv,
    Parsed = Phi,
};

std::string_view to_string(WorkspaceState s);

/// The single (n+1)-word integer array, cells indexed 0..n, plus a state tag.
class Workspace {
public:
    Workspace() = default;
    explicit Workspace(std::size_t n) { reset(n); }

    /// Resize to n+1 cells and return to RAW. Cell contents are unspecified.
    void reset(std::size_t n);

    std::size_t n() const { return cells_.size() - 1; }
    WorkspaceState state() const { return state_; }
    void set_state(WorkspaceState s) { state_ = s; }

    /// Throws StateError unless the workspace is in state s.
    void require(WorkspaceState s, std::string_view op) const;
    /// Throws StateError unless the workspace is sized for text.
    void require_size(const Text& text, std::string_view op) const;

    word_t* data() { return cells_.data(); }
    const word_t* data() const { return cells_.data(); }
    std::span<word_t> cells() { return cells_; }
    std::span<const word_t> cells() const { return cells_; }
    word_t& operator[](std::size_t i) { return cells_[i]; }
    word_t operator[](std::size_t i) const { return cells_[i]; }

private:
    std::vector<word_t> cells_ = std::vector<word_t>(1, 0);
    WorkspaceState state_ = WorkspaceState::Raw;
};

} // namespace lzbg
