#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lzbg {

/// Workspace cell / position word. Positions are 1-based; 0 is the terminator.
using word_t = std::uint64_t;

/// Reserved cell value, never a valid position.
inline constexpr word_t kEmpty = ~word_t{0};

inline constexpr std::size_t kSigma = 256;

/// Immutable byte text T[1..n] with a virtual sentinel T[n+1] smaller than every byte.
///
/// Non-owning: the referenced bytes must outlive the Text.
class Text {
public:
    Text() = default;
    explicit Text(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}
    explicit Text(std::string_view s)
        : bytes_(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()) {}

    std::size_t size() const { return bytes_.size(); }
    bool empty() const { return bytes_.empty(); }

    /// 1-based access, 1 <= i <= n.
    std::uint8_t operator[](std::size_t i) const { return bytes_[i - 1]; }

    /// 1-based access extended to the sentinel: returns -1 for i = n+1.
    int symbol_or_sentinel(std::size_t i) const {
        return i > bytes_.size() ? -1 : int(bytes_[i - 1]);
    }

    std::span<const std::uint8_t> bytes() const { return bytes_; }

private:
    std::span<const std::uint8_t> bytes_;
};

enum class SuffixType : std::uint8_t { L, S };

/// Type of suffix i (1 <= i <= n+1). Scans forward to the first differing
/// symbol, so a single query costs O(length of the equal run at i).
/// Throws std::out_of_range for i outside 1..n+1.
SuffixType classify_suffix_type(const Text& text, std::size_t i);

/// Types of all suffixes 1..n+1 by one right-to-left scan; index 0 unused.
std::vector<SuffixType> classify_suffix_types(const Text& text);

/// Per-byte L/S interval bounds of the suffix array (1-based ranks) and the
/// four list head/tail registers used by the linked-list induction.
///
/// An empty interval has start == end + 1.
struct BucketTable {
    std::array<word_t, kSigma> l_start{};
    std::array<word_t, kSigma> l_end{};
    std::array<word_t, kSigma> s_start{};
    std::array<word_t, kSigma> s_end{};

    std::array<word_t, kSigma> lbkts{};
    std::array<word_t, kSigma> lbkte{};
    std::array<word_t, kSigma> sbkts{};
    std::array<word_t, kSigma> sbkte{};

    /// Words held by one table; used for space accounting.
    static constexpr std::size_t kWords = 8 * kSigma;

    void reset_lists();

    /// True iff rank r (whose suffix starts with c) lies in the S-interval of c.
    bool in_s_interval(std::uint8_t c, word_t rank) const { return rank >= s_start[c]; }
};

/// Interval bounds from symbol and type counts; list registers all kEmpty.
void compute_bucket_bounds(const Text& text, BucketTable& table);
BucketTable compute_bucket_bounds(const Text& text);

} // namespace lzbg
