#pragma once

#include <cstdint>

namespace lzbg::detail {

inline constexpr std::int64_t kFree = INT64_MIN;

/// Suffix array of a reduced string s[0..n) whose last symbol is a unique 0 and
/// whose symbols are bucket names: an L-type symbol is the index of its bucket's
/// first slot, an S-type symbol the index of its last slot. sa has room for m >= n
/// entries; everything beyond n is scratch for deeper levels. No other memory is used
/// apart from the call stack.
void sort_reduced(std::int64_t* s, std::int64_t* sa, std::int64_t n, std::int64_t m, int level);

} // namespace lzbg::detail
