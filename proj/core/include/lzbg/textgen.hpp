#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace lzbg::textgen {

/// Uniform random bytes over sigma symbols ('a'.. for sigma <= 26, 0.. otherwise).
std::string random_text(std::size_t n, unsigned sigma, std::uint64_t seed);

/// Copies of a short random block with sparse point mutations.
std::string repetitive_text(std::size_t n, std::uint64_t seed);

/// English-like prose: Zipf-distributed words from a large vocabulary, sentences
/// with capitalisation, punctuation and line breaks.
std::string english_like_text(std::size_t n, std::uint64_t seed);

/// Strings known to stress the LMS recursion (Fibonacci words, runs, periodic text).
std::string fibonacci_word(std::size_t n);

} // namespace lzbg::textgen
