#pragma once

#include "lzbg/factor.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lzbg {

// LZBG1 container:
//   "LZBG" 0x01 | text length (u64 LE) | factor count (u64 LE)
//   per factor: ULEB128 length, then the literal byte if length == 0,
//   else ULEB128 source position (1-based).

std::vector<std::uint8_t> encode_stream(const Factorization& f);

/// Parses a stream into factors, validating the header and every factor against
/// the positions decoded so far. Throws FormatError.
Factorization parse_stream(std::span<const std::uint8_t> stream);

/// Reconstructs the text. Overlapping copies are expanded byte by byte.
/// Throws FormatError.
std::vector<std::uint8_t> decode_stream(std::span<const std::uint8_t> stream);

/// Expands factors into text. Throws FormatError for an invalid source.
std::vector<std::uint8_t> expand(const Factorization& f);

} // namespace lzbg
