#pragma once

#include "lzbg/text.hpp"

#include <vector>

namespace lzbg {

/// One phrase: a literal byte (length 0) or a copy of `length` symbols from 1-based
/// position `payload`. The copied region may overlap the phrase.
struct Factor {
    word_t length = 0;
    word_t payload = 0;

    static Factor literal(std::uint8_t c) { return {0, c}; }
    static Factor copy(word_t length, word_t source) { return {length, source}; }

    bool is_literal() const { return length == 0; }
    std::uint8_t symbol() const { return static_cast<std::uint8_t>(payload); }
    word_t source() const { return payload; }
    /// Symbols covered (literals cover one).
    word_t span() const { return length == 0 ? 1 : length; }

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Factorization {
    std::vector<Factor> factors;
    word_t n = 0;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

} // namespace lzbg
