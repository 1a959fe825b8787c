#pragma once

// Brute-force reference implementations, written straight from the definitions.
// Nothing here shares code with the fast pipelines. Arrays are 1-based: index 0 is
// unused unless stated otherwise.

#include "lzbg/factor.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lzbg::oracle {

using Bytes = std::span<const std::uint8_t>;

inline Bytes bytes_of(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

/// Comparison sort of all suffixes. sa[0] = 0.
std::vector<std::uint64_t> naive_suffix_array(Bytes t);

/// isa[sa[r]] = r.
std::vector<std::uint64_t> inverse_suffix_array(const std::vector<std::uint64_t>& sa);

/// phi[0] = sa[n], phi[sa[1]] = 0, phi[sa[r]] = sa[r-1].
std::vector<std::uint64_t> naive_phi(Bytes t);
std::vector<std::uint64_t> phi_from_sa(const std::vector<std::uint64_t>& sa);

struct PsvNsv {
    std::vector<std::uint64_t> psv;
    std::vector<std::uint64_t> nsv;
};

/// psv[i] = sa[max{r < isa[i] : sa[r] < i}], nsv[i] = sa[min{r > isa[i] : sa[r] < i}],
/// 0 when the set is empty.
PsvNsv naive_psv_nsv(Bytes t);
PsvNsv psv_nsv_from_sa(const std::vector<std::uint64_t>& sa);

struct LpfPrevOcc {
    std::vector<std::uint64_t> lpf;
    std::vector<std::int64_t> prevocc; // -1 when lpf is 0; otherwise the smallest j
};

/// All positions by a double loop over earlier positions. O(n^2) lcp computations.
LpfPrevOcc naive_lpf_prevocc(Bytes t);

/// LPF and smallest PrevOcc of a single position.
std::uint64_t naive_lpf_at(Bytes t, std::uint64_t i, std::int64_t* prevocc = nullptr);

/// Greedy factorization evaluating LPF only at factor starts.
Factorization naive_factorize(Bytes t);

/// Direct lcp of suffixes i and j (1-based).
std::uint64_t naive_lcp(Bytes t, std::uint64_t i, std::uint64_t j);

/// Suffix types by the definition: 'S' or 'L' for 1..n+1 (index 0 unused).
std::vector<char> naive_types(Bytes t);

/// Positions i in 2..n with type S and type(i-1) L, in text order.
std::vector<std::uint64_t> naive_lms_positions(Bytes t);

/// True when suffix a is lexicographically smaller than suffix b.
bool suffix_less(Bytes t, std::uint64_t a, std::uint64_t b);

} // namespace lzbg::oracle
