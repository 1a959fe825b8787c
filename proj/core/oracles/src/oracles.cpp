#include "lzbg/oracles.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace lzbg::oracle {

bool suffix_less(Bytes t, std::uint64_t a, std::uint64_t b) {
    const std::size_t n = t.size();
    const std::size_t la = n - a + 1;
    const std::size_t lb = n - b + 1;
    const int c = std::memcmp(t.data() + a - 1, t.data() + b - 1, std::min(la, lb));
    if (c != 0) return c < 0;
    return la < lb;
}

std::vector<std::uint64_t> naive_suffix_array(Bytes t) {
    const std::size_t n = t.size();
    std::vector<std::uint64_t> sa(n + 1);
    std::iota(sa.begin(), sa.end(), std::uint64_t{0});
    std::sort(sa.begin() + 1, sa.end(),
              [&](std::uint64_t a, std::uint64_t b) { return suffix_less(t, a, b); });
    return sa;
}

std::vector<std::uint64_t> inverse_suffix_array(const std::vector<std::uint64_t>& sa) {
    std::vector<std::uint64_t> isa(sa.size(), 0);
    for (std::size_t r = 1; r < sa.size(); ++r) isa[sa[r]] = r;
    return isa;
}

std::vector<std::uint64_t> phi_from_sa(const std::vector<std::uint64_t>& sa) {
    const std::size_t n = sa.size() - 1;
    std::vector<std::uint64_t> phi(n + 1, 0);
    if (n == 0) return phi;
    phi[0] = sa[n];
    phi[sa[1]] = 0;
    for (std::size_t r = 2; r <= n; ++r) phi[sa[r]] = sa[r - 1];
    return phi;
}

std::vector<std::uint64_t> naive_phi(Bytes t) { return phi_from_sa(naive_suffix_array(t)); }

PsvNsv psv_nsv_from_sa(const std::vector<std::uint64_t>& sa) {
    const std::size_t n = sa.size() - 1;
    const std::vector<std::uint64_t> isa = inverse_suffix_array(sa);
    PsvNsv out{std::vector<std::uint64_t>(n + 1, 0), std::vector<std::uint64_t>(n + 1, 0)};
    for (std::uint64_t i = 1; i <= n; ++i) {
        for (std::uint64_t r = isa[i]; r-- > 1;) {
            if (sa[r] < i) {
                out.psv[i] = sa[r];
                break;
            }
        }
        for (std::uint64_t r = isa[i] + 1; r <= n; ++r) {
            if (sa[r] < i) {
                out.nsv[i] = sa[r];
                break;
            }
        }
    }
    return out;
}

PsvNsv naive_psv_nsv(Bytes t) { return psv_nsv_from_sa(naive_suffix_array(t)); }

std::uint64_t naive_lcp(Bytes t, std::uint64_t i, std::uint64_t j) {
    const std::size_t n = t.size();
    std::uint64_t l = 0;
    while (i + l <= n && j + l <= n && t[i + l - 1] == t[j + l - 1]) ++l;
    return l;
}

std::uint64_t naive_lpf_at(Bytes t, std::uint64_t i, std::int64_t* prevocc) {
    std::uint64_t best = 0;
    std::int64_t where = -1;
    for (std::uint64_t j = 1; j < i; ++j) {
        const std::uint64_t l = naive_lcp(t, i, j);
        if (l > best) {
            best = l;
            where = static_cast<std::int64_t>(j);
        }
    }
    if (prevocc) *prevocc = where;
    return best;
}

LpfPrevOcc naive_lpf_prevocc(Bytes t) {
    const std::size_t n = t.size();
    LpfPrevOcc out{std::vector<std::uint64_t>(n + 1, 0), std::vector<std::int64_t>(n + 1, -1)};
    for (std::uint64_t i = 1; i <= n; ++i) out.lpf[i] = naive_lpf_at(t, i, &out.prevocc[i]);
    return out;
}

Factorization naive_factorize(Bytes t) {
    Factorization f;
    f.n = t.size();
    std::uint64_t i = 1;
    while (i <= t.size()) {
        std::int64_t src = -1;
        const std::uint64_t l = naive_lpf_at(t, i, &src);
        if (l == 0) {
            f.factors.push_back(Factor::literal(t[i - 1]));
            ++i;
        } else {
            f.factors.push_back(Factor::copy(l, static_cast<std::uint64_t>(src)));
            i += l;
        }
    }
    return f;
}

std::vector<char> naive_types(Bytes t) {
    const std::size_t n = t.size();
    std::vector<char> ty(n + 2, 'S');
    ty[0] = '?';
    for (std::uint64_t i = 1; i <= n; ++i) ty[i] = suffix_less(t, i, i + 1) ? 'S' : 'L';
    return ty;
}

std::vector<std::uint64_t> naive_lms_positions(Bytes t) {
    const std::vector<char> ty = naive_types(t);
    std::vector<std::uint64_t> lms;
    for (std::uint64_t i = 2; i <= t.size(); ++i)
        if (ty[i] == 'S' && ty[i - 1] == 'L') lms.push_back(i);
    return lms;
}

} // namespace lzbg::oracle
