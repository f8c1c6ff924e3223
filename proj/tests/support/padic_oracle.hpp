#pragma once

// Test-only oracle for p-adic diagonal isotropy, sharing nothing with the
// library: decides whether sum a_i x_i^d = 0 (mod p^K) has a solution with
// at least one unit coordinate, entirely by modular enumeration and value-set
// dynamic programming over Z / p^K.
//
// Precision: K = d, with coefficient valuations normalized into [0, d).  Any
// coordinate divisible by p contributes valuation >= d, i.e. exactly 0 mod
// p^d, so only unit coordinates carry values.  A primitive solution then has
// a minimal-valuation class gamma <= d-1 whose unit subsum vanishes mod
// p^(gamma+1); dividing by p^gamma gives a unit zero mod p where the
// derivative d*a*x^(d-1) is a unit (p coprime to d), so Newton's lemma lifts
// it to Z_p.  Conversely an exact zero scales to a primitive one and reduces
// mod p^d.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace padic_oracle {

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// coefficients as (unit lift, valuation); the valuation may be any integer
inline bool truncated_isotropic(
    std::uint32_t p, std::uint32_t d,
    const std::vector<std::pair<std::uint32_t, std::int64_t>>& coeffs) {
    if (d == 0 || p < 2 || d % p == 0 || coeffs.empty())
        throw std::invalid_argument("oracle needs p prime to d and a real form");

    const std::uint32_t K = d;
    std::uint64_t M = 1;
    for (std::uint32_t i = 0; i < K; ++i) {
        if (M > (std::uint64_t(1) << 26) / p)
            throw std::invalid_argument("oracle modulus too large");
        M *= p;
    }

    const std::size_t n = coeffs.size();

    // per coefficient: the distinct values of p^(v_i) a_i u^d over units u
    std::vector<std::vector<std::uint32_t>> unit(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t v = coeffs[i].second % std::int64_t(d);
        if (v < 0) v += d;
        std::uint64_t a = coeffs[i].first % M;
        for (std::int64_t j = 0; j < v; ++j) a = a * p % M;
        if (a == 0) throw std::invalid_argument("oracle coefficient vanished");

        std::vector<char> seen(M, 0);
        for (std::uint64_t x = 1; x < M; ++x) {
            if (x % p == 0) continue;
            std::uint64_t val = a * powmod(x, d, M) % M;
            if (!seen[val]) {
                seen[val] = 1;
                unit[i].push_back(std::uint32_t(val));
            }
        }
    }

    // Bitset DP over Z/M: any = sums reachable so far (non-unit coordinates
    // add 0), prim = sums that used at least one unit coordinate.  Rotated
    // reads come from ext, which holds any's bits twice in a row, so the
    // sum-with-t transition is two shifts per word.  A primitive zero of a
    // prefix extends by zero coordinates, so prim hitting 0 ends early.
    const std::uint64_t nw = (M + 63) / 64;
    const std::uint64_t ew = (2 * M + 63) / 64 + 2;
    std::vector<std::uint64_t> any(nw, 0), prim(nw, 0), step(nw, 0), ext(ew, 0);
    any[0] = 1;
    const std::uint64_t tail_mask =
        (M & 63) ? (std::uint64_t(1) << (M & 63)) - 1 : ~std::uint64_t(0);

    for (std::size_t i = 0; i < n; ++i) {
        std::fill(ext.begin(), ext.end(), 0);
        for (std::uint64_t j = 0; j < nw; ++j) ext[j] = any[j];
        const std::uint64_t off = M >> 6, sh2 = M & 63;
        for (std::uint64_t j = 0; j < nw; ++j) {
            if (sh2) {
                ext[off + j] |= any[j] << sh2;
                ext[off + j + 1] |= any[j] >> (64 - sh2);
            } else {
                ext[off + j] |= any[j];
            }
        }

        std::fill(step.begin(), step.end(), 0);
        for (std::uint32_t t : unit[i]) {
            const std::uint64_t o = M - t;  // window start: bit s reads s - t
            const std::uint64_t w0 = o >> 6, sh = o & 63;
            if (sh == 0) {
                for (std::uint64_t j = 0; j < nw; ++j) step[j] |= ext[w0 + j];
            } else {
                for (std::uint64_t j = 0; j < nw; ++j)
                    step[j] |= (ext[w0 + j] >> sh) | (ext[w0 + j + 1] << (64 - sh));
            }
        }
        step[nw - 1] &= tail_mask;

        for (std::uint64_t j = 0; j < nw; ++j) {
            any[j] |= step[j];
            prim[j] |= step[j];
        }
        if (prim[0] & 1) return true;
    }
    return (prim[0] & 1) != 0;
}

}  // namespace padic_oracle
