#pragma once

// Enumeration of the r-dimensional subspaces of GF(q)^k, each visited once as
// its canonical RREF basis.

#include <cstdint>
#include <limits>
#include <vector>

#include "caps.hpp"
#include "matrix.hpp"

namespace ccdim {

/// Number of r-dimensional subspaces of GF(q)^k, saturating at UINT64_MAX.
/// Used for cap checks; the exact value lives in formulas.hpp.
inline std::uint64_t subspace_count(std::uint64_t q, std::size_t k, std::size_t r) {
    if (r > k) return 0;
    // Sum over pivot sets of q^(#free entries); computed by the standard recurrence
    // [k, r] = [k-1, r-1] + q^r [k-1, r] in long double then checked exactly in uint64.
    std::vector<std::vector<long double>> t(k + 1, std::vector<long double>(r + 1, 0.0L));
    for (std::size_t a = 0; a <= k; ++a) {
        t[a][0] = 1;
        for (std::size_t b = 1; b <= std::min(a, r); ++b) {
            long double qb = 1;
            for (std::size_t i = 0; i < b; ++i) qb *= static_cast<long double>(q);
            t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? qb * t[a - 1][b] : 0.0L);
        }
    }
    const long double v = t[k][r];
    if (v >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(v + 0.5L);
}

/// Calls fn(basis) for every r-dimensional subspace of GF(q)^k, where basis is
/// the r x k RREF matrix. Order: pivot sets lexicographically, then the free
/// entries as a row-major base-q counter (last free entry fastest). fn returns
/// false to stop early; the function returns false iff stopped.
template <class Fn>
bool for_each_subspace(const Field& field, std::size_t k, std::size_t r, Fn&& fn, const Caps& caps = default_caps()) {
    if (r > k) return true;
    check_cap(subspace_count(static_cast<std::uint64_t>(field.q()), k, r), caps.subspaces, "subspace enumeration");
    Matrix basis(field, r, k);
    if (r == 0) return static_cast<bool>(fn(static_cast<const Matrix&>(basis)));

    const Elem q = static_cast<Elem>(field.q());
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) piv[i] = i;

    struct Slot {
        std::size_t row, col;
    };
    std::vector<Slot> free;
    while (true) {
        for (std::size_t i = 0; i < r; ++i) std::fill(basis.row(i).begin(), basis.row(i).end(), 0);
        std::vector<bool> is_pivot(k, false);
        for (auto c : piv) is_pivot[c] = true;
        free.clear();
        for (std::size_t i = 0; i < r; ++i) {
            basis(i, piv[i]) = 1;
            for (std::size_t j = piv[i] + 1; j < k; ++j)
                if (!is_pivot[j]) free.push_back({i, j});
        }

        while (true) {
            if (!fn(static_cast<const Matrix&>(basis))) return false;
            // Advance the free-entry counter.
            std::size_t pos = free.size();
            while (pos > 0) {
                auto& s = free[pos - 1];
                Elem& e = basis(s.row, s.col);
                if (++e < q) break;
                e = 0;
                --pos;
            }
            if (pos == 0) break;
        }

        // Next pivot combination in lexicographic order.
        std::size_t i = r;
        while (i > 0 && piv[i - 1] == k - r + (i - 1)) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
    return true;
}

}  // namespace ccdim
