#pragma once

// Closed forms for support weights and weight distributions, all in exact
// arbitrary-precision arithmetic.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace ccdim {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt power(const BigInt& base, std::int64_t e) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

inline BigInt binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || n < 0 || r > n) return 0;
    BigInt out = 1;
    for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

/// Number of r-dimensional subspaces of GF(q)^k; 0 when r < 0 or r > k.
inline BigInt gaussian_binomial(std::int64_t k, std::int64_t r, std::int64_t q) {
    if (r < 0 || k < 0 || r > k) return 0;
    BigInt num = 1, den = 1;
    for (std::int64_t i = 0; i < r; ++i) {
        num *= power(q, k - i) - 1;
        den *= power(q, i + 1) - 1;
    }
    return num / den;
}

/// Weight distribution A_0..A_n of any [n,k] MDS code over GF(q):
/// A_0 = 1, A_w = 0 for 0 < w < d, and for d <= w <= n
/// A_w = C(n,w) (q-1) sum_{j=0}^{w-d} (-1)^j C(w-1,j) q^(w-d-j), with d = n-k+1.
inline std::vector<BigInt> mds_weight_distribution(std::int64_t n, std::int64_t k, std::int64_t q) {
    if (k < 1 || k > n) throw DomainError("MDS weight distribution needs 1 <= k <= n");
    const std::int64_t d = n - k + 1;
    std::vector<BigInt> a(n + 1, 0);
    a[0] = 1;
    for (std::int64_t w = d; w <= n; ++w) {
        BigInt s = 0;
        for (std::int64_t j = 0; j <= w - d; ++j) {
            BigInt term = binomial(w - 1, j) * power(q, w - d - j);
            s += (j % 2 ? -term : term);
        }
        a[w] = binomial(n, w) * (q - 1) * s;
    }
    return a;
}

/// The only nonzero support weight of the r-dimensional subcodes of the
/// [(q^k-1)/(q-1), k] dual Hamming code, and how many subcodes have it.
struct DualHammingEntry {
    BigInt weight;
    BigInt count;
};

inline DualHammingEntry dual_hamming_swd(std::int64_t q, std::int64_t k, std::int64_t r) {
    if (r < 1 || r > k) throw DomainError("dual Hamming support weights need 1 <= r <= k");
    return {(power(q, k) - power(q, k - r)) / (q - 1), gaussian_binomial(k, r, q)};
}

/// sum_{j=0}^{k-r} (-1)^j [k-j, k-r-j]_q C(n,j).
///
/// Equals A_n^(r)(C) for an [n,k] code C over GF(q) whenever
/// k + 1 - d(C^perp) < r <= k. That window depends on the code, so callers
/// attaching this to a code check it themselves.
inline BigInt klove_An(std::int64_t n, std::int64_t k, std::int64_t q, std::int64_t r) {
    BigInt s = 0;
    for (std::int64_t j = 0; j <= k - r; ++j) {
        BigInt term = gaussian_binomial(k - j, k - r - j, q) * binomial(n, j);
        s += (j % 2 ? -term : term);
    }
    return s;
}

/// A_n^(k-2) for d^perp = 4 written as a completed square plus a constant:
///   value = 1/2 (n - ([k-1,1]_q + 1/2))^2 + (4(q^(k-1)-q)(q^(k-1)-1) - (q^2-1)) / (8(q^2-1)).
struct D4Positivity {
    BigInt value;            // klove_An(n, k, q, k-2)
    BigRational square;      // first summand, >= 0
    BigRational constant;    // second summand, > 0 for k >= 3
    bool consistent() const { return square + constant == BigRational(value); }
    bool positive() const { return value > 0; }
};

inline D4Positivity d4_positivity(std::int64_t n, std::int64_t k, std::int64_t q) {
    if (k < 3) throw DomainError("d4_positivity needs k >= 3");
    D4Positivity out;
    out.value = klove_An(n, k, q, k - 2);
    const BigRational half(1, 2);
    const BigRational shift = BigRational(gaussian_binomial(k - 1, 1, q)) + half;
    const BigRational diff = BigRational(n) - shift;
    out.square = half * diff * diff;
    const BigInt qk1 = power(q, k - 1);
    const BigInt q2m1 = BigInt(q) * q - 1;
    out.constant = BigRational(4 * (qk1 - q) * (qk1 - 1) - q2m1, 8 * q2m1);
    return out;
}

/// Both sides of the Gaussian-Pascal recursion between support weights of an
/// [n,k] code and an [n,k-1] code with the same dual distance delta:
///   A(n,k,k-delta+2) = A(n,k-1,k-delta+1) + q^(k-delta+2) A(n,k-1,k-delta+2).
struct RecursionCheck {
    BigInt lhs;
    BigInt rhs;
    bool holds() const { return lhs == rhs; }
};

inline RecursionCheck recursion_identity(std::int64_t n, std::int64_t k, std::int64_t q, std::int64_t delta) {
    if (delta < 3) throw DomainError("recursion identity needs delta >= 3");
    if (k < delta) throw DomainError("recursion identity needs k >= delta");
    RecursionCheck out;
    out.lhs = klove_An(n, k, q, k - delta + 2);
    out.rhs = klove_An(n, k - 1, q, k - delta + 1) + power(q, k - delta + 2) * klove_An(n, k - 1, q, k - delta + 2);
    return out;
}

/// n A_n = (q-1) A_{n-1} + (q-1) n (-1)^(k-1) C(n-2, k-1), i.e. the relation
/// A_n/(q-1) = A_{n-1}/n + (-1)^(k-1) C(n-2,k-1) cleared of denominators.
inline bool mds_chain_identity(const std::vector<BigInt>& a, std::int64_t k, std::int64_t q) {
    const std::int64_t n = static_cast<std::int64_t>(a.size()) - 1;
    if (n < 2) throw DomainError("chain identity needs n >= 2");
    const BigRational lhs(a[n], q - 1);
    BigRational rhs = BigRational(a[n - 1], n) + BigRational((k - 1) % 2 ? -binomial(n - 2, k - 1) : binomial(n - 2, k - 1));
    return lhs == rhs;
}

}  // namespace ccdim
