#pragma once

// Linear [n,k] codes over GF(q) and the code-level quantities built on them:
// duals, minimum weight, shortening and puncturing, subcode enumeration,
// support weight distributions and the covering dimension.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "caps.hpp"
#include "matrix.hpp"
#include "subspaces.hpp"

namespace ccdim {

/// Zero-based coordinate indices.
using CoordSet = std::vector<std::size_t>;

enum class RankPolicy {
    strict,   // dependent generator rows are an error
    lenient,  // dependent generator rows are replaced by a basis
};

class LinearCode {
public:
    static LinearCode from_generator(const Matrix& g, RankPolicy policy = RankPolicy::strict) {
        if (g.empty()) throw DomainError("generator matrix is empty");
        auto r = rref(g);
        if (r.rank == 0) throw DomainError("generator spans the zero code");
        if (r.rank < g.rows() && policy == RankPolicy::strict)
            throw DomainError("generator rows are linearly dependent (rank " + std::to_string(r.rank) + " < " +
                              std::to_string(g.rows()) + ")");
        LinearCode c(r.rank < g.rows() ? r.reduced.select_rows(0, r.rank) : g, r.reduced.select_rows(0, r.rank));
        return c;
    }

    const Field& field() const { return g_.field(); }
    std::size_t n() const { return g_.cols(); }
    std::size_t k() const { return g_.rows(); }
    int q() const { return field().q(); }
    const Matrix& generator() const { return g_; }
    /// rref(G): equal for any two generators of the same code.
    const Matrix& canonical() const { return canonical_; }

    bool has_zero_column() const {
        for (std::size_t j = 0; j < n(); ++j) {
            bool zero = true;
            for (std::size_t i = 0; i < k() && zero; ++i) zero = g_(i, j) == 0;
            if (zero) return true;
        }
        return false;
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.canonical_ == b.canonical_; }

private:
    LinearCode(Matrix g, Matrix canonical) : g_(std::move(g)), canonical_(std::move(canonical)) {}

    Matrix g_;
    Matrix canonical_;
};

/// Visits every codeword once. Consecutive codewords differ by one scaled
/// generator row (q-ary modular Gray code over the message digits).
template <class Fn>
void for_each_codeword(const LinearCode& c, Fn&& fn, const Caps& caps = default_caps()) {
    const Field& f = c.field();
    const std::size_t n = c.n(), k = c.k();
    const int q = f.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= static_cast<std::uint64_t>(q);
        if (total > caps.codewords) check_cap(total, caps.codewords, "codeword enumeration");
    }
    std::vector<Elem> cw(n, 0);
    std::vector<int> counter(k, 0), gray(k, 0);
    fn(std::span<const Elem>(cw));
    const Matrix& g = c.generator();
    for (std::uint64_t t = 1; t < total; ++t) {
        std::size_t d = 0;
        while (counter[d] == q - 1) counter[d++] = 0;
        ++counter[d];
        const Elem old = static_cast<Elem>(gray[d]);
        gray[d] = (gray[d] + 1) % q;
        const Elem delta = f.sub(static_cast<Elem>(gray[d]), old);
        auto row = g.row(d);
        for (std::size_t j = 0; j < n; ++j)
            if (row[j]) cw[j] = f.axpy(cw[j], delta, row[j]);
        fn(std::span<const Elem>(cw));
    }
}

inline std::size_t weight(std::span<const Elem> v) {
    std::size_t w = 0;
    for (auto e : v) w += e != 0;
    return w;
}

/// Codeword count per Hamming weight, index 0..n.
inline std::vector<std::uint64_t> weight_distribution(const LinearCode& c, const Caps& caps = default_caps()) {
    std::vector<std::uint64_t> out(c.n() + 1, 0);
    for_each_codeword(c, [&](std::span<const Elem> v) { ++out[weight(v)]; }, caps);
    return out;
}

inline std::size_t min_weight(const LinearCode& c, const Caps& caps = default_caps()) {
    std::size_t best = c.n() + 1;
    for_each_codeword(
        c,
        [&](std::span<const Elem> v) {
            auto w = weight(v);
            if (w && w < best) best = w;
        },
        caps);
    return best;
}

/// The [n, n-k] dual code. Throws DomainError when k = n.
inline LinearCode dual(const LinearCode& c) {
    if (c.k() == c.n()) throw DomainError("dual of a full-space code is the zero code");
    return LinearCode::from_generator(kernel_basis(c.generator()));
}

/// Size of the smallest linearly dependent set of columns of G, searching
/// subsets of increasing size; n + 1 if the columns are independent.
inline std::size_t smallest_dependent_columns(const LinearCode& c, const Caps& caps = default_caps()) {
    const auto cols = c.generator().columns();
    const std::size_t n = c.n();
    std::uint64_t work = 0;
    for (std::size_t s = 1; s <= std::min(n, c.k() + 1); ++s) {
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            check_cap(++work, caps.code_subsets, "dependent column search");
            EchelonBasis b(c.field(), c.k());
            bool independent = true;
            for (auto j : idx)
                if (!b.insert(cols[j])) {
                    independent = false;
                    break;
                }
            if (!independent) return s;
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == n - s + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n + 1;
}

/// d(C^perp), with the Singleton convention n+1 when C^perp is the zero code.
/// Small duals are enumerated; otherwise d(C^perp) is found as the smallest
/// dependent column set of G.
inline std::size_t dual_distance(const LinearCode& c, const Caps& caps = default_caps()) {
    if (c.k() == c.n()) return c.n() + 1;
    long double dual_size = 1;
    for (std::size_t i = 0; i < c.n() - c.k(); ++i) dual_size *= c.q();
    if (dual_size <= static_cast<long double>(std::uint64_t{1} << 20)) return min_weight(dual(c), caps);
    return smallest_dependent_columns(c, caps);
}

namespace detail {

inline CoordSet complement(std::size_t n, const CoordSet& x) {
    std::vector<bool> in(n, false);
    for (auto i : x) {
        if (i >= n) throw DomainError("coordinate " + std::to_string(i) + " out of range");
        in[i] = true;
    }
    CoordSet out;
    for (std::size_t i = 0; i < n; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

}  // namespace detail

/// Generator rows of C/X: codewords vanishing on X, restricted to E - X.
/// May have zero rows (the shortened code is the zero code).
inline Matrix shortened_generator(const LinearCode& c, const CoordSet& x) {
    const CoordSet keep = detail::complement(c.n(), x);
    const Matrix& g = c.generator();
    Matrix messages = x.empty() ? Matrix::identity(c.field(), c.k()) : kernel_basis(g.select_columns(x).transpose());
    return (messages * g).select_columns(keep);
}

/// C/X. Throws DomainError when every nonzero codeword meets X.
inline LinearCode shorten(const LinearCode& c, const CoordSet& x) {
    Matrix g = shortened_generator(c, x);
    if (g.rows() == 0 || g.cols() == 0) throw DomainError("shortening leaves the zero code");
    return LinearCode::from_generator(g);
}

/// C \ X. Throws DomainError for X = E or when the remaining coordinates are all zero.
inline LinearCode puncture(const LinearCode& c, const CoordSet& x) {
    const CoordSet keep = detail::complement(c.n(), x);
    if (keep.empty()) throw DomainError("cannot puncture every coordinate");
    return LinearCode::from_generator(c.generator().select_columns(keep), RankPolicy::lenient);
}

/// Visits every r-dimensional subcode once, passing its message-space basis
/// (an r x k RREF matrix); the subcode basis is that matrix times G.
template <class Fn>
bool for_each_subcode(const LinearCode& c, std::size_t r, Fn&& fn, const Caps& caps = default_caps()) {
    if (r < 1 || r > c.k()) throw DomainError("subcode dimension must lie in [1, k]");
    return for_each_subspace(c.field(), c.k(), r, std::forward<Fn>(fn), caps);
}

namespace detail {

// Column j of G stored contiguously, so support tests walk memory linearly.
struct ColumnCache {
    std::size_t n, k;
    std::vector<Elem> cols;  // n blocks of k entries

    explicit ColumnCache(const Matrix& g) : n(g.cols()), k(g.rows()), cols(n * k) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < k; ++i) cols[j * k + i] = g(i, j);
    }
    std::span<const Elem> column(std::size_t j) const { return {cols.data() + j * k, k}; }
};

// |Supp(B G)| for a message-space basis B: coordinate j is covered when some
// row of B has nonzero inner product with column j.
inline std::size_t subcode_support_weight(const Field& f, const Matrix& basis, const ColumnCache& cc) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < cc.n; ++j) {
        auto col = cc.column(j);
        for (std::size_t i = 0; i < basis.rows(); ++i)
            if (dot(f, basis.row(i), col) != 0) {
                ++w;
                break;
            }
    }
    return w;
}

}  // namespace detail

/// A_i^(r)(C) for i = 0..n.
struct SupportWeightTable {
    std::size_t r = 0;
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto c : counts) s += c;
        return s;
    }
    std::uint64_t at(std::size_t i) const { return i < counts.size() ? counts[i] : 0; }
};

inline SupportWeightTable support_weight_distribution(const LinearCode& c, std::size_t r,
                                                      const Caps& caps = default_caps()) {
    SupportWeightTable t{r, std::vector<std::uint64_t>(c.n() + 1, 0)};
    const detail::ColumnCache cc(c.generator());
    for_each_subcode(
        c, r,
        [&](const Matrix& b) {
            ++t.counts[detail::subcode_support_weight(c.field(), b, cc)];
            return true;
        },
        caps);
    return t;
}

/// Covering dimension, or nullopt for infinity.
struct GammaResult {
    std::optional<std::size_t> value;
    /// Subcode algorithm: basis (value x n) of a full-support subcode.
    /// Avoidance algorithm: basis ((k - value) x k) of a subspace of GF(q)^k
    /// containing no column of G.
    std::optional<Matrix> witness;

    bool infinite() const { return !value.has_value(); }
};

/// Smallest r with a full-support r-dimensional subcode. Subcodes are tried in
/// increasing r and, within r, in subspace-stream order; the first hit is the witness.
inline GammaResult covering_dimension_subcode(const LinearCode& c, const Caps& caps = default_caps()) {
    if (c.has_zero_column()) return {};
    const detail::ColumnCache cc(c.generator());
    for (std::size_t r = 1; r <= c.k(); ++r) {
        std::optional<Matrix> hit;
        for_each_subcode(
            c, r,
            [&](const Matrix& b) {
                if (detail::subcode_support_weight(c.field(), b, cc) != c.n()) return true;
                hit = b * c.generator();
                return false;
            },
            caps);
        if (hit) return {r, std::move(hit)};
    }
    throw CrossCheckFailure("loopless code without a full-support subcode");
}

/// Smallest m such that some (k - m)-dimensional subspace of GF(q)^k contains
/// no column of G. Membership is decided by reducing each column against the
/// subspace's RREF basis.
inline GammaResult covering_dimension_avoidance(const LinearCode& c, const Caps& caps = default_caps()) {
    if (c.has_zero_column()) return {};
    const Field& f = c.field();
    const std::size_t k = c.k();
    const auto columns = c.generator().columns();
    std::vector<Elem> work(k);
    for (std::size_t m = 1; m <= k; ++m) {
        std::optional<Matrix> hit;
        for_each_subspace(
            f, k, k - m,
            [&](const Matrix& u) {
                std::vector<std::size_t> piv(u.rows());
                for (std::size_t i = 0; i < u.rows(); ++i) {
                    std::size_t p = 0;
                    while (u(i, p) == 0) ++p;
                    piv[i] = p;
                }
                for (const auto& col : columns) {
                    work = col;
                    for (std::size_t i = 0; i < u.rows(); ++i) {
                        const Elem a = work[piv[i]];
                        if (a == 0) continue;
                        const Elem factor = f.neg(a);
                        for (std::size_t j = 0; j < k; ++j) work[j] = f.axpy(work[j], factor, u(i, j));
                    }
                    if (weight(work) == 0) return true;  // column lies in u
                }
                hit = u;
                return false;
            },
            caps);
        if (hit) return {m, std::move(hit)};
    }
    throw CrossCheckFailure("loopless code where even the zero subspace meets a column");
}

}  // namespace ccdim
