#pragma once

// Named code families, projective point sets, and the block construction
// M = X^T u Y_V^T u Z^T together with block / minimal-block verification.
//
// Dimension convention: an r-block in PG(k-1,q) is checked against vector
// subspaces of GF(q)^k of vector dimension k - r. Each such subspace is the
// null space of an r x k matrix of rank r, which is what the sweep enumerates.
// With this reading a minimal r-block P gives gamma(code_from_points(P)) = r + 1.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "code.hpp"
#include "subspaces.hpp"

namespace ccdim {

using Vec = std::vector<Elem>;

/// Base-q integer of v with v[0] most significant; the canonical point order.
inline std::uint64_t vector_code(const Vec& v, int q) {
    std::uint64_t out = 0;
    for (auto e : v) out = out * static_cast<std::uint64_t>(q) + e;
    return out;
}

/// Scales v so its first nonzero coordinate is 1. v must be nonzero.
inline Vec normalize_point(const Field& f, Vec v) {
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (it == v.end()) throw DomainError("the zero vector is not a projective point");
    const Elem s = f.inv(*it);
    for (auto& e : v) e = f.mul(e, s);
    return v;
}

inline bool is_normalized(const Vec& v) {
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    return it != v.end() && *it == 1;
}

/// Number of points of PG(k-1, q), saturating.
inline std::uint64_t projective_point_count(std::uint64_t q, std::size_t k) {
    std::uint64_t total = 0, pw = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total += pw;
        if (pw > (std::uint64_t{1} << 40)) return UINT64_MAX;
        pw *= q;
    }
    return total;
}

/// All points of PG(k-1, q) as normalized vectors in canonical order.
inline std::vector<Vec> projective_points(const Field& f, std::size_t k, const Caps& caps = default_caps()) {
    const std::uint64_t q = static_cast<std::uint64_t>(f.q());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        check_cap(total, caps.codewords, "projective point listing");
    }
    std::vector<Vec> out;
    Vec v(k, 0);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = k; i-- > 0; c /= q) v[i] = static_cast<Elem>(c % q);
        if (is_normalized(v)) out.push_back(v);
    }
    return out;
}

/// Distinct points of PG(k-1,q), normalized and in canonical order.
class PointSet {
public:
    PointSet(Field field, std::size_t k, std::vector<Vec> points) : field_(std::move(field)), k_(k) {
        for (auto& p : points) {
            if (p.size() != k) throw DomainError("point has wrong length");
            p = normalize_point(field_, std::move(p));
        }
        std::sort(points.begin(), points.end(),
                  [&](const Vec& a, const Vec& b) { return vector_code(a, field_.q()) < vector_code(b, field_.q()); });
        if (std::adjacent_find(points.begin(), points.end()) != points.end())
            throw DomainError("point set contains proportional vectors");
        points_ = std::move(points);
    }

    const Field& field() const { return field_; }
    std::size_t k() const { return k_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Vec>& points() const { return points_; }
    bool contains(const Vec& v) const {
        const Vec n = normalize_point(field_, v);
        return std::binary_search(points_.begin(), points_.end(), n, [&](const Vec& a, const Vec& b) {
            return vector_code(a, field_.q()) < vector_code(b, field_.q());
        });
    }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.field_ == b.field_ && a.k_ == b.k_ && a.points_ == b.points_;
    }

private:
    Field field_;
    std::size_t k_;
    std::vector<Vec> points_;
};

/// Code whose generator columns are the points, in canonical order.
inline LinearCode code_from_points(const PointSet& p) {
    if (p.size() == 0) throw DomainError("empty point set");
    const Matrix g = Matrix::from_columns(p.field(), p.k(), p.points());
    if (rank(g) < p.k()) throw DomainError("points do not span GF(q)^k");
    return LinearCode::from_generator(g);
}

/// [(q^k-1)/(q-1), k] code with every projective point as a column.
inline LinearCode dual_hamming(const Field& f, std::size_t k, const Caps& caps = default_caps()) {
    if (k < 1) throw DomainError("dual Hamming code needs k >= 1");
    return code_from_points(PointSet(f, k, projective_points(f, k, caps)));
}

/// Reed-Solomon code evaluating polynomials of degree < k at the first n field
/// elements (encoding order); n = q + 1 appends the point at infinity e_k.
/// Throws CrossCheckFailure if the result is not MDS.
inline LinearCode reed_solomon(const Field& f, std::size_t n, std::size_t k, const Caps& caps = default_caps()) {
    const std::size_t q = static_cast<std::size_t>(f.q());
    if (k < 1 || k > n) throw DomainError("Reed-Solomon code needs 1 <= k <= n");
    if (n > q + 1) throw DomainError("Reed-Solomon length exceeds q + 1");
    Matrix g(f, k, n);
    for (std::size_t j = 0; j < std::min(n, q); ++j) {
        const Elem a = static_cast<Elem>(j);
        for (std::size_t i = 0; i < k; ++i) g(i, j) = f.pow(a, i);
    }
    if (n == q + 1) g(k - 1, q) = 1;
    auto c = LinearCode::from_generator(g);
    if (min_weight(c, caps) != n - k + 1) throw CrossCheckFailure("Reed-Solomon construction is not MDS");
    return c;
}

/// Binary [n, n-1] code with generator [I_{n-1} | 1].
inline LinearCode binary_parity_dual(std::size_t n) {
    if (n < 2) throw DomainError("parity code needs n >= 2");
    const Field f = Field::make(2, 1);
    Matrix g(f, n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        g(i, i) = 1;
        g(i, n - 1) = 1;
    }
    return LinearCode::from_generator(g);
}

/// Parameters of the block construction. T and the supports of V are
/// zero-based coordinate indices.
struct BlockSpec {
    Field field;
    std::size_t k = 0;
    std::size_t m = 0;
    CoordSet t;
    std::vector<Vec> v;

    /// T = the last m coordinates; V = the first m-1 points supported off T.
    static BlockSpec with_defaults(const Field& f, std::size_t k, std::size_t m) {
        if (m < 1 || m > k) throw DomainError("block construction needs 1 <= m <= k");
        BlockSpec s{f, k, m, {}, {}};
        for (std::size_t j = k - m; j < k; ++j) s.t.push_back(j);
        for (const auto& p : projective_points(f, k)) {
            if (s.v.size() + 1 >= m) break;
            if (s.disjoint_from_t(p)) s.v.push_back(p);
        }
        s.validate();
        return s;
    }

    bool disjoint_from_t(const Vec& p) const {
        return std::all_of(t.begin(), t.end(), [&](std::size_t j) { return p[j] == 0; });
    }

    /// (q^(k-m) - 1)/(q - 1) >= m - 1: enough points avoid T to pick V.
    static bool feasible(std::uint64_t q, std::size_t k, std::size_t m) {
        if (m < 1 || m > k) return false;
        return projective_point_count(q, k - m) >= m - 1;
    }

    void validate() const {
        if (m < 1 || m > k) throw DomainError("block construction needs 1 <= m <= k");
        if (!feasible(static_cast<std::uint64_t>(field.q()), k, m))
            throw DomainError("infeasible block parameters: too few points avoid T");
        CoordSet sorted = t;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.size() != m || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
            (!sorted.empty() && sorted.back() >= k))
            throw DomainError("T must be an m-subset of the coordinates");
        if (v.size() != m - 1) throw DomainError("V must contain m - 1 points");
        std::vector<Vec> seen;
        for (const auto& p : v) {
            if (p.size() != k) throw DomainError("V point has wrong length");
            const Vec n = normalize_point(field, p);
            if (!disjoint_from_t(n)) throw DomainError("V point meets T");
            if (std::find(seen.begin(), seen.end(), n) != seen.end()) throw DomainError("V points are not distinct");
            seen.push_back(n);
        }
    }
};

/// M = X^T u Y_V^T u Z^T.
inline PointSet block_points(const BlockSpec& spec) {
    spec.validate();
    const Field& f = spec.field;
    std::vector<bool> in_t(spec.k, false);
    for (auto j : spec.t) in_t[j] = true;
    std::vector<Vec> vs;
    for (const auto& p : spec.v) vs.push_back(normalize_point(f, p));

    std::vector<Vec> out;
    for (const auto& x : projective_points(f, spec.k)) {
        std::size_t meets = 0, off = 0;
        for (std::size_t j = 0; j < spec.k; ++j) {
            if (!x[j]) continue;
            if (in_t[j]) ++meets;
            else ++off;
        }
        if (meets == 0) {
            out.push_back(x);  // X^T
        } else if (meets == 1) {
            // Excluded when x = v_i + lambda e_j, i.e. the off-T part of x is a multiple of some v_i.
            bool excluded = false;
            if (off > 0) {
                Vec rest = x;
                for (std::size_t j = 0; j < spec.k; ++j)
                    if (in_t[j]) rest[j] = 0;
                rest = normalize_point(f, rest);
                excluded = std::find(vs.begin(), vs.end(), rest) != vs.end();
            }
            if (!excluded) out.push_back(x);  // Y_V^T
        } else if (meets == 2 && off == 0) {
            out.push_back(x);  // Z^T
        }
    }
    return PointSet(f, spec.k, std::move(out));
}

/// M_j = points of P with coordinate j nonzero.
inline std::vector<Vec> points_meeting(const PointSet& p, std::size_t j) {
    std::vector<Vec> out;
    for (const auto& x : p.points())
        if (x[j]) out.push_back(x);
    return out;
}

struct BlockVerdict {
    bool is_block = false;
    /// When not a block: basis of a (k-r)-dimensional subspace containing no point.
    std::optional<Matrix> counterexample;
};

namespace detail {

// Visits each (k-r)-dimensional subspace U as the r x k RREF matrix W with U = null(W),
// passing the indices of the points of p that lie in U.
template <class Fn>
void for_each_complement_subspace(const PointSet& p, std::size_t r, Fn&& fn, const Caps& caps) {
    if (r < 1 || r >= p.k()) throw DomainError("block order r must satisfy 1 <= r <= k - 1");
    const Field& f = p.field();
    std::vector<std::size_t> inside;
    for_each_subspace(
        f, p.k(), r,
        [&](const Matrix& w) {
            inside.clear();
            for (std::size_t idx = 0; idx < p.size(); ++idx) {
                const auto& x = p.points()[idx];
                bool in = true;
                for (std::size_t i = 0; i < w.rows() && in; ++i) in = dot(f, w.row(i), x) == 0;
                if (in) inside.push_back(idx);
            }
            return fn(w, static_cast<const std::vector<std::size_t>&>(inside));
        },
        caps);
}

}  // namespace detail

/// True iff every (k-r)-dimensional subspace of GF(q)^k contains a point of P.
inline BlockVerdict is_r_block(const PointSet& p, std::size_t r, const Caps& caps = default_caps()) {
    BlockVerdict v{true, std::nullopt};
    detail::for_each_complement_subspace(
        p, r,
        [&](const Matrix& w, const std::vector<std::size_t>& inside) {
            if (!inside.empty()) return true;
            v.is_block = false;
            v.counterexample = kernel_basis(w);
            return false;
        },
        caps);
    return v;
}

struct MinimalBlockVerdict {
    bool is_block = false;
    bool minimal = false;
    /// Per point: basis of a tangent (a (k-r)-dim subspace meeting P only in that point).
    std::vector<std::optional<Matrix>> tangents;
    std::optional<Matrix> counterexample;

    /// Index of the first point without a tangent, if any.
    std::optional<std::size_t> untangented_point() const {
        for (std::size_t i = 0; i < tangents.size(); ++i)
            if (!tangents[i]) return i;
        return std::nullopt;
    }
};

/// An r-block is minimal when every point has a tangent.
inline MinimalBlockVerdict is_minimal_block(const PointSet& p, std::size_t r, const Caps& caps = default_caps()) {
    MinimalBlockVerdict v;
    v.is_block = true;
    v.tangents.assign(p.size(), std::nullopt);
    std::size_t missing = p.size();
    detail::for_each_complement_subspace(
        p, r,
        [&](const Matrix& w, const std::vector<std::size_t>& inside) {
            if (inside.empty()) {
                v.is_block = false;
                v.counterexample = kernel_basis(w);
                return false;
            }
            if (inside.size() == 1 && !v.tangents[inside[0]]) {
                v.tangents[inside[0]] = kernel_basis(w);
                --missing;
            }
            return true;
        },
        caps);
    v.minimal = v.is_block && missing == 0;
    return v;
}

}  // namespace ccdim
