#pragma once

// The matroid M_C induced by a code: ground set = coordinates, rank of a set =
// rank of the corresponding columns of G.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "code.hpp"
#include "formulas.hpp"

namespace ccdim {

/// Integer polynomial, coefficient i multiplies lambda^i.
struct CharPoly {
    std::vector<std::int64_t> coeffs;

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
    }
    int degree() const {
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
            if (coeffs[i] != 0) return i;
        return -1;
    }
    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    /// e.g. "x^2 - 3x + 2"; "0" for the zero polynomial.
    std::string to_string() const {
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const auto c = coeffs[i];
            if (c == 0) continue;
            const auto mag = c < 0 ? -c : c;
            if (out.empty()) out += c < 0 ? "-" : "";
            else out += c < 0 ? " - " : " + ";
            if (mag != 1 || i == 0) out += std::to_string(mag);
            if (i >= 1) out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }
    friend bool operator==(const CharPoly& a, const CharPoly& b) {
        const std::size_t len = std::max(a.coeffs.size(), b.coeffs.size());
        for (std::size_t i = 0; i < len; ++i) {
            const auto x = i < a.coeffs.size() ? a.coeffs[i] : 0;
            const auto y = i < b.coeffs.size() ? b.coeffs[i] : 0;
            if (x != y) return false;
        }
        return true;
    }
};

inline BigInt big_pow(std::uint64_t base, std::size_t e) { return power(BigInt(base), static_cast<std::int64_t>(e)); }

/// A GF(q)-represented matroid: one vector of GF(q)^dim per ground element.
class MatroidView {
public:
    MatroidView(Field field, std::size_t dim, std::vector<std::vector<Elem>> columns)
        : field_(std::move(field)), dim_(dim), columns_(std::move(columns)) {}

    static MatroidView of_code(const LinearCode& c) { return {c.field(), c.k(), c.generator().columns()}; }

    const Field& field() const { return field_; }
    std::size_t size() const { return columns_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<Elem>>& columns() const { return columns_; }

    std::size_t rank_of(const CoordSet& x) const {
        EchelonBasis b(field_, dim_);
        for (auto e : x) {
            if (e >= size()) throw DomainError("ground element out of range");
            b.insert(columns_[e]);
        }
        return b.rank();
    }

    std::size_t rank() const {
        EchelonBasis b(field_, dim_);
        for (const auto& c : columns_) b.insert(c);
        return b.rank();
    }

    bool has_loop() const {
        return std::any_of(columns_.begin(), columns_.end(), [](const auto& c) { return weight(c) == 0; });
    }

    /// M/F on E - F (in increasing order): each remaining vector is reduced
    /// modulo span(F), which realises rank_{M/F}(X) = rank(X u F) - rank(F).
    MatroidView contract(const CoordSet& f) const {
        EchelonBasis span(field_, dim_);
        for (auto e : f) span.insert(columns_.at(e));
        std::vector<bool> in_f(size(), false);
        for (auto e : f) in_f[e] = true;
        std::vector<std::vector<Elem>> rest;
        for (std::size_t e = 0; e < size(); ++e) {
            if (in_f[e]) continue;
            auto v = columns_[e];
            span.reduce(v);
            rest.push_back(std::move(v));
        }
        return {field_, dim_, std::move(rest)};
    }

    /// M \ D (deletion), keeping the remaining elements in order.
    MatroidView remove(const CoordSet& d) const {
        std::vector<bool> gone(size(), false);
        for (auto e : d) gone.at(e) = true;
        std::vector<std::vector<Elem>> rest;
        for (std::size_t e = 0; e < size(); ++e)
            if (!gone[e]) rest.push_back(columns_[e]);
        return {field_, dim_, std::move(rest)};
    }

private:
    Field field_;
    std::size_t dim_;
    std::vector<std::vector<Elem>> columns_;
};

/// p(M; lambda) = sum over X of (-1)^|X| lambda^(rank(E) - rank(X)).
///
/// Depth-first include/exclude sweep over the ground set. The columns chosen
/// so far are kept as a stack of semi-echelon rows: including an element
/// pushes at most one row, backtracking pops it, so each of the 2^n subsets
/// costs a single column reduction.
inline CharPoly characteristic_polynomial(const MatroidView& mv, const Caps& caps = default_caps()) {
    const std::size_t n = mv.size();
    if (n >= 63) throw CapExceeded("characteristic polynomial: ground set too large");
    check_cap(std::uint64_t{1} << n, caps.subsets, "characteristic polynomial subset sweep");
    const std::size_t rk = mv.rank();
    const std::size_t dim = mv.dim();
    const Field& f = mv.field();

    std::vector<std::int64_t> acc(rk + 1, 0);  // acc[rank(X)] signed count
    std::vector<Elem> rows((rk + 1) * dim);
    std::vector<std::size_t> pivots(rk + 1);
    std::vector<Elem> buf((n + 1) * dim);

    // Iterative DFS; a frame holds the subset rank and sign reached at its depth.
    struct Frame {
        std::size_t depth;
        std::size_t rank;
        int parity;
        int stage;  // 0: exclude branch next, 1: include branch next, 2: done
    };
    std::vector<Frame> stack;
    stack.reserve(n + 2);
    stack.push_back({0, 0, 1, 0});
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.depth == n) {
            acc[fr.rank] += fr.parity;
            stack.pop_back();
            continue;
        }
        if (fr.stage == 0) {
            fr.stage = 1;
            const Frame child{fr.depth + 1, fr.rank, fr.parity, 0};
            stack.push_back(child);
            continue;
        }
        if (fr.stage == 1) {
            fr.stage = 2;
            // Reduce the next column against the current rows.
            Elem* v = buf.data() + fr.depth * dim;
            const auto& col = mv.columns()[fr.depth];
            std::copy(col.begin(), col.end(), v);
            for (std::size_t t = 0; t < fr.rank; ++t) {
                const Elem a = v[pivots[t]];
                if (a == 0) continue;
                const Elem factor = f.neg(a);
                const Elem* row = rows.data() + t * dim;
                for (std::size_t j = 0; j < dim; ++j)
                    if (row[j]) v[j] = f.axpy(v[j], factor, row[j]);
            }
            std::size_t piv = dim;
            for (std::size_t j = 0; j < dim; ++j)
                if (v[j]) {
                    piv = j;
                    break;
                }
            std::size_t child_rank = fr.rank;
            if (piv != dim) {
                const Elem scale = f.inv(v[piv]);
                Elem* row = rows.data() + fr.rank * dim;
                for (std::size_t j = 0; j < dim; ++j) row[j] = f.mul(v[j], scale);
                pivots[fr.rank] = piv;
                child_rank = fr.rank + 1;
            }
            const Frame child{fr.depth + 1, child_rank, -fr.parity, 0};
            stack.push_back(child);
            continue;
        }
        stack.pop_back();  // rows above this frame's rank are simply overwritten later
    }

    CharPoly p;
    p.coeffs.assign(rk + 1, 0);
    for (std::size_t r = 0; r <= rk; ++r) p.coeffs[rk - r] += acc[r];
    return p;
}

/// Smallest j >= 1 with p(M; q^j) > 0; nullopt (infinity) when M has a loop.
inline std::optional<std::size_t> critical_exponent(const MatroidView& mv, const Caps& caps = default_caps()) {
    if (mv.has_loop()) return std::nullopt;
    const CharPoly p = characteristic_polynomial(mv, caps);
    const std::size_t rk = mv.rank();
    for (std::size_t j = 1; j <= std::max<std::size_t>(rk, 1); ++j)
        if (p.eval(big_pow(static_cast<std::uint64_t>(mv.field().q()), j)) > 0) return j;
    throw CrossCheckFailure("loopless matroid with p(q^j) <= 0 for all j <= rank");
}

struct GirthResult {
    std::size_t girth = 0;
    CoordSet circuit;  // a minimal dependent set of that size
};

/// Girth of M_C, read off as the support of a minimum-weight codeword of C^perp.
inline GirthResult circuits_and_girth(const LinearCode& c, const Caps& caps = default_caps()) {
    const LinearCode d = dual(c);
    GirthResult best{c.n() + 1, {}};
    for_each_codeword(
        d,
        [&](std::span<const Elem> v) {
            const auto w = weight(v);
            if (w == 0 || w >= best.girth) return;
            best.girth = w;
            best.circuit.clear();
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j]) best.circuit.push_back(j);
        },
        caps);
    return best;
}

/// Ordered m-tuples of codewords grouped by the union of their supports:
/// entry X (a bitmask over coordinates) counts tuples whose supports cover exactly X.
inline std::vector<std::uint64_t> tuple_union_counts(const LinearCode& c, std::size_t m,
                                                     const Caps& caps = default_caps()) {
    const std::size_t n = c.n();
    if (n > 16) throw CapExceeded("tuple counting needs n <= 16");
    long double total = 1;
    for (std::size_t i = 0; i < c.k() * m; ++i) total *= c.q();
    if (total > 9.0e18L) throw CapExceeded("tuple count does not fit in 64 bits");

    const std::size_t masks = std::size_t{1} << n;
    std::vector<std::uint64_t> single(masks, 0);
    for_each_codeword(
        c,
        [&](std::span<const Elem> v) {
            std::size_t mask = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (v[j]) mask |= std::size_t{1} << j;
            ++single[mask];
        },
        caps);
    std::vector<std::uint64_t> cur(masks, 0);
    cur[0] = 1;  // the empty tuple
    for (std::size_t step = 0; step < m; ++step) {
        std::vector<std::uint64_t> next(masks, 0);
        for (std::size_t a = 0; a < masks; ++a) {
            if (!cur[a]) continue;
            for (std::size_t b = 0; b < masks; ++b)
                if (single[b]) next[a | b] += cur[a] * single[b];
        }
        cur.swap(next);
    }
    return cur;
}

struct CriticalCheck {
    std::uint64_t tuples = 0;  // direct count of m-tuples covering exactly X
    BigInt polynomial;         // p(M_{C/(E-X)}; q^m)
    bool holds() const { return BigInt(tuples) == polynomial; }
};

/// p(M_{C/(E-X)}; q^m), with C/(E-X) built by actually shortening the code.
inline BigInt shortened_charpoly_value(const LinearCode& c, const CoordSet& x, std::size_t m,
                                       const Caps& caps = default_caps()) {
    const CoordSet rest = detail::complement(c.n(), x);
    const Matrix g = shortened_generator(c, rest);
    const MatroidView mv(c.field(), g.rows(), g.columns());
    return characteristic_polynomial(mv, caps).eval(big_pow(static_cast<std::uint64_t>(c.q()), m));
}

inline CriticalCheck critical_theorem_count(const LinearCode& c, const CoordSet& x, std::size_t m,
                                            const Caps& caps = default_caps()) {
    const auto counts = tuple_union_counts(c, m, caps);
    std::size_t mask = 0;
    for (auto e : x) mask |= std::size_t{1} << e;
    return {counts[mask], shortened_charpoly_value(c, x, m, caps)};
}

/// Bitmask of cl(X).
inline std::uint32_t closure_mask(const MatroidView& mv, std::uint32_t x) {
    EchelonBasis b(mv.field(), mv.dim());
    for (std::size_t e = 0; e < mv.size(); ++e)
        if (x >> e & 1u) b.insert(mv.columns()[e]);
    std::uint32_t out = x;
    for (std::size_t e = 0; e < mv.size(); ++e)
        if (!(x >> e & 1u) && b.contains(mv.columns()[e])) out |= 1u << e;
    return out;
}

inline CoordSet mask_to_set(std::uint64_t mask) {
    CoordSet out;
    for (std::size_t e = 0; mask; ++e, mask >>= 1)
        if (mask & 1u) out.push_back(e);
    return out;
}

/// All flats (closed sets), in increasing bitmask order.
inline std::vector<CoordSet> flats(const MatroidView& mv) {
    if (mv.size() > 16) throw CapExceeded("flat enumeration needs n <= 16");
    std::vector<CoordSet> out;
    const std::uint32_t masks = 1u << mv.size();
    for (std::uint32_t x = 0; x < masks; ++x)
        if (closure_mask(mv, x) == x) out.push_back(mask_to_set(x));
    return out;
}

struct TangentialVerdict {
    bool simple = false;               // (i) no loops, no parallel pairs
    bool vanishes = false;             // (ii) p(M; q^r) = 0
    bool contractions_positive = false;// (iii) p(M/F; q^r) > 0 for proper nonempty flats F
    std::optional<CoordSet> failing_flat;

    bool holds() const { return simple && vanishes && contractions_positive; }
};

/// Checks the matroid characterisation (i)-(iii) of a tangential r-block.
inline TangentialVerdict tangential_block_check(const MatroidView& mv, std::size_t r,
                                                const Caps& caps = default_caps()) {
    TangentialVerdict v;
    v.simple = !mv.has_loop();
    for (std::size_t a = 0; a < mv.size() && v.simple; ++a)
        for (std::size_t b = a + 1; b < mv.size() && v.simple; ++b)
            if (mv.rank_of({a, b}) < 2) v.simple = false;
    const BigInt lambda = big_pow(static_cast<std::uint64_t>(mv.field().q()), r);
    v.vanishes = characteristic_polynomial(mv, caps).eval(lambda) == 0;
    v.contractions_positive = true;
    for (const auto& f : flats(mv)) {
        if (f.empty() || f.size() == mv.size()) continue;
        if (characteristic_polynomial(mv.contract(f), caps).eval(lambda) <= 0) {
            v.contractions_positive = false;
            v.failing_flat = f;
            break;
        }
    }
    return v;
}

}  // namespace ccdim
