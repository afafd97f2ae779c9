#pragma once

// Finite fields GF(p^m) with integer-encoded elements.
//
// An element is the integer sum c_i p^i of its polynomial-basis coefficients,
// i.e. value v stands for sum c_i alpha^i where alpha is a root of the field's
// defining polynomial. 0 and 1 are the additive and multiplicative identities.
//
// The defining polynomial is the monic irreducible of degree m whose
// non-leading coefficients (c_0, ..., c_{m-1}), read as sum c_i p^i, form the
// smallest integer. For m = 1 this is x, which is never used for reduction.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "caps.hpp"
#include "errors.hpp"

namespace ccdim {

using Elem = std::uint16_t;

namespace detail {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), lowest coefficient first, no trailing zeros
// except for the zero polynomial which is empty.
using Poly = std::vector<int>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int inv_mod(int a, int p) {
    int r = 1;
    for (int e = p - 2, b = a % p; e > 0; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

inline Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    const int lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const int factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

inline Poly poly_from_code(std::uint64_t code, int p, int len) {
    Poly out(len, 0);
    for (int i = 0; i < len; ++i, code /= p) out[i] = static_cast<int>(code % p);
    return out;
}

inline bool is_irreducible(const Poly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg <= 1) return deg == 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g = poly_from_code(code, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

struct FieldTables {
    int p = 0;
    int m = 0;
    int q = 0;
    std::vector<int> irr;        // c_0 .. c_m, monic
    std::vector<Elem> exp;       // exp[i] = g^i for i in [0, 2(q-1))
    std::vector<int> log;        // log[x] for x != 0
    std::vector<Elem> neg;
    std::vector<Elem> inv;
    std::vector<Elem> add;       // q*q table, only for q <= kAddTableMax
    static constexpr int kAddTableMax = 256;

    Elem add_digits(Elem a, Elem b) const {
        if (p == 2) return static_cast<Elem>(a ^ b);
        if (m == 1) return static_cast<Elem>((a + b) % p);
        int out = 0;
        for (int place = 1; a || b; place *= p, a /= p, b /= p) out += ((a % p + b % p) % p) * place;
        return static_cast<Elem>(out);
    }

    Elem mul_poly(Elem a, Elem b) const {
        Poly pa = poly_from_code(a, p, m), pb = poly_from_code(b, p, m);
        Poly prod(2 * m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
        if (m > 1) prod = poly_mod(prod, irr, p);
        int out = 0;
        for (int i = static_cast<int>(prod.size()) - 1; i >= 0; --i) out = out * p + prod[i];
        return static_cast<Elem>(out);
    }
};

}  // namespace detail

/// A finite field GF(p^m). Cheap to copy; the lookup tables are shared and immutable.
class Field {
public:
    /// Builds the canonical GF(p^m). Throws DomainError for non-prime p or m < 1,
    /// CapExceeded when p^m is above caps.field_order.
    static Field make(std::uint64_t p, int m, const Caps& caps = default_caps()) {
        if (!detail::is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
        if (m < 1) throw DomainError("field extension degree must be >= 1");
        std::uint64_t q = 1;
        for (int i = 0; i < m; ++i) {
            q *= p;
            if (q > 65535) throw CapExceeded("field order p^m exceeds the 16-bit element encoding");
        }
        check_cap(q, caps.field_order, "field order");

        auto t = std::make_shared<detail::FieldTables>();
        t->p = static_cast<int>(p);
        t->m = m;
        t->q = static_cast<int>(q);
        for (std::uint64_t code = 0;; ++code) {
            detail::Poly f = detail::poly_from_code(code, t->p, m);
            f.push_back(1);
            if (detail::is_irreducible(f, t->p)) {
                t->irr = f;
                break;
            }
        }

        t->neg.resize(q);
        for (int a = 0; a < t->q; ++a) {
            int out = 0;
            for (int place = 1, x = a; x; place *= t->p, x /= t->p) out += ((t->p - x % t->p) % t->p) * place;
            t->neg[a] = static_cast<Elem>(out);
        }

        // Smallest-encoding generator of the multiplicative group.
        const int order = t->q - 1;
        Elem gen = 1;
        for (int g = 1; g < t->q; ++g) {
            int k = 1;
            for (Elem x = static_cast<Elem>(g); x != 1; x = t->mul_poly(x, static_cast<Elem>(g))) ++k;
            if (k == order) {
                gen = static_cast<Elem>(g);
                break;
            }
        }
        t->exp.resize(2 * static_cast<std::size_t>(order) + 1);
        t->log.assign(q, -1);
        Elem x = 1;
        for (int i = 0; i < order; ++i) {
            t->exp[i] = x;
            t->log[x] = i;
            x = t->mul_poly(x, gen);
        }
        for (int i = order; i < 2 * order + 1; ++i) t->exp[i] = t->exp[i - order];

        t->inv.assign(q, 0);
        for (int a = 1; a < t->q; ++a) t->inv[a] = t->exp[(order - t->log[a]) % order];

        if (t->q <= detail::FieldTables::kAddTableMax) {
            t->add.resize(q * q);
            for (int a = 0; a < t->q; ++a)
                for (int b = 0; b < t->q; ++b)
                    t->add[a * t->q + b] = t->add_digits(static_cast<Elem>(a), static_cast<Elem>(b));
        }
        Field f;
        f.t_ = std::move(t);
        return f;
    }

    /// GF(q) for a prime power q.
    static Field of_order(std::uint64_t q, const Caps& caps = default_caps()) {
        if (q < 2) throw DomainError("field order must be >= 2");
        std::uint64_t p = 2;
        while (q % p) ++p;
        int m = 0;
        std::uint64_t rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++m;
        }
        if (rest != 1) throw DomainError(std::to_string(q) + " is not a prime power");
        return make(p, m, caps);
    }

    int p() const { return t_->p; }
    int m() const { return t_->m; }
    int q() const { return t_->q; }
    /// Coefficients c_0..c_m of the defining polynomial (monic, so c_m = 1).
    const std::vector<int>& irreducible() const { return t_->irr; }
    bool contains(std::uint64_t v) const { return v < static_cast<std::uint64_t>(t_->q); }

    Elem add(Elem a, Elem b) const {
        if (!t_->add.empty()) return t_->add[a * t_->q + b];
        return t_->add_digits(a, b);
    }
    Elem neg(Elem a) const { return t_->neg[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, t_->neg[b]); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return t_->exp[t_->log[a] + t_->log[b]];
    }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("inverse of zero");
        return t_->inv[a];
    }
    Elem div(Elem a, Elem b) const {
        if (b == 0) throw DomainError("division by zero");
        return mul(a, t_->inv[b]);
    }
    Elem pow(Elem a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t order = static_cast<std::uint64_t>(t_->q - 1);
        return t_->exp[(static_cast<std::uint64_t>(t_->log[a]) * (e % order)) % order];
    }
    /// a + c*b, the inner step of every elimination loop.
    Elem axpy(Elem a, Elem c, Elem b) const { return add(a, mul(c, b)); }

    /// All q elements in increasing encoding order, 0 first.
    std::vector<Elem> elements() const {
        std::vector<Elem> out(t_->q);
        for (int i = 0; i < t_->q; ++i) out[i] = static_cast<Elem>(i);
        return out;
    }

    friend bool operator==(const Field& a, const Field& b) { return a.p() == b.p() && a.m() == b.m(); }

private:
    std::shared_ptr<const detail::FieldTables> t_;
};

}  // namespace ccdim
