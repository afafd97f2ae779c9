#pragma once

// Dense matrices over GF(q) and exact elimination.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "field.hpp"

namespace ccdim {

class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix from_rows(Field field, const std::vector<std::vector<Elem>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix out(std::move(field), rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) {
                if (!out.field_.contains(rows[i][j])) throw DomainError("matrix entry outside the field");
                out(i, j) = rows[i][j];
            }
        }
        return out;
    }

    static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<int>> rows) {
        std::vector<std::vector<Elem>> v;
        for (const auto& r : rows) {
            v.emplace_back();
            for (int x : r) v.back().push_back(static_cast<Elem>(x));
        }
        return from_rows(std::move(field), v);
    }

    static Matrix identity(Field field, std::size_t n) {
        Matrix out(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
        return out;
    }

    /// Matrix whose columns are the given vectors (all of length `height`).
    static Matrix from_columns(Field field, std::size_t height, const std::vector<std::vector<Elem>>& columns) {
        Matrix out(std::move(field), height, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (std::size_t i = 0; i < height; ++i) out(i, j) = columns[j][i];
        return out;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<Elem> column(std::size_t j) const {
        std::vector<Elem> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    std::vector<std::vector<Elem>> columns() const {
        std::vector<std::vector<Elem>> out;
        out.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
        return out;
    }

    Matrix transpose() const {
        Matrix out(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw DomainError("matrix product dimension mismatch");
        Matrix out(field_, rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t l = 0; l < cols_; ++l) {
                const Elem a = (*this)(i, l);
                if (a == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = field_.axpy(out(i, j), a, rhs(l, j));
            }
        return out;
    }

    Matrix select_columns(std::span<const std::size_t> idx) const {
        Matrix out(field_, rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
        return out;
    }

    Matrix select_rows(std::size_t first, std::size_t count) const {
        Matrix out(field_, count, cols_);
        std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_, out.data_.begin());
        return out;
    }

    /// Rows of `this` followed by rows of `below`.
    Matrix stack(const Matrix& below) const {
        if (below.cols_ != cols_ && !below.empty() && !empty()) throw DomainError("stack: column mismatch");
        Matrix out(field_, rows_ + below.rows_, std::max(cols_, below.cols_));
        std::copy(data_.begin(), data_.end(), out.data_.begin());
        std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
        return out;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
    }

    const std::vector<Elem>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;                   // same shape as the input, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Pivots are the first nonzero entry found scanning
/// columns left to right, rows top to bottom.
inline RrefResult rref(Matrix m) {
    const Field& f = m.field();
    RrefResult out{m, 0, {}};
    Matrix& r = out.reduced;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r(piv, col) == 0) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead) std::swap_ranges(r.row(piv).begin(), r.row(piv).end(), r.row(lead).begin());
        const Elem scale = f.inv(r(lead, col));
        for (auto& e : r.row(lead)) e = f.mul(e, scale);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r(i, col) == 0) continue;
            const Elem factor = f.neg(r(i, col));
            for (std::size_t j = col; j < r.cols(); ++j) r(i, j) = f.axpy(r(i, j), factor, r(lead, j));
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = lead;
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// The nonzero rows of rref(m): the canonical basis of the row space.
inline Matrix row_space_basis(const Matrix& m) {
    auto r = rref(m);
    return r.reduced.select_rows(0, r.rank);
}

/// Basis (as rows) of the right null space {x : m x^T = 0}.
inline Matrix kernel_basis(const Matrix& m) {
    const Field& f = m.field();
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    Matrix out(f, m.cols() - r.rank, m.cols());
    std::size_t row = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        out(row, free) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) out(row, r.pivots[i]) = f.neg(r.reduced(i, free));
        ++row;
    }
    return out;
}

/// A subspace kept in reduced echelon form, grown one vector at a time.
class EchelonBasis {
public:
    EchelonBasis(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

    std::size_t rank() const { return pivots_.size(); }
    std::size_t dim() const { return dim_; }

    /// Reduces v against the basis in place; returns the pivot index of the
    /// remainder, or dim() when v lies in the span.
    std::size_t reduce(std::span<Elem> v) const {
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const Elem c = v[pivots_[i]];
            if (c == 0) continue;
            const Elem factor = field_.neg(c);
            const Elem* b = rows_.data() + i * dim_;
            for (std::size_t j = 0; j < dim_; ++j)
                if (b[j]) v[j] = field_.axpy(v[j], factor, b[j]);
        }
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j]) return j;
        return dim_;
    }

    bool contains(std::span<const Elem> v) const {
        std::vector<Elem> tmp(v.begin(), v.end());
        return reduce(tmp) == dim_;
    }

    /// Adds v to the spanning set; returns true when the rank grew.
    bool insert(std::span<const Elem> v) {
        scratch_.assign(v.begin(), v.end());
        const std::size_t piv = reduce(scratch_);
        if (piv == dim_) return false;
        const Elem scale = field_.inv(scratch_[piv]);
        for (auto& e : scratch_) e = field_.mul(e, scale);
        // Keep the existing rows reduced at the new pivot.
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            Elem* b = rows_.data() + i * dim_;
            const Elem c = b[piv];
            if (c == 0) continue;
            const Elem factor = field_.neg(c);
            for (std::size_t j = 0; j < dim_; ++j) b[j] = field_.axpy(b[j], factor, scratch_[j]);
        }
        rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
        pivots_.push_back(piv);
        return true;
    }

private:
    Field field_;
    std::size_t dim_;
    std::vector<Elem> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<Elem> scratch_;
};

/// Dot product of two equal-length vectors.
inline Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

}  // namespace ccdim
