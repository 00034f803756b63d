#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "iroa/errors.hpp"
#include "iroa/field.hpp"

namespace iroa {

// Dense row-major matrix over a finite field. Entries are integer-encoded
// field elements. Desk-scale dimensions; no sparse path.
class Matrix {
public:
    Matrix(Field field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0)
            throw PreconditionError(errc::param_out_of_range, "negative matrix dimension");
    }

    static Matrix identity(const Field& field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    static Matrix from_rows(const Field& field, const std::vector<std::vector<int>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix m(field, r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw PreconditionError(errc::dimension_mismatch, "ragged row list");
            for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v) {
        if (v < 0 || v >= field_.q())
            throw PreconditionError(errc::param_out_of_range, "entry out of field range");
        data_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<uint16_t>(v);
    }

    std::span<const uint16_t> row(int r) const {
        return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }

    bool is_zero() const {
        for (auto v : data_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    Field field_;
    int rows_, cols_;
    std::vector<uint16_t> data_;
};

struct RrefResult {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per nonzero row, increasing
};

// Reduced row echelon form by Gauss-Jordan elimination. Pivot selection is
// leftmost column, topmost row; pivots are scaled to 1 and eliminated above
// and below, so the result is the unique RREF of the row space.
inline RrefResult rref(const Matrix& m) {
    RrefResult out{m, 0, {}};
    Matrix& a = out.reduced;
    const Field& f = m.field();
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (a.at(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) {
                const int t = a.at(r, j);
                a.set(r, j, a.at(pivot, j));
                a.set(pivot, j, t);
            }
        const int scale = f.inv(a.at(r, c));
        if (scale != 1)
            for (int j = c; j < cols; ++j) a.set(r, j, f.mul(scale, a.at(r, j)));
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const int factor = a.at(i, c);
            if (factor == 0) continue;
            for (int j = c; j < cols; ++j)
                a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(r, j))));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.field(), m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t.set(j, i, m.at(i, j));
    return t;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw PreconditionError(errc::field_mismatch, "matrix product across fields");
    if (a.cols() != b.rows())
        throw PreconditionError(errc::dimension_mismatch, "inner dimensions disagree");
    const Field& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b.at(k, j) != 0) c.set(i, j, f.add(c.at(i, j), f.mul(aik, b.at(k, j))));
        }
    return c;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

// Basis of { v : M v^T = 0 }, returned in RREF with (cols - rank) rows.
inline Matrix nullspace(const Matrix& m) {
    const RrefResult rr = rref(m);
    const Field& f = m.field();
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : rr.pivots) is_pivot[c] = true;

    Matrix basis(f, cols - rr.rank, cols);
    int row = 0;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        basis.set(row, free, 1);
        for (int r = 0; r < rr.rank; ++r)
            basis.set(row, rr.pivots[r], f.neg(rr.reduced.at(r, free)));
        ++row;
    }
    return rref(basis).reduced;
}

// True iff the row spaces coincide (identical nonzero RREF rows).
inline bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw PreconditionError(errc::field_mismatch, "row-space comparison across fields");
    if (a.cols() != b.cols())
        throw PreconditionError(errc::dimension_mismatch, "row-space comparison needs equal width");
    const RrefResult ra = rref(a), rb = rref(b);
    if (ra.rank != rb.rank) return false;
    for (int i = 0; i < ra.rank; ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (ra.reduced.at(i, j) != rb.reduced.at(i, j)) return false;
    return true;
}

}  // namespace iroa
