#include "geolab/linalg.hpp"

#include <algorithm>

namespace geolab {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r) {
        if (rows[static_cast<std::size_t>(r)].size() != static_cast<std::size_t>(m.cols()))
            throw InternalError("ragged rows in Matrix::from_rows");
        for (int c = 0; c < m.cols(); ++c)
            m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m.at(c, r) = at(r, c);
    return m;
}

Matrix Matrix::conj() const {
    Matrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m.at(r, c) = at(r, c).conj();
    return m;
}

Matrix Matrix::block(int r0, int c0, int nrows, int ncols) const {
    Matrix m(nrows, ncols);
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < ncols; ++c)
            m.at(r, c) = at(r0 + r, c0 + c);
    return m;
}

std::vector<Scalar> Matrix::row(int r) const {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

std::vector<Scalar> Matrix::col(int c) const {
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m.at(r, c) = -at(r, c);
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InternalError("matrix shape mismatch in +");
    Matrix m(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c) + b.at(r, c);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    return a + (-b);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InternalError("matrix shape mismatch in *");
    Matrix m(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) {
            Scalar acc;
            for (int k = 0; k < a.cols(); ++k)
                acc += a.at(r, k) * b.at(k, c);
            m.at(r, c) = acc;
        }
    return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m.at(r, c) = at(r, c) * s;
    return m;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw InternalError("vstack width mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            m.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
            m.at(a.rows() + r, c) = b.at(r, c);
    return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InternalError("hstack height mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m;
}

Rref rref(const Matrix& m) {
    Rref out;
    out.r = m;
    out.t = Matrix::identity(m.rows());
    std::vector<int> orig(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) orig[static_cast<std::size_t>(i)] = i;

    int next_row = 0;
    for (int c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        // Pivot: the lowest-complexity nonzero entry in this column at or
        // below next_row; ties broken by row index for determinism.
        int pivot = -1;
        for (int r = next_row; r < m.rows(); ++r) {
            if (out.r.at(r, c).is_zero()) continue;
            if (pivot < 0 || out.r.at(r, c).complexity() < out.r.at(pivot, c).complexity())
                pivot = r;
        }
        if (pivot < 0) continue;

        if (pivot != next_row) {
            for (int k = 0; k < m.cols(); ++k) std::swap(out.r.at(pivot, k), out.r.at(next_row, k));
            for (int k = 0; k < m.rows(); ++k) std::swap(out.t.at(pivot, k), out.t.at(next_row, k));
            std::swap(orig[static_cast<std::size_t>(pivot)], orig[static_cast<std::size_t>(next_row)]);
        }

        Scalar inv = out.r.at(next_row, c).inverse();
        for (int k = 0; k < m.cols(); ++k) out.r.at(next_row, k) *= inv;
        for (int k = 0; k < m.rows(); ++k) out.t.at(next_row, k) *= inv;

        for (int r = 0; r < m.rows(); ++r) {
            if (r == next_row) continue;
            Scalar f = out.r.at(r, c);
            if (f.is_zero()) continue;
            for (int k = 0; k < m.cols(); ++k)
                out.r.at(r, k) -= f * out.r.at(next_row, k);
            for (int k = 0; k < m.rows(); ++k)
                out.t.at(r, k) -= f * out.t.at(next_row, k);
        }

        out.pivot_cols.push_back(c);
        out.pivot_rows.push_back(orig[static_cast<std::size_t>(next_row)]);
        ++next_row;
    }
    out.rank = static_cast<int>(out.pivot_cols.size());
    return out;
}

int rank(const Matrix& m) {
    return rref(m).rank;
}

Scalar det(const Matrix& m) {
    if (m.rows() != m.cols()) throw InternalError("det of non-square matrix");
    Matrix a = m;
    int n = m.rows();
    Scalar result(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r) {
            if (a.at(r, c).is_zero()) continue;
            if (pivot < 0 || a.at(r, c).complexity() < a.at(pivot, c).complexity())
                pivot = r;
        }
        if (pivot < 0) return Scalar();
        if (pivot != c) {
            for (int k = 0; k < n; ++k) std::swap(a.at(pivot, k), a.at(c, k));
            result = -result;
        }
        result *= a.at(c, c);
        Scalar inv = a.at(c, c).inverse();
        for (int r = c + 1; r < n; ++r) {
            Scalar f = a.at(r, c) * inv;
            if (f.is_zero()) continue;
            for (int k = c; k < n; ++k)
                a.at(r, k) -= f * a.at(c, k);
        }
    }
    return result;
}

Scalar minor_det(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw InternalError("minor_det needs a square selection");
    Matrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            sub.at(static_cast<int>(r), static_cast<int>(c)) = m.at(rows[r], cols[c]);
    return det(sub);
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw InternalError("inverse of non-square matrix");
    Rref rr = rref(m);
    if (rr.rank < m.rows()) return std::nullopt;
    return rr.t; // t * m = I for full-rank square input
}

std::vector<std::vector<Scalar>> null_space(const Matrix& m) {
    Rref rr = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(f)] = Scalar(1);
        for (int p = 0; p < rr.rank; ++p)
            v[static_cast<std::size_t>(rr.pivot_cols[static_cast<std::size_t>(p)])] = -rr.r.at(p, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

RowSolve solve_row_combo(const Matrix& g, const std::vector<Scalar>& v) {
    if (v.size() != static_cast<std::size_t>(g.cols()))
        throw InternalError("solve_row_combo length mismatch");
    RowSolve out;
    out.combo.assign(static_cast<std::size_t>(g.rows()), Scalar());

    // Solve g^T x = v^T; free variables stay zero.
    Matrix gt = g.transpose();
    Rref rr = rref(gt);
    std::vector<Scalar> b(static_cast<std::size_t>(gt.rows()));
    for (int r = 0; r < gt.rows(); ++r) {
        Scalar acc;
        for (int k = 0; k < gt.rows(); ++k)
            acc += rr.t.at(r, k) * v[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(r)] = acc;
    }
    for (int p = 0; p < rr.rank; ++p)
        out.combo[static_cast<std::size_t>(rr.pivot_cols[static_cast<std::size_t>(p)])] =
            b[static_cast<std::size_t>(p)];

    // Residual in the original coordinates.
    for (int c = 0; c < g.cols(); ++c) {
        Scalar acc;
        for (int r = 0; r < g.rows(); ++r)
            acc += out.combo[static_cast<std::size_t>(r)] * g.at(r, c);
        Scalar res = v[static_cast<std::size_t>(c)] - acc;
        if (!res.is_zero()) {
            out.ok = false;
            out.bad_index = c;
            out.residual = res;
            return out;
        }
    }
    out.ok = true;
    return out;
}

} // namespace geolab
