#pragma once

#include <optional>
#include <vector>

#include "geolab/scalar.hpp"

namespace geolab {

// Dense matrix over the exact scalar field. Small sizes only; everything
// here is plain Gaussian elimination with exact arithmetic.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return a_[idx(r, c)]; }
    const Scalar& at(int r, int c) const { return a_[idx(r, c)]; }

    Matrix transpose() const;
    Matrix conj() const;
    Matrix block(int r0, int c0, int nrows, int ncols) const;
    std::vector<Scalar> row(int r) const;
    std::vector<Scalar> col(int c) const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const Scalar& s) const;

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    // Stack b below (vstack) or to the right (hstack) of a.
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix hstack(const Matrix& a, const Matrix& b);

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
    std::size_t idx(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw InternalError("matrix index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }
};

struct Rref {
    Matrix r;                     // reduced row-echelon form
    Matrix t;                     // transform with t * input = r
    std::vector<int> pivot_cols;  // pivot column per pivot row of r
    std::vector<int> pivot_rows;  // original row indices backing each pivot
    int rank = 0;
};

Rref rref(const Matrix& m);
int rank(const Matrix& m);

Scalar det(const Matrix& m);
Scalar minor_det(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

// nullopt when m is singular.
std::optional<Matrix> inverse(const Matrix& m);

// Basis of { x : m x = 0 }, free variables set to one in turn.
std::vector<std::vector<Scalar>> null_space(const Matrix& m);

// Express v as a row combination x * g. When that fails, `combo` is the
// best partial solution and (bad_index, residual) point at a coordinate of
// v - x*g that stays nonzero.
struct RowSolve {
    bool ok = false;
    std::vector<Scalar> combo;
    int bad_index = -1;
    Scalar residual;
};
RowSolve solve_row_combo(const Matrix& g, const std::vector<Scalar>& v);

} // namespace geolab
