#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace brt {

using Scalar = mpq_class;

// "p/q" or "p"; canonical (reduced, positive denominator) on output
std::string to_string(const Scalar& x);
Scalar parse_scalar(std::string_view s);

// dense row-major matrix over Scalar
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Scalar& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n);
    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Scalar& s, const Matrix& x);
Matrix transpose(const Matrix& x);

int rank(Matrix m);
// throws std::domain_error when singular
Matrix inverse(const Matrix& m);
// columns span the right nullspace, in reduced echelon normalization
Matrix nullspace(const Matrix& m);
// solves x*y = b for y; throws when x is singular
Matrix solve(const Matrix& x, const Matrix& b);
Scalar trace(const Matrix& m);

// stack blocks vertically; all must share cols
Matrix vstack(const std::vector<Matrix>& parts);
Matrix hstack(const std::vector<Matrix>& parts);

} // namespace brt
