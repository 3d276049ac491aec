#pragma once

#include "schfin/rational.hpp"

#include <optional>
#include <vector>

namespace schfin {

// Dense exact rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Matrix operator*(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    bool operator==(const Matrix& b) const = default;
    bool is_zero() const;

    Matrix transposed() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    Matrix columns(const std::vector<int>& idx) const;
    static Matrix hcat(const Matrix& a, const Matrix& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Exact Gauss-Jordan data. Pivot choice within a column minimizes the height
// max(|num|, den) to control coefficient growth deterministically.
struct Rref {
    Matrix r;
    std::vector<int> pivot_cols;
    int rank = 0;
};

Rref rref(Matrix m);

int rank(const Matrix& m);

// Basis of the right kernel, one column per basis vector, deterministic.
Matrix kernel_basis(const Matrix& m);

// One solution x of Ax = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

// Indices of a maximal independent subset of columns, in ascending order.
std::vector<int> independent_columns(const Matrix& m);

// Coordinates that describe the quotient ker/im of two nested column spaces.
// `image` columns must lie inside the span of `kernel` columns.
struct QuotientBasis {
    Matrix image_part;        // columns spanning the image
    Matrix class_vectors;     // kernel columns completing the image to the kernel
    // Writes v (in the kernel) as image_part*c1 + class_vectors*c2; returns c2.
    std::vector<Rational> coordinates(const std::vector<Rational>& v) const;
    int dim() const { return class_vectors.cols(); }
};

QuotientBasis quotient_basis(const Matrix& kernel, const Matrix& image);

} // namespace schfin
