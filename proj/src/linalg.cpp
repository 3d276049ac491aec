#include "schfin/linalg.hpp"

#include "schfin/errors.hpp"

namespace schfin {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& b) const {
    if (cols_ != b.rows_) fail(Errc::internal, "matrix product shape mismatch");
    Matrix out(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < b.cols_; ++j) out.at(i, j) += v * b.at(k, j);
        }
    return out;
}

Matrix Matrix::operator-(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) fail(Errc::internal, "matrix difference shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - b.a_[i];
    return out;
}

bool Matrix::is_zero() const {
    for (const Rational& v : a_)
        if (v != 0) return false;
    return true;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) fail(Errc::internal, "matrix apply shape mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    Matrix out(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < out.cols(); ++j)
        for (int i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[static_cast<std::size_t>(j)]);
    return out;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) fail(Errc::internal, "hcat row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

Rref rref(Matrix m) {
    Rref out;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        // Pivot: nonzero entry of lowest height, ties to the smallest row.
        int pivot = -1;
        BigInt best;
        for (int r = row; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            BigInt h = rat_height(m.at(r, col));
            if (pivot < 0 || h < best) {
                pivot = r;
                best = h;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational f = m.at(r, col);
            for (int j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    out.r = std::move(m);
    return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    Rref rr = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    Matrix out(m.cols(), static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int fc = free_cols[static_cast<std::size_t>(k)];
        out.at(fc, k) = 1;
        for (int p = 0; p < rr.rank; ++p) {
            int pc = rr.pivot_cols[static_cast<std::size_t>(p)];
            out.at(pc, k) = -rr.r.at(p, fc);
        }
    }
    return out;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows()) fail(Errc::internal, "solve shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    Rref rr = rref(std::move(aug));
    for (int c : rr.pivot_cols)
        if (c == a.cols()) return std::nullopt; // pivot in the augmented column
    std::vector<Rational> x(static_cast<std::size_t>(a.cols()), Rational(0));
    for (int p = 0; p < rr.rank; ++p)
        x[static_cast<std::size_t>(rr.pivot_cols[static_cast<std::size_t>(p)])] = rr.r.at(p, a.cols());
    return x;
}

std::vector<int> independent_columns(const Matrix& m) {
    return rref(m).pivot_cols;
}

QuotientBasis quotient_basis(const Matrix& kernel, const Matrix& image) {
    QuotientBasis q;
    std::vector<int> img_idx = independent_columns(image);
    q.image_part = image.columns(img_idx);
    // Greedily extend the image by kernel columns to a basis of the kernel.
    Matrix acc = q.image_part;
    std::vector<int> chosen;
    int have = rank(acc);
    for (int c = 0; c < kernel.cols(); ++c) {
        Matrix trial = Matrix::hcat(acc, kernel.columns({c}));
        int r = rank(trial);
        if (r > have) {
            acc = std::move(trial);
            chosen.push_back(c);
            have = r;
        }
    }
    q.class_vectors = kernel.columns(chosen);
    return q;
}

std::vector<Rational> QuotientBasis::coordinates(const std::vector<Rational>& v) const {
    Matrix sys = Matrix::hcat(image_part, class_vectors);
    auto sol = solve(sys, v);
    if (!sol) fail(Errc::internal, "vector outside the kernel in quotient coordinates");
    std::vector<Rational> out(sol->begin() + image_part.cols(), sol->end());
    return out;
}

} // namespace schfin
