#include "gmnrep/matrix.hpp"

#include <stdexcept>

namespace gmnrep {

Matrix::Matrix(int m, std::size_t rows, std::size_t cols)
    : m_(m), rows_(rows), cols_(cols), a_(rows * cols, CycRat(m)) {}

Matrix Matrix::identity(int m, std::size_t dim) {
    Matrix id(m, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) id(i, i) = CycRat(m, Rational(1));
    return id;
}

Matrix Matrix::diagonal(const std::vector<CycRat>& diag) {
    if (diag.empty()) throw std::invalid_argument("Matrix::diagonal: empty diagonal");
    Matrix d(diag.front().order(), diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && !(*this)(i, j).is_zero()) return false;
        }
    }
    return true;
}

std::vector<CycRat> Matrix::diag() const {
    std::vector<CycRat> d;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
    return d;
}

std::vector<CycRat> Matrix::column(std::size_t j) const {
    std::vector<CycRat> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
}

void Matrix::check_same_shape(const Matrix& b, const char* what) const {
    if (m_ != b.m_ || rows_ != b.rows_ || cols_ != b.cols_) throw std::domain_error(std::string(what) + ": shape mismatch");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    r += b;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& b) {
    check_same_shape(b, "Matrix +");
    for (std::size_t k = 0; k < a_.size(); ++k) {
        if (!b.a_[k].is_zero()) a_[k] += b.a_[k];
    }
    return *this;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b, "Matrix -");
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) {
        if (!b.a_[k].is_zero()) r.a_[k] -= b.a_[k];
    }
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.m_ != b.m_ || a.cols_ != b.rows_) throw std::domain_error("Matrix *: shape mismatch");
    Matrix r(a.m_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycRat& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const CycRat& y = b(k, j);
                if (!y.is_zero()) r(i, j) += x * y;
            }
        }
    }
    return r;
}

Matrix operator*(const Matrix& a, const CycRat& c) {
    Matrix r = a;
    for (auto& x : r.a_) {
        if (!x.is_zero()) x *= c;
    }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.m_ == b.m_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::conj_transpose() const {
    Matrix r(m_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = conjugate((*this)(i, j));
    }
    return r;
}

Matrix Matrix::pow(unsigned e) const {
    if (!is_square()) throw std::domain_error("Matrix::pow: not square");
    Matrix r = identity(m_, rows_);
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

}  // namespace gmnrep
