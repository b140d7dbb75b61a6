#pragma once

#include <cstddef>
#include <vector>

#include "gmnrep/cyclotomic.hpp"

namespace gmnrep {

/// Dense matrix over Q(zeta_m), row-major. Acts on column vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(int m, std::size_t rows, std::size_t cols);

    static Matrix zero(int m, std::size_t rows, std::size_t cols) { return Matrix(m, rows, cols); }
    static Matrix identity(int m, std::size_t dim);
    static Matrix diagonal(const std::vector<CycRat>& diag);

    int order() const { return m_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const CycRat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    CycRat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_diagonal() const;
    std::vector<CycRat> diag() const;
    std::vector<CycRat> column(std::size_t j) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    /// Skips zero entries of the left factor.
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const CycRat& c);
    friend Matrix operator*(const CycRat& c, const Matrix& a) { return a * c; }
    Matrix& operator+=(const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Entrywise complex conjugate of the transpose.
    Matrix conj_transpose() const;
    Matrix pow(unsigned e) const;

private:
    void check_same_shape(const Matrix& b, const char* what) const;

    int m_ = 1;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<CycRat> a_;
};

}  // namespace gmnrep
