#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "liemod/rational.hpp"

namespace liemod {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& s, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
/// a += s * b
void axpy(Vec& a, const Rational& s, const Vec& b);

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols = 0);
    /// Columns are given as vectors of length `rows`; an empty list yields rows x 0.
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    std::vector<Vec> columns() const;
    void set_column(std::size_t j, const Vec& v);

    Matrix transpose() const;
    bool is_zero() const;
    /// Stacks `other` below this matrix.
    Matrix vstack(const Matrix& other) const;
    Matrix hstack(const Matrix& other) const;
    /// Rectangular block starting at (r0, c0).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vec operator*(const Matrix& a, const Vec& v);

/// Block matrix [[a, b], [c, d]].
Matrix block_matrix(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
/// Block diagonal a (+) b.
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, unsigned k);
bool is_antisymmetric(const Matrix& a);

std::ostream& operator<<(std::ostream& os, const Vec& v);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace liemod
