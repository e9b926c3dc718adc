#include "liemod/matrix.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>

namespace liemod {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a);
    r += b;
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a);
    r -= b;
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec operator*(const Rational& s, const Vec& v) {
    Vec r(v.size());
    if (s.is_zero()) return r;
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Vec& operator+=(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += b[i];
    return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] -= b[i];
    return a;
}

void axpy(Vec& a, const Rational& s, const Vec& b) {
    if (s.is_zero()) return;
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += s * b[i];
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    std::size_t c = rows.empty() ? cols : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Vec> Matrix::columns() const {
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::vstack(const Matrix& other) const {
    if (cols_ != other.cols_ && rows_ != 0 && other.rows_ != 0)
        throw std::invalid_argument("vstack column mismatch");
    std::size_t c = rows_ ? cols_ : other.cols_;
    Matrix m(rows_ + other.rows_, c);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < c; ++j) m(rows_ + i, j) = other(i, j);
    return m;
}

Matrix Matrix::hstack(const Matrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
    return *this;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r(a);
    r += b;
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r(a);
    r -= b;
    return r;
}

Matrix operator-(const Matrix& a) { return Rational(-1) * a; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
        }
    return r;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    if (s.is_zero()) return r;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) r(i, j) = s * a(i, j);
    return r;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec r(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!a(i, j).is_zero()) r[i] += a(i, j) * v[j];
    }
    return r;
}

Matrix block_matrix(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
        throw std::invalid_argument("inconsistent block shapes");
    return a.hstack(b).vstack(c.hstack(d));
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    return block_matrix(a, Matrix(a.rows(), b.cols()), Matrix(b.rows(), a.cols()), b);
}

Matrix power(const Matrix& a, unsigned k) {
    if (!a.is_square()) throw std::invalid_argument("power of non-square matrix");
    Matrix r = Matrix::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

bool is_antisymmetric(const Matrix& a) {
    if (!a.is_square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (a(i, j) != -a(j, i)) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

}  // namespace liemod
