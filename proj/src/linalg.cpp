#include "liemod/linalg.hpp"

#include <utility>

#include "liemod/error.hpp"

namespace liemod {

Echelon rref(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

namespace {

std::vector<Vec> kernel_from_rref(const Echelon& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<Vec> kernel(const Matrix& a) { return kernel_from_rref(rref(a), a.cols()); }

LinearSolution solve_linear(const Matrix& a, const Vec& b) {
    if (a.rows() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "solve_linear: A has " + std::to_string(a.rows()) +
                                                      " rows but b has length " + std::to_string(b.size()));
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Echelon e = rref(aug);
    LinearSolution sol;
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return sol;
    sol.consistent = true;
    sol.particular = Vec(a.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) sol.particular[e.pivots[k]] = e.reduced(k, a.cols());
    Echelon ea{e.reduced.block(0, 0, e.reduced.rows(), a.cols()), e.pivots};
    sol.kernel = kernel_from_rref(ea, a.cols());
    return sol;
}

Matrix invert(const Matrix& a) {
    if (!a.is_square())
        throw Error(ErrorKind::DimensionMismatch, "invert: matrix is " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()));
    std::size_t n = a.rows();
    Echelon e = rref(a.hstack(Matrix::identity(n)));
    for (std::size_t k = 0; k < n; ++k)
        if (k >= e.pivots.size() || e.pivots[k] != k) {
            auto ker = kernel(a);
            throw Error(ErrorKind::Singular, "matrix has a nontrivial kernel", {},
                        ker.empty() ? Vec{} : ker.front());
        }
    return e.reduced.block(0, n, n, n);
}

bool is_invertible(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

std::optional<Vec> coordinates(const Matrix& basis, const Vec& v) {
    LinearSolution s = solve_linear(basis, v);
    if (!s.consistent) return std::nullopt;
    return s.particular;
}

std::vector<Vec> row_space_basis(const std::vector<Vec>& vectors, std::size_t dim) {
    Echelon e = rref(Matrix::from_rows(vectors, dim));
    std::vector<Vec> out;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) out.push_back(e.reduced.row(k));
    return out;
}

bool are_independent(const std::vector<Vec>& vectors, std::size_t dim) {
    if (vectors.empty()) return true;
    return rank(Matrix::from_rows(vectors, dim)) == vectors.size();
}

}  // namespace liemod
