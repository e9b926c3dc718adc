#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liemod/matrix.hpp"

namespace liemod {

struct Echelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. The pivot in each column is the first nonzero
/// entry at or below the current row, so the output is reproducible.
Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Basis of {v : A v = 0}, one vector per free column, in increasing order
/// of the free column index.
std::vector<Vec> kernel(const Matrix& a);

struct LinearSolution {
    bool consistent = false;
    Vec particular;           // free variables set to zero
    std::vector<Vec> kernel;  // same basis as kernel(A)
};

/// Solves A x = b exactly. Throws Error(DimensionMismatch) if A.rows != b.size.
LinearSolution solve_linear(const Matrix& a, const Vec& b);

/// Throws Error(Singular) if A has a nontrivial kernel, or
/// Error(DimensionMismatch) if A is not square.
Matrix invert(const Matrix& a);
bool is_invertible(const Matrix& a);

/// Coefficients c with basis * c = v (basis given as columns), if v lies in
/// the column span. The columns are assumed independent.
std::optional<Vec> coordinates(const Matrix& basis, const Vec& v);

/// Independent subset spanning the same space (RREF rows of the input vectors).
std::vector<Vec> row_space_basis(const std::vector<Vec>& vectors, std::size_t dim);
bool are_independent(const std::vector<Vec>& vectors, std::size_t dim);

}  // namespace liemod
