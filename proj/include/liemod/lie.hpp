#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liemod/error.hpp"
#include "liemod/matrix.hpp"

namespace liemod {

/// Finite-dimensional Lie algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
class LieAlgebra {
public:
    LieAlgebra() = default;

    /// Validates skew-symmetry and the Jacobi identity; throws
    /// Error(SkewViolation) or Error(JacobiViolation) with the offending indices.
    static LieAlgebra create(std::size_t dim, std::vector<Rational> tensor,
                             std::vector<std::string> names = {});
    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<Rational>& tensor() const noexcept { return tensor_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// ad_{e_i} as a matrix: column j is [e_i, e_j].
    const Matrix& ad(std::size_t i) const { return ad_[i]; }
    Matrix ad(const Vec& x) const;
    Vec bracket(std::size_t i, std::size_t j) const;
    Vec bracket(const Vec& x, const Vec& y) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.tensor_ == b.tensor_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Rational> tensor_;
    std::vector<std::string> names_;
    std::vector<Matrix> ad_;
};

/// Skew-symmetry and Jacobi on all basis triples i < j < k, without throwing.
Check lie_check(std::size_t dim, const std::vector<Rational>& tensor);

/// A Lie algebra action on a module: e_i . m = action(i) m.
class Representation {
public:
    Representation() = default;

    /// Validates rho([e_i, e_j]) = [rho_i, rho_j]; throws Error(RepViolation).
    static Representation create(LieAlgebra algebra, std::size_t dim, std::vector<Matrix> actions);
    static Representation trivial(LieAlgebra algebra, std::size_t dim);

    const LieAlgebra& algebra() const noexcept { return algebra_; }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix& action(std::size_t i) const { return actions_[i]; }
    const std::vector<Matrix>& actions() const noexcept { return actions_; }
    Matrix action(const Vec& x) const;
    Vec act(const Vec& x, const Vec& m) const;

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.algebra_ == b.algebra_ && a.dim_ == b.dim_ && a.actions_ == b.actions_;
    }

private:
    LieAlgebra algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> actions_;
};

Check representation_check(const LieAlgebra& g, std::size_t dim, const std::vector<Matrix>& actions);

/// Which space a linear map reads from or writes to.
enum class Role { Module, Algebra, DualModule, DualAlgebra };

const char* to_string(Role role);
std::optional<Role> role_from_string(const std::string& s);
std::size_t role_dim(const Representation& rep, Role role);

/// A matrix tagged with the spaces it maps between.
struct LinMap {
    Role source = Role::Module;
    Role target = Role::Algebra;
    Matrix matrix;

    /// Throws Error(DimensionMismatch) unless the matrix is
    /// role_dim(target) x role_dim(source).
    void check_shape(const Representation& rep) const;
};

/// Subspace of k^n given by an independent list of column vectors.
class Subspace {
public:
    Subspace() = default;

    /// Throws Error(DimensionMismatch) when the vectors are dependent or of the
    /// wrong length.
    static Subspace from_basis(std::size_t ambient, std::vector<Vec> basis);
    /// Reduces an arbitrary spanning list to its RREF basis.
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace whole(std::size_t ambient);
    static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vec>& basis() const noexcept { return basis_; }
    /// ambient x dim, one column per basis vector.
    Matrix basis_matrix() const { return Matrix::from_columns(basis_, ambient_); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    std::optional<Vec> coordinates(const Vec& v) const;
    bool same_as(const Subspace& other) const { return contains(other) && other.contains(*this); }

private:
    Subspace(std::size_t ambient, std::vector<Vec> basis) : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
};

Representation adjoint(const LieAlgebra& g);
/// Action matrices -rho_i^T on the dual basis.
Representation dual_rep(const Representation& rep);
Representation coadjoint(const LieAlgebra& g);
/// g (+) M with [(x,m),(y,n)] = ([x,y], x.n - y.m); the algebra block comes first.
LieAlgebra semidirect(const Representation& rep);

/// [W, W] in W. On failure the witness is the pair of basis indices of W.
Check is_subalgebra(const LieAlgebra& g, const Subspace& w);
/// [g, W] in W. On failure the witness is (basis index of g, basis index of W).
Check is_ideal(const LieAlgebra& g, const Subspace& w);

/// The subalgebra W written in the coordinates of its basis.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& w);

struct Quotient {
    LieAlgebra algebra;
    Matrix projection;  // q x n
    Matrix section;     // n x q, columns span the chosen complement
};

/// h / W for an ideal W. The complement consists of the standard basis
/// vectors at the non-pivot columns of W's RREF. Throws Error(NotIdeal).
Quotient quotient(const LieAlgebra& h, const Subspace& w);

/// {m : x . m = 0 for all x in X}.
Subspace annihilator(const Representation& rep, const Subspace& x);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace image(const Matrix& f);

/// f[x, y] = [f x, f y] on all basis pairs.
Check is_lie_morphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix& f);

/// The algebra in the basis given by the columns of an invertible matrix.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& basis);

}  // namespace liemod
