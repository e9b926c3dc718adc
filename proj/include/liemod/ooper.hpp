#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "liemod/cochain.hpp"
#include "liemod/error.hpp"
#include "liemod/lie.hpp"

namespace liemod {

// Maps M -> g are (dim g) x (dim M) matrices throughout.

/// Residual [Tm, Tn] - T(Tm . n - Tn . m) on basis pairs, in increasing_tuples(dim M, 2) order.
std::vector<Vec> o_residual(const Representation& rep, const Matrix& t);
Check o_check(const Representation& rep, const Matrix& t);
bool is_o_operator(const Representation& rep, const Matrix& t);

/// [m, n]^T = Tm . n - Tn . m as a Lie algebra on M. Throws Error(NotOOperator).
LieAlgebra induced_lie(const Representation& rep, const Matrix& t);

/// The graph {(Tm, m)} as a subspace of semidirect(rep).
Subspace graph(const Representation& rep, const Matrix& t);
/// Gr(T) is a subalgebra of the semidirect product.
bool graph_check(const Representation& rep, const Matrix& t);

struct StructureReport {
    bool kernel_is_ideal_in_MT = false;
    bool image_is_subalgebra = false;
};
/// Throws Error(NotOOperator).
StructureReport structure_report(const Representation& rep, const Matrix& t);

/// r = sum_{i<j} r^{ij} e_i ^ e_j, stored as the full antisymmetric matrix.
class Bivector {
public:
    Bivector() = default;
    explicit Bivector(std::size_t dim) : m_(dim, dim) {}
    /// Throws Error(NotAntisymmetric).
    static Bivector from_matrix(const Matrix& m);
    /// Entries (i, j, r^{ij}) with i < j.
    static Bivector from_entries(std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& e);
    /// The bivector whose sharp map is `s` (g* -> g); throws Error(NotAntisymmetric).
    static Bivector from_sharp(const Matrix& s);

    std::size_t dim() const noexcept { return m_.rows(); }
    const Matrix& matrix() const noexcept { return m_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    bool is_zero() const { return m_.is_zero(); }

    friend bool operator==(const Bivector& a, const Bivector& b) = default;
    friend Bivector operator+(const Bivector& a, const Bivector& b) { return from_matrix(a.m_ + b.m_); }

private:
    Matrix m_;
};

/// r^#(alpha) = r(alpha, .) in the dual basis; column k is sum_j r^{kj} e_j.
Matrix r_sharp(const Bivector& r);

/// Element of the exterior algebra: increasing index tuple -> coefficient.
using Multivector = std::map<std::vector<std::size_t>, Rational>;

Multivector wedge(const Multivector& a, const Multivector& b);
/// Schouten bracket extended from the Lie bracket by graded skew-symmetry and
/// the graded Leibniz rule. All terms of an argument must share one degree.
Multivector schouten(const LieAlgebra& g, const Multivector& p, const Multivector& q);
Multivector to_multivector(const Bivector& r);

/// [r, r] in wedge^3 g.
Multivector schouten_self(const LieAlgebra& g, const Bivector& r);
bool is_r_matrix(const LieAlgebra& g, const Bivector& r);
/// Schouten verdict, cross-checked against r^# being an O-operator on the
/// coadjoint module. Throws Error(OracleDisagreement) if they differ.
bool lemma_r_equiv(const LieAlgebra& g, const Bivector& r);

/// B : g -> M is T-admissible when B is a 1-cocycle and id + B T is invertible.
/// Returns T (id + B T)^{-1}. Throws NotOOperator, NotCocycle, NotAdmissible.
Matrix gauge_transform(const Representation& rep, const Matrix& t, const Matrix& b);
/// (id + B T) intertwines [ , ]^T and [ , ]^{T_B}.
bool gauge_iso_check(const Representation& rep, const Matrix& t, const Matrix& b);

struct Reduction {
    Subspace h;               // in g
    Subspace e_cap_h;         // in g
    Subspace module;          // A = (E n h)^0_N, in M
    Quotient quotient;        // h / (E n h), in the coordinates of h's basis
    Representation reduced_rep;  // quotient.algebra acting on A coordinates
    Matrix t_bar;             // quotient dim x A dim
};

/// Marsden-Ratiu reduction. Checks every hypothesis and throws the first that
/// fails: NotSubalgebra (h), QuotientError (E n h not an ideal of h), NotStable
/// (N not h-stable), ImageEscapesH (T(A) not in h). The result is re-validated.
Reduction mr_reduce(const Representation& rep, const Matrix& t, const Subspace& h, const Subspace& e,
                    const Subspace& n);

/// Residual of the mixed identity for T1 + T2, per basis pair.
std::vector<Vec> compatibility_defect(const Representation& rep, const Matrix& t1, const Matrix& t2);
/// Throws NotOOperator if either input fails.
bool are_compatible(const Representation& rep, const Matrix& t1, const Matrix& t2);
/// N = T1 T2^{-1}. Throws NotCompatible, Singular.
Matrix nijenhuis_from_pair(const Representation& rep, const Matrix& t1, const Matrix& t2);

/// e_i [] e_j = sum_k p(i, j, k) e_k
class PreLieProduct {
public:
    PreLieProduct() = default;
    /// Throws Error(PreconditionFailed) with the failing triple if the left
    /// pre-Lie identity does not hold.
    static PreLieProduct create(std::size_t dim, std::vector<Rational> tensor);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Rational>& tensor() const noexcept { return tensor_; }
    const Rational& p(std::size_t i, std::size_t j, std::size_t k) const { return tensor_[(i * dim_ + j) * dim_ + k]; }
    Vec product(const Vec& x, const Vec& y) const;

    friend bool operator==(const PreLieProduct& a, const PreLieProduct& b) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> tensor_;
};

Check pre_lie_check(std::size_t dim, const std::vector<Rational>& tensor);
/// m [] n = Tm . n. Throws Error(NotOOperator).
PreLieProduct pre_lie_from_o(const Representation& rep, const Matrix& t);
/// The mixed identity on all basis triples.
Check pre_lie_mixed_check(const PreLieProduct& p1, const PreLieProduct& p2);
/// Mixed identity, cross-checked against p1 + p2 being pre-Lie.
bool pre_lie_compatible(const PreLieProduct& p1, const PreLieProduct& p2);

}  // namespace liemod
