#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liemod/error.hpp"
#include "liemod/lie.hpp"
#include "liemod/matrix.hpp"

namespace liemod {

/// Alternating multilinear map from the degree-th exterior power of a
/// source_dim space into a target_dim space. Only values on strictly
/// increasing basis index tuples are stored, in lexicographic order.
class Cochain {
public:
    Cochain() = default;
    Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim);

    /// Degree 0 cochain with the given value.
    static Cochain constant(const Vec& value, std::size_t source_dim);
    /// Degree 1 cochain of a linear map (target x source matrix).
    static Cochain from_map(const Matrix& f);
    /// The bracket of g as a self-valued degree 2 cochain.
    static Cochain from_bracket(const LieAlgebra& g);

    std::size_t degree() const noexcept { return degree_; }
    std::size_t source_dim() const noexcept { return source_dim_; }
    std::size_t target_dim() const noexcept { return target_dim_; }
    /// Number of stored values, C(source_dim, degree).
    std::size_t size() const noexcept { return values_.size(); }

    /// The increasing tuple stored at position `rank`.
    const std::vector<std::size_t>& tuple(std::size_t rank) const { return tuples_[rank]; }
    const Vec& value(std::size_t rank) const { return values_[rank]; }
    Vec& value(std::size_t rank) { return values_[rank]; }
    void set(std::span<const std::size_t> increasing, const Vec& v);

    /// Value on an arbitrary basis tuple: permutation sign, zero on repeats.
    Vec eval(std::span<const std::size_t> indices) const;
    /// Multilinear evaluation on arbitrary vectors.
    Vec eval_vectors(const std::vector<Vec>& args) const;

    /// For degree 1: the matrix of the map.
    Matrix as_matrix() const;

    bool is_zero() const;
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.degree_ == b.degree_ && a.source_dim_ == b.source_dim_ && a.target_dim_ == b.target_dim_ &&
               a.values_ == b.values_;
    }
    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& s, Cochain a);

    std::size_t rank_of(std::span<const std::size_t> increasing) const;

private:
    std::size_t degree_ = 0;
    std::size_t source_dim_ = 0;
    std::size_t target_dim_ = 0;
    std::vector<std::vector<std::size_t>> tuples_;
    std::vector<Vec> values_;
};

/// Increasing tuples of length k from {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k);

/// Chevalley-Eilenberg differential of f with coefficients in rep.
/// A degree beyond dim(g) yields the zero cochain on the empty index set.
Cochain ce_differential(const Representation& rep, const Cochain& f);
Check is_cocycle(const Representation& rep, const Cochain& f);
/// Basis of the degree-n cocycles, from the kernel of the differential.
std::vector<Cochain> cocycle_basis(const Representation& rep, std::size_t degree);

/// Composition product: sum over (q+1, p)-shuffles of sgn * P(Q(...), ...).
Cochain insertion(const Cochain& p, const Cochain& q);
/// Nijenhuis-Richardson bracket of two self-valued cochains.
Cochain nr_bracket(const Cochain& p, const Cochain& q);

/// Derived bracket (-1)^(p-1) {{mu2, P}, Q} on Hom(wedge a, b), where mu2 is a
/// self-valued degree 2 cochain on a (+) b (a block first) and P, Q are
/// cochains from a into b, lifted by extending with zero.
Cochain derived_bracket(const Cochain& mu2, std::size_t dim_a, const Cochain& p, const Cochain& q);

/// Extends a cochain a -> b by zero to a self-valued cochain on a (+) b.
Cochain lift(const Cochain& f, std::size_t dim_a, std::size_t dim_b);
/// Inverse of lift; throws Error(MalformedLift) when f does not vanish on
/// arguments from b or has a-components in its values.
Cochain restrict_lift(const Cochain& f, std::size_t dim_a);

}  // namespace liemod
