#pragma once

#include <cstddef>
#include <vector>

#include "liemod/cochain.hpp"
#include "liemod/error.hpp"
#include "liemod/lie.hpp"
#include "liemod/onstruct.hpp"

namespace liemod {

/// a (+) b with a and b subalgebras, written in block form (a first).
/// For x in a, u in b: [x, u] = x ._1 u - u ._2 x.
class TwilledLieAlgebra {
public:
    TwilledLieAlgebra() = default;
    /// `total` already in block form. Throws NotSubalgebra (witness 0 for a,
    /// 1 for b) or RepViolation.
    static TwilledLieAlgebra from_blocks(const LieAlgebra& total, std::size_t dim_a);

    const LieAlgebra& total() const noexcept { return total_; }
    std::size_t dim_a() const noexcept { return dim_a_; }
    std::size_t dim_b() const noexcept { return total_.dim() - dim_a_; }
    const LieAlgebra& a() const noexcept { return action1_.algebra(); }
    const LieAlgebra& b() const noexcept { return action2_.algebra(); }
    /// a acting on b.
    const Representation& action1() const noexcept { return action1_; }
    /// b acting on a.
    const Representation& action2() const noexcept { return action2_; }

    friend bool operator==(const TwilledLieAlgebra& x, const TwilledLieAlgebra& y) {
        return x.dim_a_ == y.dim_a_ && x.total_ == y.total_;
    }

private:
    LieAlgebra total_;
    std::size_t dim_a_ = 0;
    Representation action1_, action2_;
};

/// Change of basis to [a | b]. Throws NotComplementary, NotSubalgebra.
TwilledLieAlgebra twilled_new(const LieAlgebra& g, const Subspace& a, const Subspace& b);
/// b (+) a.
TwilledLieAlgebra swap(const TwilledLieAlgebra& tw);

/// m .bar x = [Tm, x] + T(x . m), as a representation of M^T on g.
Representation bar_action(const Representation& rep, const Matrix& t);
/// g |x| M^T. Throws NotOOperator.
TwilledLieAlgebra twilled_from_o(const Representation& rep, const Matrix& t);

/// Semidirect product of b acting on a by ._2, a abelian, as a self-valued
/// 2-cochain on a (+) b.
Cochain twilled_mu2(const TwilledLieAlgebra& tw);

struct MCReport {
    Check mc;      // [Ox, Oy] + x ._1 Oy - y ._1 Ox - O(Ox ._2 y - Oy ._2 x) - O[x, y]
    Check cocycle; // O[x, y] - x ._1 Oy + y ._1 Ox
    bool strong() const { return mc.ok && cocycle.ok; }
};
/// Direct residuals, cross-checked against d O + 1/2 [O, O] and d O computed
/// through ce_differential and derived_bracket. Omega is dim_b x dim_a.
/// Throws Error(OracleDisagreement).
MCReport mc_report(const TwilledLieAlgebra& tw, const Matrix& omega);
bool mc_check(const TwilledLieAlgebra& tw, const Matrix& omega);
bool strong_mc_check(const TwilledLieAlgebra& tw, const Matrix& omega);
/// The same two conditions through the cochain machinery only.
MCReport mc_report_abstract(const TwilledLieAlgebra& tw, const Matrix& omega);

struct OmegaStructures {
    LieAlgebra g_omega;           // [x, y]^O
    Representation action_omega;  // x .^O m
    LieAlgebra big_bracket;       // [ , ]^O_T on g (+) M
};
/// Throws NotStrongMC; OracleDisagreement if a stated conclusion fails.
OmegaStructures omega_structures(const Representation& rep, const Matrix& t, const Matrix& omega);

/// (T, T O, O T). Throws NotOOperator, NotStrongMC.
ONStructure on_from_strong_mc(const Representation& rep, const Matrix& t, const Matrix& omega);
/// T^{-1} N. Throws NotONStructure, Singular.
Matrix strong_mc_from_on(const Representation& rep, const Matrix& t, const Matrix& n, const Matrix& s);

/// Strong MC solutions on g |x| M^T among integer combinations, coefficients in
/// [-bound, bound], of a basis of 1-cocycles g -> M.
std::vector<Matrix> strong_mc_search(const Representation& rep, const Matrix& t, int bound);

}  // namespace liemod
