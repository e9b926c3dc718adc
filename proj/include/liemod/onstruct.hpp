#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "liemod/error.hpp"
#include "liemod/lie.hpp"
#include "liemod/ooper.hpp"

namespace liemod {

/// Torsion [Nx, Ny] - N([Nx, y] + [x, Ny] - N[x, y]) on basis pairs.
Check nijenhuis_check(const LieAlgebra& g, const Matrix& n);
bool is_nijenhuis(const LieAlgebra& g, const Matrix& n);

/// [x, y]_N = [Nx, y] + [x, Ny] - N[x, y] as a tensor, with no checks.
std::vector<Rational> deformed_tensor(const LieAlgebra& g, const Matrix& n);
/// Validated (g, [ , ]_N); also checks N : (g, [ , ]_N) -> g is a morphism.
/// Throws Error(NotNijenhuis).
LieAlgebra deformed_bracket(const LieAlgebra& g, const Matrix& n);

struct PowerReport {
    bool powers_nijenhuis = true;
    bool composition_coincides = true;
    bool combinations_lie = true;
    std::string first_failure;
    bool ok() const { return powers_nijenhuis && composition_coincides && combinations_lie; }
};
/// For k, l <= kmax: N^k Nijenhuis, ([ , ]_{N^k})_{N^l} = [ , ]_{N^{k+l}}, and
/// mu [ , ]_{N^k} + lambda [ , ]_{N^l} satisfies Jacobi for three (mu, lambda).
/// Throws Error(NotNijenhuis).
PowerReport nijenhuis_power_props(const LieAlgebra& g, const Matrix& n, unsigned kmax, std::uint64_t seed = 0);

/// First-order coefficients of a deformation of a module.
struct DeformationData {
    std::vector<Rational> bracket1;  // dim^3 tensor, skew
    std::vector<Matrix> action1;     // one matrix per basis vector of g
};

/// Mixed Jacobi, bracket1 Jacobi, action1 bracket and mixed action conditions.
/// The clause names the first failing one.
Check is_infinitesimal_deformation(const Representation& rep, const DeformationData& d);

/// N(x) . S(m) = S(Nx . m + x . Sm - S(x . m)) on basis pairs.
Check deformation_identity_check(const Representation& rep, const Matrix& n, const Matrix& s);
/// Throws Error(PreconditionFailed) unless N is Nijenhuis and (N, S) satisfies
/// the identity above. The result is checked against the deformation conditions and
/// the triviality equations.
DeformationData trivial_deformation_from(const Representation& rep, const Matrix& n, const Matrix& s);
/// The four triviality equations for (N, S) against d.
Check triviality_check(const Representation& rep, const DeformationData& d, const Matrix& n, const Matrix& s);

/// N(x) . S(m) = S(N(x) . m) + x . S^2(m) - S(x . S(m)) on basis pairs.
Check nijenhuis_structure_identity(const Representation& rep, const Matrix& n, const Matrix& s);
/// Direct check, cross-checked against N (+) S* being Nijenhuis on g x| M*.
/// Throws Error(OracleDisagreement) if they differ.
bool is_nijenhuis_structure(const Representation& rep, const Matrix& n, const Matrix& s);
/// The lift alone: N (+) S^T on semidirect(dual_rep(rep)).
bool nijenhuis_structure_oracle(const Representation& rep, const Matrix& n, const Matrix& s);

/// x ~. m = Nx . m - x . Sm + S(x . m), as a representation of (g, [ , ]_N).
/// Throws Error(NotNijenhuisStructure).
Representation tilde_action(const Representation& rep, const Matrix& n, const Matrix& s);

struct ONReport {
    Check o_operator;
    Check nijenhuis;
    Check structure;
    Check intertwining;  // N T = T S
    Check brackets;      // [ , ]^{NT} = [ , ]^T_S
    Check tilde;         // [ , ]^T_~ = [ , ]^T_S, only meaningful when the rest hold
    bool ok() const { return o_operator.ok && nijenhuis.ok && structure.ok && intertwining.ok && brackets.ok && tilde.ok; }
    /// The first failing clause, or empty.
    const Check* first_failure() const;
};

/// [m, n]^T_S = [Sm, n]^T + [m, Sn]^T - S[m, n]^T
Vec deformed_t_bracket(const Representation& rep, const Matrix& t, const Matrix& s, const Vec& m, const Vec& n);
ONReport on_report(const Representation& rep, const Matrix& t, const Matrix& n, const Matrix& s);
bool is_on_structure(const Representation& rep, const Matrix& t, const Matrix& n, const Matrix& s);

struct Hierarchy {
    std::vector<Matrix> t;  // T_0 .. T_kmax
};
/// T_k = T S^k = N^k T, each validated: O-operator, pairwise compatible, and
/// the hierarchy identities for k + l <= kmax. Throws Error(NotONStructure) on a
/// bad input and Error(OracleDisagreement) if a validation fails.
Hierarchy hierarchy(const Representation& rep, const Matrix& t, const Matrix& n, const Matrix& s, unsigned kmax);
/// T_k [m,n]^{T_{k+l}}_{..}: the T_k bracket, T_{k+l} bracket and S^k deformation
/// identities for k + l <= kmax.
Check hierarchy_identities(const Representation& rep, const Matrix& t, const Matrix& n, const Matrix& s, unsigned kmax);

struct ONStructure {
    Matrix t, n, s;
};
/// (T2, T1 T2^{-1}, T2^{-1} T1). Throws NotCompatible, Singular.
ONStructure on_from_compatible_pair(const Representation& rep, const Matrix& t1, const Matrix& t2);

/// Direct PN check: r an r-matrix, N Nijenhuis, N r# = r# N*, bracket clause.
Check pn_direct(const LieAlgebra& g, const Bivector& r, const Matrix& n);
/// Direct check, cross-checked against (r#, N, N*) being ON on the coadjoint
/// module. Throws Error(OracleDisagreement).
bool is_pn_structure(const LieAlgebra& g, const Bivector& r, const Matrix& n);
/// r_k with r_k# = N^k r#, k = 0..kmax. Throws NotPN, NotAntisymmetric, and
/// OracleDisagreement if an r_k or a pairwise sum fails the CYBE.
std::vector<Bivector> pn_hierarchy(const LieAlgebra& g, const Bivector& r, const Matrix& n, unsigned kmax);

}  // namespace liemod
