#pragma once

#include <array>
#include <string>

#include "liemod/error.hpp"
#include "liemod/lie.hpp"
#include "liemod/ooper.hpp"

namespace liemod {

/// J = [[N, T], [sigma, -S]] on g (+) M.
struct GCSModule {
    Representation rep;
    Matrix n, t, sigma, s;
    Matrix j() const;
};

struct GCSDirectReport {
    Check almost_complex;  // J^2 + id, witness = column index
    Check integrable;      // witness = basis pair of g (+) M
    bool ok() const { return almost_complex.ok && integrable.ok; }
};
/// With stop_early, integrability is skipped once J^2 + id is nonzero.
GCSDirectReport gcs_check_direct(const Representation& rep, const Matrix& n, const Matrix& t, const Matrix& sigma,
                                 const Matrix& s, bool stop_early = false);

/// The ten component identities, in this order:
///   0  N T = T S
///   1  N^2 + T sigma = -id
///   2  S sigma = sigma N
///   3  S^2 + sigma T = -id
///   4  T[m,n]^T = [Tm, Tn]
///   5  S[m,n]^T = Tm . Sn - Tn . Sm
///   6  [Nx, Tm] - N[x, Tm] = T(Nx . m - x . Sm)
///   7  sigma[Tm, x] - Tm . sigma x = x . m + Nx . Sm - S(Nx . m - x . Sm)
///   8  [Nx, Ny] - [x, y] - N([Nx, y] + [x, Ny]) = T(x . sigma y - y . sigma x)
///   9  Nx . sigma y - Ny . sigma x - sigma([Nx, y] + [x, Ny]) = -S(x . sigma y - y . sigma x)
struct GCSComponentReport {
    std::array<Check, 10> identities;
    bool ok() const;
    /// Index of the first failing identity, or -1.
    int first_failure() const;
};
extern const std::array<const char*, 10> kGCSIdentityNames;

/// Throws Error(OracleDisagreement) if the verdict differs from gcs_check_direct.
GCSComponentReport gcs_check_components(const Representation& rep, const Matrix& n, const Matrix& t,
                                        const Matrix& sigma, const Matrix& s);
/// Components only, without the cross-check. With stop_early, evaluation
/// stops after identity 0, 1, 2 or 3 fails, or after a failing group 4-5, 6-7.
GCSComponentReport gcs_components_raw(const Representation& rep, const Matrix& n, const Matrix& t,
                                      const Matrix& sigma, const Matrix& s, bool stop_early = false);
bool is_gcs(const GCSModule& j);

/// (N, -T, -sigma, S). Throws InvalidGCS.
GCSModule opposite_gcs(const GCSModule& j);
/// (0, T, -T^{-1}, 0). Throws NotOOperator, Singular.
GCSModule gcs_from_invertible_o(const Representation& rep, const Matrix& t);
/// (I, 0, 0, -I_M). Throws NotComplexPair.
GCSModule gcs_from_complex(const Representation& rep, const Matrix& i, const Matrix& im);

/// I^2 = -id and [Ix, Iy] - [x, y] - I([Ix, y] + [x, Iy]) = 0.
Check complex_structure_check(const LieAlgebra& g, const Matrix& i);
bool is_complex_structure(const LieAlgebra& g, const Matrix& i);
/// I complex, I_M^2 = -id and Ix . I_M m - x . m - I_M(Ix . m + x . I_M m) = 0.
Check module_complex_pair_check(const Representation& rep, const Matrix& i, const Matrix& im);
/// Cross-checked against I (+) I_M on the semidirect product. Throws
/// Error(OracleDisagreement).
bool is_module_complex_pair(const Representation& rep, const Matrix& i, const Matrix& im);

/// sigma_flat for a 2-form stored as an antisymmetric matrix; same convention
/// as r_sharp.
Matrix sigma_flat(const Matrix& sigma2);
/// J = [[N, r#], [sigma_flat, -N^T]] on g (+) g*. Throws NotAntisymmetric.
Matrix gcs_lie_matrix(const LieAlgebra& g, const Matrix& n, const Bivector& r, const Matrix& sigma2);
/// <Ju, Jv> = <u, v> for <(x,a),(y,b)> = (a(y) + b(x)) / 2.
bool is_orthogonal(const Matrix& j, std::size_t dim);
/// <Ju, v> + <u, Jv> = 0; every J of the block form above has it.
bool is_skew_adjoint(const Matrix& j, std::size_t dim);
/// GCS on the coadjoint module with components (N, r#, sigma_flat, N^T). The
/// pairing is re-checked: skew-adjointness always, orthogonality when valid.
/// Throws NotAntisymmetric.
bool gcs_lie_check(const LieAlgebra& g, const Matrix& n, const Bivector& r, const Matrix& sigma2);

/// (T_I, J, J_M) is ON and T_R = T_I J_M. Throws NotComplexPair; on success
/// T_R = J T_I and both operators are re-checked (OracleDisagreement).
Check holomorphic_o_check(const Representation& rep, const Matrix& j, const Matrix& jm, const Matrix& t_r,
                          const Matrix& t_i);
bool is_holomorphic_o(const Representation& rep, const Matrix& j, const Matrix& jm, const Matrix& t_r,
                      const Matrix& t_i);

/// PN form: (r_I, J) PN and r_R# = r_I# J^T.
bool holomorphic_r_pn(const LieAlgebra& g, const Matrix& j, const Bivector& r_r, const Bivector& r_i);
/// GCS form: (J, r_I, 0) a GCS on g and r_R# = r_I# J^T.
bool holomorphic_r_gcs(const LieAlgebra& g, const Matrix& j, const Bivector& r_r, const Bivector& r_i);
/// Both clauses; throws NotComplexStructure, OracleDisagreement.
bool is_holomorphic_r(const LieAlgebra& g, const Matrix& j, const Bivector& r_r, const Bivector& r_i);

}  // namespace liemod
