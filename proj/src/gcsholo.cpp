#include "liemod/gcsholo.hpp"

#include "liemod/linalg.hpp"
#include "liemod/onstruct.hpp"

namespace liemod {

namespace {

Vec flat(const Matrix& m) {
    Vec v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

void require_shape(const Matrix& m, std::size_t r, std::size_t c, const char* what) {
    if (m.rows() != r || m.cols() != c)
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has the wrong shape");
}

void require_components(const Representation& rep, const Matrix& n, const Matrix& t, const Matrix& sigma,
                        const Matrix& s) {
    std::size_t d = rep.algebra().dim(), m = rep.dim();
    require_shape(n, d, d, "N");
    require_shape(t, d, m, "T");
    require_shape(sigma, m, d, "sigma");
    require_shape(s, m, m, "S");
}

Check matrix_zero(const Matrix& m, const char* clause) {
    if (m.is_zero()) return Check::pass();
    return Check::fail(clause, {}, flat(m));
}

}  // namespace

Matrix GCSModule::j() const { return block_matrix(n, t, sigma, -s); }

GCSDirectReport gcs_check_direct(const Representation& rep, const Matrix& n, const Matrix& t, const Matrix& sigma,
                                 const Matrix& s, bool stop_early) {
    require_components(rep, n, t, sigma, s);
    Matrix j = block_matrix(n, t, sigma, -s);
    std::size_t dim = j.rows();
    GCSDirectReport r;
    Matrix sq = j * j + Matrix::identity(dim);
    for (std::size_t c = 0; c < dim; ++c)
        if (!is_zero(sq.column(c))) {
            r.almost_complex = Check::fail("J^2 = -id", {c}, sq.column(c));
            break;
        }
    if (stop_early && !r.almost_complex.ok) return r;
    LieAlgebra big = semidirect(rep);
    for (std::size_t a = 0; a < dim && r.integrable.ok; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) {
            Vec u = unit_vec(dim, a), v = unit_vec(dim, b), ju = j * u, jv = j * v;
            Vec def = big.bracket(ju, jv) - big.bracket(u, v) - j * (big.bracket(ju, v) + big.bracket(u, jv));
            if (!is_zero(def)) {
                r.integrable = Check::fail("integrability", {a, b}, def);
                break;
            }
        }
    return r;
}

const std::array<const char*, 10> kGCSIdentityNames = {
    "N T = T S",
    "N^2 + T sigma = -id",
    "S sigma = sigma N",
    "S^2 + sigma T = -id",
    "T[m,n]^T = [Tm, Tn]",
    "S[m,n]^T = Tm . Sn - Tn . Sm",
    "[Nx, Tm] - N[x, Tm] = T(Nx . m - x . Sm)",
    "sigma[Tm, x] - Tm . sigma x = x . m + Nx . Sm - S(Nx . m - x . Sm)",
    "[Nx, Ny] - [x, y] - N([Nx, y] + [x, Ny]) = T(x . sigma y - y . sigma x)",
    "Nx . sigma y - Ny . sigma x - sigma([Nx, y] + [x, Ny]) = -S(x . sigma y - y . sigma x)",
};

bool GCSComponentReport::ok() const { return first_failure() < 0; }

int GCSComponentReport::first_failure() const {
    for (std::size_t k = 0; k < identities.size(); ++k)
        if (!identities[k].ok) return static_cast<int>(k);
    return -1;
}

GCSComponentReport gcs_components_raw(const Representation& rep, const Matrix& n, const Matrix& t,
                                      const Matrix& sigma, const Matrix& s, bool stop_early) {
    require_components(rep, n, t, sigma, s);
    const LieAlgebra& g = rep.algebra();
    std::size_t d = g.dim(), md = rep.dim();
    GCSComponentReport r;
    auto& id = r.identities;
    id[0] = matrix_zero(n * t - t * s, kGCSIdentityNames[0]);
    if (stop_early && !id[0].ok) return r;
    id[1] = matrix_zero(n * n + t * sigma + Matrix::identity(d), kGCSIdentityNames[1]);
    if (stop_early && !id[1].ok) return r;
    id[2] = matrix_zero(s * sigma - sigma * n, kGCSIdentityNames[2]);
    if (stop_early && !id[2].ok) return r;
    id[3] = matrix_zero(s * s + sigma * t + Matrix::identity(md), kGCSIdentityNames[3]);
    if (stop_early && !id[3].ok) return r;

    auto act = [&](const Vec& x, const Vec& m) { return rep.act(x, m); };
    auto tbr = [&](const Vec& m, const Vec& k) { return act(t * m, k) - act(t * k, m); };
    auto fail_at = [&](std::size_t k, std::size_t a, std::size_t b, const Vec& def) {
        if (id[k].ok && !is_zero(def)) id[k] = Check::fail(kGCSIdentityNames[k], {a, b}, def);
    };
    for (std::size_t a = 0; a < md; ++a)
        for (std::size_t b = a + 1; b < md; ++b) {
            Vec m = unit_vec(md, a), k = unit_vec(md, b), br = tbr(m, k);
            fail_at(4, a, b, t * br - g.bracket(t * m, t * k));
            fail_at(5, a, b, s * br - (act(t * m, s * k) - act(t * k, s * m)));
        }
    if (stop_early && r.first_failure() >= 0) return r;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < md; ++b) {
            Vec x = unit_vec(d, a), m = unit_vec(md, b);
            Vec nx = n * x, tm = t * m, sm = s * m;
            Vec inner = act(nx, m) - act(x, sm);
            fail_at(6, a, b, g.bracket(nx, tm) - n * g.bracket(x, tm) - t * inner);
            fail_at(7, a, b, sigma * g.bracket(tm, x) - act(tm, sigma * x) - (act(x, m) + act(nx, sm) - s * inner));
        }
    if (stop_early && r.first_failure() >= 0) return r;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            Vec x = unit_vec(d, a), y = unit_vec(d, b), nx = n * x, ny = n * y;
            Vec mix = g.bracket(nx, y) + g.bracket(x, ny);
            Vec ss = act(x, sigma * y) - act(y, sigma * x);
            fail_at(8, a, b, g.bracket(nx, ny) - g.bracket(x, y) - n * mix - t * ss);
            fail_at(9, a, b, act(nx, sigma * y) - act(ny, sigma * x) - sigma * mix + s * ss);
        }
    return r;
}

GCSComponentReport gcs_check_components(const Representation& rep, const Matrix& n, const Matrix& t,
                                        const Matrix& sigma, const Matrix& s) {
    GCSComponentReport r = gcs_components_raw(rep, n, t, sigma, s);
    if (r.ok() != gcs_check_direct(rep, n, t, sigma, s).ok())
        throw Error(ErrorKind::OracleDisagreement, "component identities and direct GCS check differ");
    return r;
}

bool is_gcs(const GCSModule& j) { return gcs_check_components(j.rep, j.n, j.t, j.sigma, j.s).ok(); }

GCSModule opposite_gcs(const GCSModule& j) {
    if (!is_gcs(j)) throw Error(ErrorKind::InvalidGCS, "input is not a generalized complex structure");
    GCSModule o{j.rep, j.n, -j.t, -j.sigma, j.s};
    if (!is_gcs(o)) throw Error(ErrorKind::OracleDisagreement, "opposite is not a generalized complex structure");
    return o;
}

GCSModule gcs_from_invertible_o(const Representation& rep, const Matrix& t) {
    if (Check c = o_check(rep, t); !c) throw Error(ErrorKind::NotOOperator, "T is not an O-operator", c.witness, c.defect);
    if (!is_invertible(t)) throw Error(ErrorKind::Singular, "T is not invertible");
    std::size_t d = rep.algebra().dim(), m = rep.dim();
    GCSModule j{rep, Matrix(d, d), t, -invert(t), Matrix(m, m)};
    if (!is_gcs(j)) throw Error(ErrorKind::OracleDisagreement, "(0, T, -T^{-1}, 0) is not a generalized complex structure");
    return j;
}

GCSModule gcs_from_complex(const Representation& rep, const Matrix& i, const Matrix& im) {
    if (Check c = module_complex_pair_check(rep, i, im); !c)
        throw Error(ErrorKind::NotComplexPair, c.clause, c.witness, c.defect);
    std::size_t d = rep.algebra().dim(), m = rep.dim();
    GCSModule j{rep, i, Matrix(d, m), Matrix(m, d), -im};
    if (!is_gcs(j)) throw Error(ErrorKind::OracleDisagreement, "I (+) I_M is not a generalized complex structure");
    return j;
}

Check complex_structure_check(const LieAlgebra& g, const Matrix& i) {
    std::size_t d = g.dim();
    require_shape(i, d, d, "I");
    if (Check c = matrix_zero(i * i + Matrix::identity(d), "I^2 = -id"); !c) return c;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            Vec x = unit_vec(d, a), y = unit_vec(d, b), ix = i * x, iy = i * y;
            Vec def = g.bracket(ix, iy) - g.bracket(x, y) - i * (g.bracket(ix, y) + g.bracket(x, iy));
            if (!is_zero(def)) return Check::fail("integrability", {a, b}, def);
        }
    return Check::pass();
}

bool is_complex_structure(const LieAlgebra& g, const Matrix& i) { return complex_structure_check(g, i).ok; }

Check module_complex_pair_check(const Representation& rep, const Matrix& i, const Matrix& im) {
    std::size_t d = rep.algebra().dim(), md = rep.dim();
    require_shape(im, md, md, "I_M");
    if (Check c = complex_structure_check(rep.algebra(), i); !c) return c;
    if (Check c = matrix_zero(im * im + Matrix::identity(md), "I_M^2 = -id"); !c) return c;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < md; ++b) {
            Vec x = unit_vec(d, a), m = unit_vec(md, b), ix = i * x, imm = im * m;
            Vec def = rep.act(ix, imm) - rep.act(x, m) - im * (rep.act(ix, m) + rep.act(x, imm));
            if (!is_zero(def)) return Check::fail("I(x) . I_M(m) - x . m = I_M(I(x) . m + x . I_M(m))", {a, b}, def);
        }
    return Check::pass();
}

bool is_module_complex_pair(const Representation& rep, const Matrix& i, const Matrix& im) {
    bool direct = module_complex_pair_check(rep, i, im).ok;
    bool lifted = is_complex_structure(semidirect(rep), direct_sum(i, im));
    if (direct != lifted) throw Error(ErrorKind::OracleDisagreement, "complex pair check differs from the semidirect lift");
    return direct;
}

Matrix sigma_flat(const Matrix& sigma2) {
    if (!is_antisymmetric(sigma2)) throw Error(ErrorKind::NotAntisymmetric, "sigma is not antisymmetric");
    return sigma2.transpose();
}

Matrix gcs_lie_matrix(const LieAlgebra& g, const Matrix& n, const Bivector& r, const Matrix& sigma2) {
    std::size_t d = g.dim();
    require_shape(n, d, d, "N");
    require_shape(sigma2, d, d, "sigma");
    if (r.dim() != d) throw Error(ErrorKind::DimensionMismatch, "r has the wrong dimension");
    return block_matrix(n, r_sharp(r), sigma_flat(sigma2), -n.transpose());
}

namespace {

Matrix pairing(std::size_t dim) {
    return block_matrix(Matrix(dim, dim), Matrix::identity(dim), Matrix::identity(dim), Matrix(dim, dim));
}

}  // namespace

bool is_orthogonal(const Matrix& j, std::size_t dim) {
    Matrix p = pairing(dim);
    return j.transpose() * p * j == p;
}

bool is_skew_adjoint(const Matrix& j, std::size_t dim) {
    Matrix p = pairing(dim);
    return (p * j + j.transpose() * p).is_zero();
}

bool gcs_lie_check(const LieAlgebra& g, const Matrix& n, const Bivector& r, const Matrix& sigma2) {
    Matrix j = gcs_lie_matrix(g, n, r, sigma2);
    std::size_t d = g.dim();
    if (!is_skew_adjoint(j, d)) throw Error(ErrorKind::OracleDisagreement, "the block form is not skew-adjoint");
    bool ok = gcs_check_components(coadjoint(g), n, r_sharp(r), sigma_flat(sigma2), n.transpose()).ok();
    // skew-adjoint and J^2 = -id give orthogonality
    if (ok && !is_orthogonal(j, d)) throw Error(ErrorKind::OracleDisagreement, "a GCS of block form is not orthogonal");
    return ok;
}

Check holomorphic_o_check(const Representation& rep, const Matrix& j, const Matrix& jm, const Matrix& t_r,
                          const Matrix& t_i) {
    if (Check c = module_complex_pair_check(rep, j, jm); !c)
        throw Error(ErrorKind::NotComplexPair, c.clause, c.witness, c.defect);
    Check rel = matrix_zero(t_r - t_i * jm, "T_R = T_I J_M");
    if (!rel) return rel;
    ONReport on = on_report(rep, t_i, j, jm);
    if (!on.ok()) return *on.first_failure();
    if (t_r != j * t_i) throw Error(ErrorKind::OracleDisagreement, "T_R != J T_I");
    if (!is_o_operator(rep, t_r) || !is_o_operator(rep, t_i))
        throw Error(ErrorKind::OracleDisagreement, "holomorphic parts are not O-operators");
    return Check::pass();
}

bool is_holomorphic_o(const Representation& rep, const Matrix& j, const Matrix& jm, const Matrix& t_r,
                      const Matrix& t_i) {
    return holomorphic_o_check(rep, j, jm, t_r, t_i).ok;
}

bool holomorphic_r_pn(const LieAlgebra& g, const Matrix& j, const Bivector& r_r, const Bivector& r_i) {
    return r_sharp(r_r) == r_sharp(r_i) * j.transpose() && is_pn_structure(g, r_i, j);
}

bool holomorphic_r_gcs(const LieAlgebra& g, const Matrix& j, const Bivector& r_r, const Bivector& r_i) {
    return r_sharp(r_r) == r_sharp(r_i) * j.transpose() && gcs_lie_check(g, j, r_i, Matrix(g.dim(), g.dim()));
}

bool is_holomorphic_r(const LieAlgebra& g, const Matrix& j, const Bivector& r_r, const Bivector& r_i) {
    if (Check c = complex_structure_check(g, j); !c)
        throw Error(ErrorKind::NotComplexStructure, c.clause, c.witness, c.defect);
    bool pn = holomorphic_r_pn(g, j, r_r, r_i);
    bool gcs = holomorphic_r_gcs(g, j, r_r, r_i);
    if (pn != gcs) throw Error(ErrorKind::OracleDisagreement, "holomorphic r-matrix PN and GCS characterizations differ");
    return pn;
}

}  // namespace liemod
