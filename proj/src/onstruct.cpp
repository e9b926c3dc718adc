#include "liemod/onstruct.hpp"

#include <random>

#include "liemod/linalg.hpp"

namespace liemod {

namespace {

Vec flat(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

void require_square(const Matrix& m, std::size_t n, const char* what) {
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has the wrong shape");
}

// bracket of an arbitrary dim^3 tensor
Vec tensor_bracket(std::size_t d, const std::vector<Rational>& t, const Vec& x, const Vec& y) {
    Vec out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            Rational s = x[i] * y[j];
            for (std::size_t k = 0; k < d; ++k) {
                const Rational& c = t[(i * d + j) * d + k];
                if (!c.is_zero()) out[k] += s * c;
            }
        }
    }
    return out;
}

std::vector<Rational> deformed_of_tensor(std::size_t d, const std::vector<Rational>& t, const Matrix& n) {
    std::vector<Rational> out(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec x = unit_vec(d, i), y = unit_vec(d, j);
            Vec v = tensor_bracket(d, t, n * x, y) + tensor_bracket(d, t, x, n * y) - n * tensor_bracket(d, t, x, y);
            for (std::size_t k = 0; k < d; ++k) out[(i * d + j) * d + k] = v[k];
        }
    return out;
}

// [a, b]_N in g
Vec n_bracket(const LieAlgebra& g, const Matrix& n, const Vec& a, const Vec& b) {
    return g.bracket(n * a, b) + g.bracket(a, n * b) - n * g.bracket(a, b);
}

// Tm . n - Tn . m
Vec t_bracket(const Representation& rep, const Matrix& t, const Vec& m, const Vec& n) {
    return rep.act(t * m, n) - rep.act(t * n, m);
}

// T(m) ~. n with x ~. m = Nx . m - x . Sm + S(x . m)
Vec tilde_act(const Representation& rep, const Matrix& n, const Matrix& s, const Vec& x, const Vec& m) {
    return rep.act(n * x, m) - rep.act(x, s * m) + s * rep.act(x, m);
}

Matrix combine(const std::vector<Matrix>& mats, const Vec& coeffs, std::size_t dim) {
    Matrix out(dim, dim);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].is_zero()) out += coeffs[k] * mats[k];
    return out;
}

}  // namespace

Check nijenhuis_check(const LieAlgebra& g, const Matrix& n) {
    require_square(n, g.dim(), "N");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            Vec nx = n.column(i), ny = n.column(j);
            Vec x = unit_vec(g.dim(), i), y = unit_vec(g.dim(), j);
            Vec tor = g.bracket(nx, ny) - n * n_bracket(g, n, x, y);
            if (!is_zero(tor)) return Check::fail("nijenhuis", {i, j}, tor);
        }
    return Check::pass();
}

bool is_nijenhuis(const LieAlgebra& g, const Matrix& n) { return nijenhuis_check(g, n).ok; }

std::vector<Rational> deformed_tensor(const LieAlgebra& g, const Matrix& n) {
    require_square(n, g.dim(), "N");
    return deformed_of_tensor(g.dim(), g.tensor(), n);
}

LieAlgebra deformed_bracket(const LieAlgebra& g, const Matrix& n) {
    Check c = nijenhuis_check(g, n);
    if (!c) throw Error(ErrorKind::NotNijenhuis, "N has nonzero torsion", c.witness, c.defect);
    LieAlgebra d = LieAlgebra::create(g.dim(), deformed_tensor(g, n), g.names());
    Check m = is_lie_morphism(d, g, n);
    if (!m) throw Error(ErrorKind::OracleDisagreement, "N is not a morphism from the deformed bracket", m.witness, m.defect);
    return d;
}

PowerReport nijenhuis_power_props(const LieAlgebra& g, const Matrix& n, unsigned kmax, std::uint64_t seed) {
    Check c = nijenhuis_check(g, n);
    if (!c) throw Error(ErrorKind::NotNijenhuis, "N has nonzero torsion", c.witness, c.defect);
    std::size_t d = g.dim();
    PowerReport rep;
    auto fail = [&](bool& flag, const std::string& what) {
        if (rep.first_failure.empty()) rep.first_failure = what;
        flag = false;
    };
    std::vector<Matrix> pw;
    for (unsigned k = 0; k <= 2 * kmax; ++k) pw.push_back(power(n, k));
    std::vector<std::vector<Rational>> def;
    for (unsigned k = 0; k <= kmax; ++k) {
        if (!is_nijenhuis(g, pw[k])) fail(rep.powers_nijenhuis, "N^" + std::to_string(k) + " not Nijenhuis");
        def.push_back(deformed_of_tensor(d, g.tensor(), pw[k]));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    for (unsigned k = 0; k <= kmax; ++k)
        for (unsigned l = 0; l <= kmax; ++l) {
            auto lhs = deformed_of_tensor(d, def[k], pw[l]);
            auto rhs = deformed_of_tensor(d, g.tensor(), pw[k + l]);
            if (lhs != rhs)
                fail(rep.composition_coincides,
                     "([,]_N^" + std::to_string(k) + ")_N^" + std::to_string(l) + " != [,]_N^" + std::to_string(k + l));
            for (int r = 0; r < 3; ++r) {
                Rational mu(num(rng), den(rng)), la(num(rng), den(rng));
                std::vector<Rational> comb(def[k].size());
                for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = mu * def[k][i] + la * def[l][i];
                if (!lie_check(d, comb))
                    fail(rep.combinations_lie, "combination of N^" + std::to_string(k) + ", N^" + std::to_string(l) +
                                                   " fails Jacobi");
            }
        }
    return rep;
}

Check is_infinitesimal_deformation(const Representation& rep, const DeformationData& dd) {
    const LieAlgebra& g = rep.algebra();
    std::size_t d = g.dim(), md = rep.dim();
    if (dd.bracket1.size() != d * d * d || dd.action1.size() != d)
        throw Error(ErrorKind::DimensionMismatch, "deformation data shape");
    for (const auto& a : dd.action1) require_square(a, md, "action1");
    const auto& b = dd.bracket1;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (b[(i * d + j) * d + k] != -b[(j * d + i) * d + k]) return Check::fail("skew", {i, j, k});
    auto b1 = [&](const Vec& x, const Vec& y) { return tensor_bracket(d, b, x, y); };
    auto br = [&](const Vec& x, const Vec& y) { return g.bracket(x, y); };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                Vec x = unit_vec(d, i), y = unit_vec(d, j), z = unit_vec(d, k);
                Vec c3 = br(x, b1(y, z)) + br(y, b1(z, x)) + br(z, b1(x, y)) + b1(x, br(y, z)) + b1(y, br(z, x)) +
                         b1(z, br(x, y));
                if (!is_zero(c3)) return Check::fail("mixed Jacobi", {i, j, k}, c3);
                Vec c4 = b1(x, b1(y, z)) + b1(y, b1(z, x)) + b1(z, b1(x, y));
                if (!is_zero(c4)) return Check::fail("bracket1 Jacobi", {i, j, k}, c4);
            }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const Matrix& ai = dd.action1[i];
            const Matrix& aj = dd.action1[j];
            Vec bij(d), cij = g.bracket(i, j);
            for (std::size_t k = 0; k < d; ++k) bij[k] = b[(i * d + j) * d + k];
            Matrix c5 = combine(dd.action1, bij, md) - (ai * aj - aj * ai);
            if (!c5.is_zero()) return Check::fail("action1 bracket", {i, j}, flat(c5));
            const Matrix& ri = rep.action(i);
            const Matrix& rj = rep.action(j);
            Matrix c6 = combine(dd.action1, cij, md) + combine(rep.actions(), bij, md) -
                        (ri * aj - rj * ai + ai * rj - aj * ri);
            if (!c6.is_zero()) return Check::fail("mixed action", {i, j}, flat(c6));
        }
    return Check::pass();
}

Check deformation_identity_check(const Representation& rep, const Matrix& n, const Matrix& s) {
    const LieAlgebra& g = rep.algebra();
    require_square(n, g.dim(), "N");
    require_square(s, rep.dim(), "S");
    for (std::size_t i = 0; i < g.dim(); ++i) {
        Matrix rn = rep.action(n.column(i));
        const Matrix& r = rep.action(i);
        Matrix def = rn * s - s * (rn + r * s - s * r);
        if (!def.is_zero()) return Check::fail("deformation identity", {i}, flat(def));
    }
    return Check::pass();
}

DeformationData trivial_deformation_from(const Representation& rep, const Matrix& n, const Matrix& s) {
    Check c = nijenhuis_check(rep.algebra(), n);
    if (!c) throw Error(ErrorKind::PreconditionFailed, "N is not Nijenhuis", c.witness, c.defect);
    c = deformation_identity_check(rep, n, s);
    if (!c) throw Error(ErrorKind::PreconditionFailed, "(N, S) fails the deformation identity", c.witness, c.defect);
    DeformationData d;
    d.bracket1 = deformed_tensor(rep.algebra(), n);
    for (std::size_t i = 0; i < rep.algebra().dim(); ++i)
        d.action1.push_back(rep.action(n.column(i)) + rep.action(i) * s - s * rep.action(i));
    c = is_infinitesimal_deformation(rep, d);
    if (!c) throw Error(ErrorKind::OracleDisagreement, "trivial deformation fails " + c.clause, c.witness, c.defect);
    c = triviality_check(rep, d, n, s);
    if (!c) throw Error(ErrorKind::OracleDisagreement, "trivial deformation fails " + c.clause, c.witness, c.defect);
    return d;
}

Check triviality_check(const Representation& rep, const DeformationData& dd, const Matrix& n, const Matrix& s) {
    const LieAlgebra& g = rep.algebra();
    std::size_t d = g.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vec x = unit_vec(d, i), y = unit_vec(d, j);
            Vec b1 = tensor_bracket(d, dd.bracket1, x, y);
            Vec c7 = b1 - n_bracket(g, n, x, y);
            if (!is_zero(c7)) return Check::fail("bracket1 = [ , ]_N", {i, j}, c7);
            Vec c8 = n * b1 - g.bracket(n * x, n * y);
            if (!is_zero(c8)) return Check::fail("N bracket1 = [N, N]", {i, j}, c8);
        }
    for (std::size_t i = 0; i < d; ++i) {
        const Matrix& r = rep.action(i);
        Matrix rn = rep.action(n.column(i));
        Matrix c9 = dd.action1[i] - (rn + r * s - s * r);
        if (!c9.is_zero()) return Check::fail("action1 = trivial action", {i}, flat(c9));
        Matrix c10 = s * dd.action1[i] - rn * s;
        if (!c10.is_zero()) return Check::fail("S action1 = N . S", {i}, flat(c10));
    }
    return Check::pass();
}

Check nijenhuis_structure_identity(const Representation& rep, const Matrix& n, const Matrix& s) {
    const LieAlgebra& g = rep.algebra();
    require_square(n, g.dim(), "N");
    require_square(s, rep.dim(), "S");
    for (std::size_t i = 0; i < g.dim(); ++i) {
        Matrix rn = rep.action(n.column(i));
        const Matrix& r = rep.action(i);
        Matrix def = rn * s - (s * rn + r * s * s - s * r * s);
        if (!def.is_zero()) return Check::fail("Nijenhuis structure identity", {i}, flat(def));
    }
    return Check::pass();
}

bool nijenhuis_structure_oracle(const Representation& rep, const Matrix& n, const Matrix& s) {
    return is_nijenhuis(semidirect(dual_rep(rep)), direct_sum(n, s.transpose()));
}

bool is_nijenhuis_structure(const Representation& rep, const Matrix& n, const Matrix& s) {
    bool direct = is_nijenhuis(rep.algebra(), n) && nijenhuis_structure_identity(rep, n, s).ok;
    bool oracle = nijenhuis_structure_oracle(rep, n, s);
    if (direct != oracle)
        throw Error(ErrorKind::OracleDisagreement,
                    std::string("direct Nijenhuis structure check says ") + (direct ? "yes" : "no") +
                        ", semidirect lift says " + (oracle ? "yes" : "no"));
    return direct;
}

Representation tilde_action(const Representation& rep, const Matrix& n, const Matrix& s) {
    if (!is_nijenhuis_structure(rep, n, s))
        throw Error(ErrorKind::NotNijenhuisStructure, "(N, S) is not a Nijenhuis structure");
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < rep.algebra().dim(); ++i)
        acts.push_back(rep.action(n.column(i)) - rep.action(i) * s + s * rep.action(i));
    return Representation::create(deformed_bracket(rep.algebra(), n), rep.dim(), std::move(acts));
}

const Check* ONReport::first_failure() const {
    for (const Check* c : {&o_operator, &nijenhuis, &structure, &intertwining, &brackets, &tilde})
        if (!c->ok) return c;
    return nullptr;
}

Vec deformed_t_bracket(const Representation& rep, const Matrix& t, const Matrix& s, const Vec& m, const Vec& n) {
    return t_bracket(rep, t, s * m, n) + t_bracket(rep, t, m, s * n) - s * t_bracket(rep, t, m, n);
}

ONReport on_report(const Representation& rep, const Matrix& t, const Matrix& n, const Matrix& s) {
    const LieAlgebra& g = rep.algebra();
    require_square(n, g.dim(), "N");
    require_square(s, rep.dim(), "S");
    ONReport r;
    r.o_operator = o_check(rep, t);
    r.nijenhuis = nijenhuis_check(g, n);
    r.structure = nijenhuis_structure_identity(rep, n, s);
    Matrix inter = n * t - t * s;
    if (!inter.is_zero()) r.intertwining = Check::fail("NT = TS", {}, flat(inter));
    Matrix nt = n * t;
    std::size_t md = rep.dim();
    for (std::size_t i = 0; i < md && r.brackets.ok; ++i)
        for (std::size_t j = i + 1; j < md; ++j) {
            Vec m = unit_vec(md, i), k = unit_vec(md, j);
            Vec def = t_bracket(rep, nt, m, k) - deformed_t_bracket(rep, t, s, m, k);
            if (!is_zero(def)) {
                r.brackets = Check::fail("[,]^NT = [,]^T_S", {i, j}, def);
                break;
            }
        }
    if (r.o_operator.ok && r.nijenhuis.ok && r.structure.ok && r.intertwining.ok && r.brackets.ok) {
        for (std::size_t i = 0; i < md && r.tilde.ok; ++i)
            for (std::size_t j = i + 1; j < md; ++j) {
                Vec m = unit_vec(md, i), k = unit_vec(md, j);
                Vec tb = tilde_act(rep, n, s, t * m, k) - tilde_act(rep, n, s, t * k, m);
                Vec def = tb - deformed_t_bracket(rep, t, s, m, k);
                if (!is_zero(def)) {
                    r.tilde = Check::fail("[,]^T_~ = [,]^T_S", {i, j}, def);
                    break;
                }
            }
    }
    return r;
}

bool is_on_structure(const Representation& rep, const Matrix& t, const Matrix& n, const Matrix& s) {
    return on_report(rep, t, n, s).ok();
}

Check hierarchy_identities(const Representation& rep, const Matrix& t, const Matrix& n, const Matrix& s,
                           unsigned kmax) {
    const LieAlgebra& g = rep.algebra();
    std::size_t md = rep.dim();
    std::vector<Matrix> sp, np;
    for (unsigned k = 0; k <= kmax; ++k) {
        sp.push_back(power(s, k));
        np.push_back(power(n, k));
    }
    for (unsigned k = 0; k <= kmax; ++k)
        for (unsigned l = 0; k + l <= kmax; ++l) {
            Matrix tk = t * sp[k], tl = t * sp[l], tkl = t * sp[k + l];
            for (std::size_t i = 0; i < md; ++i)
                for (std::size_t j = i + 1; j < md; ++j) {
                    Vec m = unit_vec(md, i), q = unit_vec(md, j);
                    Vec dev = deformed_t_bracket(rep, t, sp[k + l], m, q);
                    Vec e23 = tk * dev - n_bracket(g, np[l], tk * m, tk * q);
                    if (!is_zero(e23)) return Check::fail("T_k bracket k=" + std::to_string(k) + " l=" + std::to_string(l), {i, j}, e23);
                    Vec a = t_bracket(rep, tkl, m, q);
                    if (a != dev) return Check::fail("T_{k+l} bracket k=" + std::to_string(k) + " l=" + std::to_string(l), {i, j}, a - dev);
                    // the printed S^k([m,n]^{T_l}) fails; the deformation of [ , ]^{T_l} by S^k holds
                    Vec b = deformed_t_bracket(rep, tl, sp[k], m, q);
                    if (a != b) return Check::fail("S^k deformation k=" + std::to_string(k) + " l=" + std::to_string(l), {i, j}, a - b);
                }
        }
    return Check::pass();
}

Hierarchy hierarchy(const Representation& rep, const Matrix& t, const Matrix& n, const Matrix& s, unsigned kmax) {
    ONReport r = on_report(rep, t, n, s);
    if (!r.ok()) {
        const Check* f = r.first_failure();
        throw Error(ErrorKind::NotONStructure, "input fails " + f->clause, f->witness, f->defect);
    }
    Hierarchy h;
    Matrix sk = Matrix::identity(rep.dim()), nk = Matrix::identity(rep.algebra().dim());
    for (unsigned k = 0; k <= kmax; ++k) {
        Matrix tk = t * sk;
        if (tk != nk * t) throw Error(ErrorKind::OracleDisagreement, "T S^k != N^k T", {k});
        Check c = o_check(rep, tk);
        if (!c) throw Error(ErrorKind::OracleDisagreement, "T_" + std::to_string(k) + " is not an O-operator", c.witness, c.defect);
        h.t.push_back(std::move(tk));
        sk = sk * s;
        nk = nk * n;
    }
    for (unsigned k = 0; k <= kmax; ++k)
        for (unsigned l = k + 1; l <= kmax; ++l)
            if (!are_compatible(rep, h.t[k], h.t[l]))
                throw Error(ErrorKind::OracleDisagreement, "T_k and T_l are not compatible", {k, l});
    Check c = hierarchy_identities(rep, t, n, s, kmax);
    if (!c) throw Error(ErrorKind::OracleDisagreement, "hierarchy identity " + c.clause, c.witness, c.defect);
    return h;
}

ONStructure on_from_compatible_pair(const Representation& rep, const Matrix& t1, const Matrix& t2) {
    if (!are_compatible(rep, t1, t2)) throw Error(ErrorKind::NotCompatible, "T1 and T2 are not compatible");
    Matrix inv = invert(t2);
    ONStructure on{t2, t1 * inv, inv * t1};
    ONReport r = on_report(rep, on.t, on.n, on.s);
    if (!r.ok()) {
        const Check* f = r.first_failure();
        throw Error(ErrorKind::OracleDisagreement, "pair construction fails " + f->clause, f->witness, f->defect);
    }
    return on;
}

Check pn_direct(const LieAlgebra& g, const Bivector& r, const Matrix& n) {
    if (r.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "bivector dimension");
    Multivector sch = schouten_self(g, r);
    if (!sch.empty()) {
        Vec coeffs;
        for (const auto& [k, v] : sch) coeffs.push_back(v);
        return Check::fail("r-matrix", sch.begin()->first, coeffs);
    }
    Check c = nijenhuis_check(g, n);
    if (!c) return c;
    Matrix rs = r_sharp(r);
    Matrix nstar = n.transpose();
    Matrix inter = n * rs - rs * nstar;
    if (!inter.is_zero()) return Check::fail("N r# = r# N*", {}, flat(inter));
    Representation co = coadjoint(g);
    Matrix nr = n * rs;
    std::size_t d = g.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vec a = unit_vec(d, i), b = unit_vec(d, j);
            Vec def = t_bracket(co, nr, a, b) - deformed_t_bracket(co, rs, nstar, a, b);
            if (!is_zero(def)) return Check::fail("[,]^{N r#} = [,]^{r#}_{N*}", {i, j}, def);
        }
    return Check::pass();
}

bool is_pn_structure(const LieAlgebra& g, const Bivector& r, const Matrix& n) {
    bool direct = pn_direct(g, r, n).ok;
    bool oracle = is_on_structure(coadjoint(g), r_sharp(r), n, n.transpose());
    if (direct != oracle)
        throw Error(ErrorKind::OracleDisagreement, std::string("PN check says ") + (direct ? "yes" : "no") +
                                                       ", coadjoint ON check says " + (oracle ? "yes" : "no"));
    return direct;
}

std::vector<Bivector> pn_hierarchy(const LieAlgebra& g, const Bivector& r, const Matrix& n, unsigned kmax) {
    if (!is_pn_structure(g, r, n)) throw Error(ErrorKind::NotPN, "(r, N) is not a PN-structure");
    std::vector<Bivector> out;
    Matrix nk = Matrix::identity(g.dim());
    Matrix rs = r_sharp(r);
    for (unsigned k = 0; k <= kmax; ++k) {
        out.push_back(Bivector::from_sharp(nk * rs));
        if (!is_r_matrix(g, out.back()))
            throw Error(ErrorKind::OracleDisagreement, "r_" + std::to_string(k) + " is not an r-matrix", {k});
        nk = nk * n;
    }
    for (unsigned k = 0; k <= kmax; ++k)
        for (unsigned l = k + 1; l <= kmax; ++l)
            if (!is_r_matrix(g, out[k] + out[l]))
                throw Error(ErrorKind::OracleDisagreement, "r_k + r_l is not an r-matrix", {k, l});
    return out;
}

}  // namespace liemod
