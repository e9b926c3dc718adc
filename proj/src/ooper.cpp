#include "liemod/ooper.hpp"

#include <algorithm>

#include "liemod/linalg.hpp"
#include "liemod/onstruct.hpp"

namespace liemod {

namespace {

void check_t_shape(const Representation& rep, const Matrix& t) {
    if (t.rows() != rep.algebra().dim() || t.cols() != rep.dim())
        throw Error(ErrorKind::DimensionMismatch, "T must be (dim g) x (dim M)", {t.rows(), t.cols()});
}

// Tm . n - Tn . m
Vec t_bracket(const Representation& rep, const Matrix& t, const Vec& m, const Vec& n) {
    return rep.act(t * m, n) - rep.act(t * n, m);
}

Vec t_bracket(const Representation& rep, const Matrix& t, std::size_t i, std::size_t j) {
    return rep.action(t.column(i)).column(j) - rep.action(t.column(j)).column(i);
}

void require_o(const Representation& rep, const Matrix& t, const char* what) {
    Check c = o_check(rep, t);
    if (!c) throw Error(ErrorKind::NotOOperator, what, c.witness, c.defect);
}

int sort_sign(std::vector<std::size_t>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

void add_term(Multivector& out, const std::vector<std::size_t>& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

Multivector scaled(const Multivector& a, const Rational& s) {
    Multivector out;
    for (const auto& [k, v] : a) add_term(out, k, s * v);
    return out;
}

Multivector sum(Multivector a, const Multivector& b) {
    for (const auto& [k, v] : b) add_term(a, k, v);
    return a;
}

Multivector monomial(std::vector<std::size_t> idx) {
    Multivector m;
    int s = sort_sign(idx);
    if (s != 0) m.emplace(std::move(idx), Rational(s));
    return m;
}

Multivector schouten_mono(const LieAlgebra& g, const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
    if (p.empty() || q.empty()) return {};
    if (p.size() == 1 && q.size() == 1) {
        Multivector out;
        Vec br = g.bracket(p[0], q[0]);
        for (std::size_t k = 0; k < br.size(); ++k) add_term(out, {k}, br[k]);
        return out;
    }
    if (q.size() == 1) {
        // [P, y] = -(-1)^{(p-1)(1-1)} [y, P] = -[y, P]
        return scaled(schouten_mono(g, q, p), Rational(-1));
    }
    // [P, y ^ R] = [P, y] ^ R + (-1)^{(p-1)} y ^ [P, R]
    std::vector<std::size_t> y{q[0]};
    std::vector<std::size_t> r(q.begin() + 1, q.end());
    Multivector first = wedge(schouten_mono(g, p, y), monomial(r));
    Multivector second = wedge(monomial(y), schouten_mono(g, p, r));
    Rational sign = (p.size() - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    return sum(first, scaled(second, sign));
}

}  // namespace

std::vector<Vec> o_residual(const Representation& rep, const Matrix& t) {
    check_t_shape(rep, t);
    const LieAlgebra& g = rep.algebra();
    std::vector<Vec> out;
    for (std::size_t i = 0; i < rep.dim(); ++i)
        for (std::size_t j = i + 1; j < rep.dim(); ++j)
            out.push_back(g.bracket(t.column(i), t.column(j)) - t * t_bracket(rep, t, i, j));
    return out;
}

Check o_check(const Representation& rep, const Matrix& t) {
    check_t_shape(rep, t);
    const LieAlgebra& g = rep.algebra();
    for (std::size_t i = 0; i < rep.dim(); ++i)
        for (std::size_t j = i + 1; j < rep.dim(); ++j) {
            Vec r = g.bracket(t.column(i), t.column(j)) - t * t_bracket(rep, t, i, j);
            if (!is_zero(r)) return Check::fail("o-operator", {i, j}, r);
        }
    return Check::pass();
}

bool is_o_operator(const Representation& rep, const Matrix& t) { return o_check(rep, t).ok; }

LieAlgebra induced_lie(const Representation& rep, const Matrix& t) {
    require_o(rep, t, "induced bracket needs an O-operator");
    std::size_t d = rep.dim();
    std::vector<Rational> c(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec v = t_bracket(rep, t, i, j);
            for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = v[k];
        }
    return LieAlgebra::create(d, std::move(c));
}

Subspace graph(const Representation& rep, const Matrix& t) {
    check_t_shape(rep, t);
    std::size_t n = rep.algebra().dim(), d = rep.dim();
    std::vector<Vec> basis;
    for (std::size_t a = 0; a < d; ++a) {
        Vec v(n + d);
        for (std::size_t k = 0; k < n; ++k) v[k] = t(k, a);
        v[n + a] = 1;
        basis.push_back(std::move(v));
    }
    return Subspace::from_basis(n + d, std::move(basis));
}

bool graph_check(const Representation& rep, const Matrix& t) {
    return is_subalgebra(semidirect(rep), graph(rep, t)).ok;
}

StructureReport structure_report(const Representation& rep, const Matrix& t) {
    LieAlgebra mt = induced_lie(rep, t);
    StructureReport r;
    r.kernel_is_ideal_in_MT = is_ideal(mt, Subspace::from_basis(rep.dim(), kernel(t))).ok;
    r.image_is_subalgebra = is_subalgebra(rep.algebra(), image(t)).ok;
    return r;
}

Bivector Bivector::from_matrix(const Matrix& m) {
    if (!m.is_square() || !is_antisymmetric(m))
        throw Error(ErrorKind::NotAntisymmetric, "bivector matrix must be square and antisymmetric");
    Bivector b;
    b.m_ = m;
    return b;
}

Bivector Bivector::from_entries(std::size_t dim,
                                const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& e) {
    Bivector b(dim);
    for (const auto& [i, j, v] : e) {
        if (i >= j || j >= dim) throw Error(ErrorKind::DimensionMismatch, "bivector entries need i < j < dim", {i, j});
        b.m_(i, j) = v;
        b.m_(j, i) = -v;
    }
    return b;
}

Bivector Bivector::from_sharp(const Matrix& s) { return from_matrix(s.transpose()); }

Matrix r_sharp(const Bivector& r) { return r.matrix().transpose(); }

Multivector wedge(const Multivector& a, const Multivector& b) {
    Multivector out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            std::vector<std::size_t> idx(ka);
            idx.insert(idx.end(), kb.begin(), kb.end());
            int s = sort_sign(idx);
            if (s == 0) continue;
            add_term(out, idx, s > 0 ? va * vb : -(va * vb));
        }
    return out;
}

Multivector schouten(const LieAlgebra& g, const Multivector& p, const Multivector& q) {
    Multivector out;
    for (const auto& [kp, vp] : p)
        for (const auto& [kq, vq] : q) {
            Rational s = vp * vq;
            for (const auto& [k, v] : schouten_mono(g, kp, kq)) add_term(out, k, s * v);
        }
    return out;
}

Multivector to_multivector(const Bivector& r) {
    Multivector out;
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = i + 1; j < r.dim(); ++j) add_term(out, {i, j}, r(i, j));
    return out;
}

Multivector schouten_self(const LieAlgebra& g, const Bivector& r) {
    if (r.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "bivector dimension differs from the algebra");
    Multivector m = to_multivector(r);
    return schouten(g, m, m);
}

bool is_r_matrix(const LieAlgebra& g, const Bivector& r) { return schouten_self(g, r).empty(); }

bool lemma_r_equiv(const LieAlgebra& g, const Bivector& r) {
    bool cybe = is_r_matrix(g, r);
    bool oop = is_o_operator(coadjoint(g), r_sharp(r));
    if (cybe != oop)
        throw Error(ErrorKind::OracleDisagreement,
                    std::string("Schouten says ") + (cybe ? "r-matrix" : "not r-matrix") + ", coadjoint O-operator says " +
                        (oop ? "O-operator" : "not O-operator"));
    return cybe;
}

Matrix gauge_transform(const Representation& rep, const Matrix& t, const Matrix& b) {
    check_t_shape(rep, t);
    if (b.rows() != rep.dim() || b.cols() != rep.algebra().dim())
        throw Error(ErrorKind::DimensionMismatch, "B must be (dim M) x (dim g)");
    require_o(rep, t, "gauge transformation of a non O-operator");
    Check cc = is_cocycle(rep, Cochain::from_map(b));
    if (!cc) throw Error(ErrorKind::NotCocycle, "B is not a 1-cocycle", cc.witness, cc.defect);
    Matrix a = Matrix::identity(rep.dim()) + b * t;
    if (!is_invertible(a)) {
        auto k = kernel(a);
        throw Error(ErrorKind::NotAdmissible, "id + B T is singular", {}, k.front());
    }
    Matrix tb = t * invert(a);
    require_o(rep, tb, "gauge transform is not an O-operator");
    return tb;
}

bool gauge_iso_check(const Representation& rep, const Matrix& t, const Matrix& b) {
    Matrix tb = gauge_transform(rep, t, b);
    Matrix a = Matrix::identity(rep.dim()) + b * t;
    for (std::size_t i = 0; i < rep.dim(); ++i)
        for (std::size_t j = i + 1; j < rep.dim(); ++j) {
            Vec lhs = a * t_bracket(rep, t, i, j);
            Vec rhs = t_bracket(rep, tb, a.column(i), a.column(j));
            if (lhs != rhs) return false;
        }
    return true;
}

Reduction mr_reduce(const Representation& rep, const Matrix& t, const Subspace& h, const Subspace& e,
                    const Subspace& n) {
    check_t_shape(rep, t);
    const LieAlgebra& g = rep.algebra();
    if (h.ambient() != g.dim() || e.ambient() != g.dim() || n.ambient() != rep.dim())
        throw Error(ErrorKind::DimensionMismatch, "h, E must live in g and N in M");
    require_o(rep, t, "reduction needs an O-operator");

    Check sub = is_subalgebra(g, h);
    if (!sub) throw Error(ErrorKind::NotSubalgebra, "h is not a subalgebra", sub.witness, sub.defect);

    Subspace w = intersect(e, h);
    std::vector<Vec> w_in_h;
    for (const auto& v : w.basis()) w_in_h.push_back(*h.coordinates(v));
    Subspace wh = Subspace::from_basis(h.dim(), w_in_h);
    LieAlgebra hsub = subalgebra(g, h);
    Check id = is_ideal(hsub, wh);
    if (!id) throw Error(ErrorKind::QuotientError, "E n h is not an ideal of h", id.witness, id.defect);
    Quotient q = quotient(hsub, wh);

    for (std::size_t i = 0; i < h.dim(); ++i) {
        Matrix act = rep.action(h.basis()[i]);
        for (std::size_t j = 0; j < n.dim(); ++j) {
            Vec v = act * n.basis()[j];
            if (!n.contains(v)) throw Error(ErrorKind::NotStable, "N is not an h-submodule", {i, j}, v);
        }
    }

    Matrix nb = n.basis_matrix();
    Matrix stacked(0, n.dim());
    for (const auto& x : w.basis()) stacked = stacked.vstack(rep.action(x) * nb);
    std::vector<Vec> a_basis;
    for (const auto& c : kernel(stacked)) a_basis.push_back(nb * c);
    Subspace a = Subspace::span(rep.dim(), a_basis);

    Matrix t_bar(q.algebra.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec tm = t * a.basis()[j];
        auto hc = h.coordinates(tm);
        if (!hc) throw Error(ErrorKind::ImageEscapesH, "T maps the reduced module outside h", {j}, tm);
        t_bar.set_column(j, q.projection * *hc);
    }

    Matrix hb = h.basis_matrix();
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < q.algebra.dim(); ++k) {
        Matrix act = rep.action(hb * q.section.column(k));
        Matrix m(a.dim(), a.dim());
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec v = act * a.basis()[j];
            auto c = a.coordinates(v);
            if (!c) throw Error(ErrorKind::NotStable, "reduced module is not stable under h", {k, j}, v);
            m.set_column(j, *c);
        }
        acts.push_back(std::move(m));
    }
    Representation red = Representation::create(q.algebra, a.dim(), std::move(acts));
    require_o(red, t_bar, "reduced operator");

    Matrix ab = a.basis_matrix();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec lhs = ab * red.act(t_bar.column(i), unit_vec(a.dim(), j));
            Vec rhs = rep.act(t * a.basis()[i], a.basis()[j]);
            if (lhs != rhs)
                throw Error(ErrorKind::OracleDisagreement, "reduced action differs from the original", {i, j},
                            lhs - rhs);
        }
    return {h, w, a, std::move(q), std::move(red), std::move(t_bar)};
}

std::vector<Vec> compatibility_defect(const Representation& rep, const Matrix& t1, const Matrix& t2) {
    check_t_shape(rep, t1);
    check_t_shape(rep, t2);
    const LieAlgebra& g = rep.algebra();
    std::vector<Vec> out;
    for (std::size_t i = 0; i < rep.dim(); ++i)
        for (std::size_t j = i + 1; j < rep.dim(); ++j) {
            Vec v = g.bracket(t1.column(i), t2.column(j)) + g.bracket(t2.column(i), t1.column(j));
            v -= t1 * t_bracket(rep, t2, i, j);
            v -= t2 * t_bracket(rep, t1, i, j);
            out.push_back(std::move(v));
        }
    return out;
}

bool are_compatible(const Representation& rep, const Matrix& t1, const Matrix& t2) {
    require_o(rep, t1, "T1");
    require_o(rep, t2, "T2");
    auto d = compatibility_defect(rep, t1, t2);
    bool ok = std::all_of(d.begin(), d.end(), [](const Vec& v) { return is_zero(v); });
    if (ok != is_o_operator(rep, t1 + t2))
        throw Error(ErrorKind::OracleDisagreement, "compatibility identity disagrees with T1 + T2");
    return ok;
}

Matrix nijenhuis_from_pair(const Representation& rep, const Matrix& t1, const Matrix& t2) {
    if (!are_compatible(rep, t1, t2)) throw Error(ErrorKind::NotCompatible, "T1 and T2 are not compatible");
    Matrix n = t1 * invert(t2);
    Check c = nijenhuis_check(rep.algebra(), n);
    if (!c) throw Error(ErrorKind::NotNijenhuis, "T1 T2^{-1} is not Nijenhuis", c.witness, c.defect);
    return n;
}

PreLieProduct PreLieProduct::create(std::size_t dim, std::vector<Rational> tensor) {
    if (tensor.size() != dim * dim * dim) throw Error(ErrorKind::DimensionMismatch, "pre-Lie tensor must have dim^3 entries");
    Check c = pre_lie_check(dim, tensor);
    if (!c) throw Error(ErrorKind::PreconditionFailed, "left pre-Lie identity fails", c.witness, c.defect);
    PreLieProduct p;
    p.dim_ = dim;
    p.tensor_ = std::move(tensor);
    return p;
}

namespace {

Vec tensor_product(std::size_t d, const std::vector<Rational>& t, const Vec& x, const Vec& y) {
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

// (x a y) b z - x a (y b z)
Vec associator(std::size_t d, const std::vector<Rational>& a, const std::vector<Rational>& b, const Vec& x,
               const Vec& y, const Vec& z) {
    return tensor_product(d, b, tensor_product(d, a, x, y), z) - tensor_product(d, a, x, tensor_product(d, b, y, z));
}

}  // namespace

Vec PreLieProduct::product(const Vec& x, const Vec& y) const { return tensor_product(dim_, tensor_, x, y); }

Check pre_lie_check(std::size_t d, const std::vector<Rational>& t) {
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec x = unit_vec(d, i), y = unit_vec(d, j), z = unit_vec(d, k);
                Vec r = associator(d, t, t, x, y, z) - associator(d, t, t, y, x, z);
                if (!is_zero(r)) return Check::fail("pre-lie", {i, j, k}, r);
            }
    return Check::pass();
}

PreLieProduct pre_lie_from_o(const Representation& rep, const Matrix& t) {
    require_o(rep, t, "pre-Lie product needs an O-operator");
    std::size_t d = rep.dim();
    std::vector<Rational> c(d * d * d);
    for (std::size_t i = 0; i < d; ++i) {
        Matrix act = rep.action(t.column(i));
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = act(k, j);
    }
    return PreLieProduct::create(d, std::move(c));
}

Check pre_lie_mixed_check(const PreLieProduct& p1, const PreLieProduct& p2) {
    if (p1.dim() != p2.dim()) throw Error(ErrorKind::DimensionMismatch, "pre-Lie products on different spaces");
    std::size_t d = p1.dim();
    const auto& a = p1.tensor();
    const auto& b = p2.tensor();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec x = unit_vec(d, i), y = unit_vec(d, j), z = unit_vec(d, k);
                Vec lhs = associator(d, a, b, x, y, z) + associator(d, b, a, x, y, z);
                Vec rhs = associator(d, a, b, y, x, z) + associator(d, b, a, y, x, z);
                if (lhs != rhs) return Check::fail("pre-lie-mixed", {i, j, k}, lhs - rhs);
            }
    return Check::pass();
}

bool pre_lie_compatible(const PreLieProduct& p1, const PreLieProduct& p2) {
    bool mixed = pre_lie_mixed_check(p1, p2).ok;
    std::vector<Rational> s(p1.tensor().size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = p1.tensor()[i] + p2.tensor()[i];
    bool sum_ok = pre_lie_check(p1.dim(), s).ok;
    if (mixed != sum_ok) throw Error(ErrorKind::OracleDisagreement, "mixed pre-Lie identity disagrees with the sum");
    return mixed;
}

}  // namespace liemod
