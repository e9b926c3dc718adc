#include "liemod/twilled.hpp"

#include <string>

#include "liemod/linalg.hpp"
#include "liemod/ooper.hpp"

namespace liemod {

namespace {

Vec head(const Vec& v, std::size_t n) { return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); }
Vec tail(const Vec& v, std::size_t n) { return Vec(v.begin() + static_cast<std::ptrdiff_t>(n), v.end()); }
Vec concat(const Vec& a, const Vec& b) {
    Vec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<Rational> tensor_of(std::size_t n, auto&& br) {
    std::vector<Rational> c(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = br(unit_vec(n, i), unit_vec(n, j));
            for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = v[k];
        }
    return c;
}

void require_omega(const TwilledLieAlgebra& tw, const Matrix& omega) {
    if (omega.rows() != tw.dim_b() || omega.cols() != tw.dim_a())
        throw Error(ErrorKind::DimensionMismatch, "Omega must be dim_b x dim_a");
}

}  // namespace

TwilledLieAlgebra TwilledLieAlgebra::from_blocks(const LieAlgebra& total, std::size_t dim_a) {
    std::size_t n = total.dim();
    if (dim_a > n) throw Error(ErrorKind::DimensionMismatch, "dim_a exceeds the total dimension");
    std::size_t db = n - dim_a;
    std::vector<Vec> ea, eb;
    for (std::size_t i = 0; i < dim_a; ++i) ea.push_back(unit_vec(n, i));
    for (std::size_t i = dim_a; i < n; ++i) eb.push_back(unit_vec(n, i));
    Subspace sa = Subspace::from_basis(n, ea), sb = Subspace::from_basis(n, eb);
    if (Check c = is_subalgebra(total, sa); !c) throw Error(ErrorKind::NotSubalgebra, "a is not a subalgebra", {0}, c.defect);
    if (Check c = is_subalgebra(total, sb); !c) throw Error(ErrorKind::NotSubalgebra, "b is not a subalgebra", {1}, c.defect);

    std::vector<Matrix> act1, act2;
    for (std::size_t i = 0; i < dim_a; ++i) {
        Matrix m(db, db);
        for (std::size_t j = 0; j < db; ++j) m.set_column(j, tail(total.bracket(i, dim_a + j), dim_a));
        act1.push_back(std::move(m));
    }
    for (std::size_t j = 0; j < db; ++j) {
        Matrix m(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i) m.set_column(i, head(total.bracket(dim_a + j, i), dim_a));
        act2.push_back(std::move(m));
    }
    TwilledLieAlgebra tw;
    tw.total_ = total;
    tw.dim_a_ = dim_a;
    tw.action1_ = Representation::create(subalgebra(total, sa), db, std::move(act1));
    tw.action2_ = Representation::create(subalgebra(total, sb), dim_a, std::move(act2));
    return tw;
}

TwilledLieAlgebra twilled_new(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::size_t n = g.dim();
    if (a.ambient() != n || b.ambient() != n) throw Error(ErrorKind::DimensionMismatch, "subspaces live in another space");
    std::vector<Vec> cols = a.basis();
    cols.insert(cols.end(), b.basis().begin(), b.basis().end());
    if (cols.size() != n || !are_independent(cols, n))
        throw Error(ErrorKind::NotComplementary, "a (+) b is not the whole space", {a.dim(), b.dim()});
    if (Check c = is_subalgebra(g, a); !c) throw Error(ErrorKind::NotSubalgebra, "a is not a subalgebra", {0}, c.defect);
    if (Check c = is_subalgebra(g, b); !c) throw Error(ErrorKind::NotSubalgebra, "b is not a subalgebra", {1}, c.defect);
    return TwilledLieAlgebra::from_blocks(change_basis(g, Matrix::from_columns(cols, n)), a.dim());
}

TwilledLieAlgebra swap(const TwilledLieAlgebra& tw) {
    std::size_t n = tw.total().dim(), da = tw.dim_a(), db = tw.dim_b();
    Matrix p(n, n);
    for (std::size_t j = 0; j < db; ++j) p(da + j, j) = 1;
    for (std::size_t i = 0; i < da; ++i) p(i, db + i) = 1;
    return TwilledLieAlgebra::from_blocks(change_basis(tw.total(), p), db);
}

Representation bar_action(const Representation& rep, const Matrix& t) {
    const LieAlgebra& g = rep.algebra();
    LieAlgebra mt = induced_lie(rep, t);
    std::vector<Matrix> acts;
    for (std::size_t m = 0; m < rep.dim(); ++m) {
        Vec tm = t.column(m);
        Matrix a(g.dim(), g.dim());
        for (std::size_t x = 0; x < g.dim(); ++x)
            a.set_column(x, g.bracket(tm, unit_vec(g.dim(), x)) + t * rep.action(x).column(m));
        acts.push_back(std::move(a));
    }
    return Representation::create(std::move(mt), g.dim(), std::move(acts));
}

TwilledLieAlgebra twilled_from_o(const Representation& rep, const Matrix& t) {
    const LieAlgebra& g = rep.algebra();
    std::size_t d = g.dim(), md = rep.dim();
    Representation bar = bar_action(rep, t);
    const LieAlgebra& mt = bar.algebra();
    auto br = [&](const Vec& u, const Vec& v) {
        Vec x = head(u, d), m = tail(u, d), y = head(v, d), n = tail(v, d);
        Vec first = g.bracket(x, y) + bar.act(m, y) - bar.act(n, x);
        Vec second = rep.act(x, n) - rep.act(y, m) + mt.bracket(m, n);
        return concat(first, second);
    };
    return TwilledLieAlgebra::from_blocks(LieAlgebra::create(d + md, tensor_of(d + md, br)), d);
}

Cochain twilled_mu2(const TwilledLieAlgebra& tw) {
    std::size_t da = tw.dim_a(), n = tw.total().dim();
    auto br = [&](const Vec& p, const Vec& q) {
        Vec x = head(p, da), u = tail(p, da), y = head(q, da), v = tail(q, da);
        return concat(tw.action2().act(u, y) - tw.action2().act(v, x), tw.b().bracket(u, v));
    };
    return Cochain::from_bracket(LieAlgebra::create(n, tensor_of(n, br)));
}

MCReport mc_report_abstract(const TwilledLieAlgebra& tw, const Matrix& omega) {
    require_omega(tw, omega);
    Cochain o = Cochain::from_map(omega);
    Cochain d = ce_differential(tw.action1(), o);
    Cochain half = Rational(1, 2) * derived_bracket(twilled_mu2(tw), tw.dim_a(), o, o);
    Cochain mc = d + half;
    MCReport r;
    for (std::size_t k = 0; k < mc.size(); ++k)
        if (!is_zero(mc.value(k))) {
            r.mc = Check::fail("Maurer-Cartan", mc.tuple(k), mc.value(k));
            break;
        }
    for (std::size_t k = 0; k < d.size(); ++k)
        if (!is_zero(d.value(k))) {
            r.cocycle = Check::fail("d Omega = 0", d.tuple(k), d.value(k));
            break;
        }
    return r;
}

MCReport mc_report(const TwilledLieAlgebra& tw, const Matrix& omega) {
    require_omega(tw, omega);
    std::size_t da = tw.dim_a();
    const auto& a1 = tw.action1();
    const auto& a2 = tw.action2();
    MCReport r;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = i + 1; j < da; ++j) {
            Vec x = unit_vec(da, i), y = unit_vec(da, j);
            Vec ox = omega * x, oy = omega * y, oxy = omega * tw.a().bracket(x, y);
            Vec cyc = a1.act(x, oy) - a1.act(y, ox);
            Vec mc = tw.b().bracket(ox, oy) + cyc - omega * (a2.act(ox, y) - a2.act(oy, x)) - oxy;
            if (r.mc.ok && !is_zero(mc)) r.mc = Check::fail("Maurer-Cartan", {i, j}, mc);
            Vec cc = oxy - cyc;
            if (r.cocycle.ok && !is_zero(cc)) r.cocycle = Check::fail("d Omega = 0", {i, j}, cc);
        }
    MCReport ab = mc_report_abstract(tw, omega);
    if (ab.mc.ok != r.mc.ok || ab.cocycle.ok != r.cocycle.ok)
        throw Error(ErrorKind::OracleDisagreement, "explicit and cochain Maurer-Cartan checks differ");
    return r;
}

bool mc_check(const TwilledLieAlgebra& tw, const Matrix& omega) { return mc_report(tw, omega).mc.ok; }
bool strong_mc_check(const TwilledLieAlgebra& tw, const Matrix& omega) { return mc_report(tw, omega).strong(); }

namespace {

void require_strong(const Representation& rep, const Matrix& t, const Matrix& omega) {
    MCReport r = mc_report(twilled_from_o(rep, t), omega);
    if (!r.strong()) {
        const Check& c = r.cocycle.ok ? r.mc : r.cocycle;
        throw Error(ErrorKind::NotStrongMC, c.clause, c.witness, c.defect);
    }
}

}  // namespace

OmegaStructures omega_structures(const Representation& rep, const Matrix& t, const Matrix& omega) {
    if (!is_o_operator(rep, t)) throw Error(ErrorKind::NotOOperator, "T is not an O-operator");
    require_strong(rep, t, omega);
    const LieAlgebra& g = rep.algebra();
    std::size_t d = g.dim(), md = rep.dim();
    Representation bar = bar_action(rep, t);
    const LieAlgebra& mt = bar.algebra();
    // Omega is an O-operator on g over M^T
    if (!is_o_operator(bar, omega)) throw Error(ErrorKind::OracleDisagreement, "Omega is not an O-operator over M^T");
    LieAlgebra g_omega = induced_lie(bar, omega);
    std::vector<Matrix> acts;
    for (std::size_t x = 0; x < d; ++x) {
        Vec ox = omega.column(x);
        Matrix a(md, md);
        for (std::size_t m = 0; m < md; ++m) {
            Vec em = unit_vec(md, m);
            a.set_column(m, mt.bracket(ox, em) + omega * bar.act(em, unit_vec(d, x)));
        }
        acts.push_back(std::move(a));
    }
    Representation act = Representation::create(g_omega, md, std::move(acts));
    auto br = [&](const Vec& u, const Vec& v) {
        Vec x = head(u, d), m = tail(u, d), y = head(v, d), n = tail(v, d);
        Vec first = bar.act(m, y) - bar.act(n, x) + g_omega.bracket(x, y);
        Vec second = act.act(x, n) - act.act(y, m) + mt.bracket(m, n);
        return concat(first, second);
    };
    LieAlgebra big = LieAlgebra::create(d + md, tensor_of(d + md, br));
    // M^T |x| g^Omega and T on it
    TwilledLieAlgebra tw = swap(TwilledLieAlgebra::from_blocks(big, d));
    if (!strong_mc_check(tw, t)) throw Error(ErrorKind::OracleDisagreement, "T is not strong MC on M^T |x| g^Omega");
    if (!is_o_operator(act, t)) throw Error(ErrorKind::OracleDisagreement, "T is not an O-operator on (M, .^Omega)");
    return {std::move(g_omega), std::move(act), std::move(big)};
}

ONStructure on_from_strong_mc(const Representation& rep, const Matrix& t, const Matrix& omega) {
    if (!is_o_operator(rep, t)) throw Error(ErrorKind::NotOOperator, "T is not an O-operator");
    require_strong(rep, t, omega);
    ONStructure on{t, t * omega, omega * t};
    if (!is_on_structure(rep, on.t, on.n, on.s))
        throw Error(ErrorKind::OracleDisagreement, "(T, T Omega, Omega T) is not an ON-structure");
    return on;
}

Matrix strong_mc_from_on(const Representation& rep, const Matrix& t, const Matrix& n, const Matrix& s) {
    ONReport r = on_report(rep, t, n, s);
    if (!r.ok()) {
        const Check* f = r.first_failure();
        throw Error(ErrorKind::NotONStructure, "input fails " + f->clause, f->witness, f->defect);
    }
    if (!is_invertible(t)) throw Error(ErrorKind::Singular, "T is not invertible");
    Matrix ti = invert(t);
    Matrix omega = ti * n;
    if (omega != s * ti) throw Error(ErrorKind::OracleDisagreement, "T^{-1} N != S T^{-1}");
    if (!strong_mc_check(twilled_from_o(rep, t), omega))
        throw Error(ErrorKind::OracleDisagreement, "T^{-1} N is not strong MC");
    return omega;
}

std::vector<Matrix> strong_mc_search(const Representation& rep, const Matrix& t, int bound) {
    TwilledLieAlgebra tw = twilled_from_o(rep, t);
    std::vector<Cochain> basis = cocycle_basis(rep, 1);
    std::vector<Matrix> out;
    std::size_t k = basis.size(), width = static_cast<std::size_t>(2 * bound + 1), total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= width;
    for (std::size_t code = 0; code < total; ++code) {
        Matrix omega(rep.dim(), rep.algebra().dim());
        std::size_t c = code;
        for (std::size_t i = 0; i < k; ++i) {
            int coeff = static_cast<int>(c % width) - bound;
            c /= width;
            if (coeff) omega = omega + Rational(coeff) * basis[i].as_matrix();
        }
        if (mc_report(tw, omega).mc.ok) out.push_back(std::move(omega));
    }
    return out;
}

}  // namespace liemod
