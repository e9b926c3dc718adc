#include "liemod/lie.hpp"

#include <initializer_list>
#include <sstream>

#include "liemod/linalg.hpp"

namespace liemod {

namespace {

std::vector<Matrix> build_ad(std::size_t dim, const std::vector<Rational>& t) {
    std::vector<Matrix> ad(dim, Matrix(dim, dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) ad[i](k, j) = t[(i * dim + j) * dim + k];
    return ad;
}

Vec flatten(const Matrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

std::string idx(std::initializer_list<std::size_t> is) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (auto i : is) {
        os << (first ? "" : ",") << i;
        first = false;
    }
    os << ')';
    return os.str();
}

}  // namespace

Check lie_check(std::size_t dim, const std::vector<Rational>& t) {
    if (t.size() != dim * dim * dim)
        return Check::fail("tensor shape", {t.size()});
    auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
        return t[(i * dim + j) * dim + k];
    };
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (c(i, j, k) != -c(j, i, k)) return Check::fail("skew", {i, j, k});
    auto br = [&](std::size_t i, const Vec& y) {
        Vec out(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            for (std::size_t k = 0; k < dim; ++k)
                if (!c(i, j, k).is_zero()) out[k] += y[j] * c(i, j, k);
        }
        return out;
    };
    auto basis_br = [&](std::size_t i, std::size_t j) {
        Vec out(dim);
        for (std::size_t k = 0; k < dim; ++k) out[k] = c(i, j, k);
        return out;
    };
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = j + 1; k < dim; ++k) {
                Vec s = br(i, basis_br(j, k));
                s += br(j, basis_br(k, i));
                s += br(k, basis_br(i, j));
                if (!is_zero(s)) return Check::fail("jacobi", {i, j, k}, s);
            }
    return Check::pass();
}

LieAlgebra LieAlgebra::create(std::size_t dim, std::vector<Rational> tensor, std::vector<std::string> names) {
    if (tensor.size() != dim * dim * dim)
        throw Error(ErrorKind::DimensionMismatch, "structure tensor must have dim^3 entries");
    if (!names.empty() && names.size() != dim)
        throw Error(ErrorKind::DimensionMismatch, "basis_names must have dim entries");
    Check ch = lie_check(dim, tensor);
    if (!ch) {
        const auto& w = ch.witness;
        if (ch.clause == "skew")
            throw Error(ErrorKind::SkewViolation, "c" + idx({w[0], w[1], w[2]}) + " != -c" + idx({w[1], w[0], w[2]}),
                        w);
        throw Error(ErrorKind::JacobiViolation, "Jacobi fails on " + idx({w[0], w[1], w[2]}), w, ch.defect);
    }
    LieAlgebra g;
    g.dim_ = dim;
    g.tensor_ = std::move(tensor);
    g.names_ = std::move(names);
    g.ad_ = build_ad(dim, g.tensor_);
    return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return create(dim, std::vector<Rational>(dim * dim * dim)); }

Matrix LieAlgebra::ad(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!x[i].is_zero()) m += x[i] * ad_[i];
    return m;
}

Vec LieAlgebra::bracket(std::size_t i, std::size_t j) const { return ad_[i].column(j); }

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "bracket argument length");
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Rational s = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c(i, j, k).is_zero()) out[k] += s * c(i, j, k);
        }
    }
    return out;
}

Check representation_check(const LieAlgebra& g, std::size_t dim, const std::vector<Matrix>& actions) {
    if (actions.size() != g.dim()) return Check::fail("action count", {actions.size()});
    for (std::size_t i = 0; i < actions.size(); ++i)
        if (actions[i].rows() != dim || actions[i].cols() != dim) return Check::fail("action shape", {i});
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            Matrix lhs(dim, dim);
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (!g.c(i, j, k).is_zero()) lhs += g.c(i, j, k) * actions[k];
            Matrix d = lhs - (actions[i] * actions[j] - actions[j] * actions[i]);
            if (!d.is_zero()) return Check::fail("representation", {i, j}, flatten(d));
        }
    return Check::pass();
}

Representation Representation::create(LieAlgebra algebra, std::size_t dim, std::vector<Matrix> actions) {
    Check ch = representation_check(algebra, dim, actions);
    if (!ch) {
        if (ch.clause != "representation")
            throw Error(ErrorKind::DimensionMismatch, "representation " + ch.clause, ch.witness);
        throw Error(ErrorKind::RepViolation,
                    "rho([e_i,e_j]) != [rho_i, rho_j] at " + idx({ch.witness[0], ch.witness[1]}), ch.witness,
                    ch.defect);
    }
    Representation r;
    r.algebra_ = std::move(algebra);
    r.dim_ = dim;
    r.actions_ = std::move(actions);
    return r;
}

Representation Representation::trivial(LieAlgebra algebra, std::size_t dim) {
    std::vector<Matrix> acts(algebra.dim(), Matrix(dim, dim));
    return create(std::move(algebra), dim, std::move(acts));
}

Matrix Representation::action(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) m += x[i] * actions_[i];
    return m;
}

Vec Representation::act(const Vec& x, const Vec& m) const {
    if (x.size() != algebra_.dim() || m.size() != dim_)
        throw Error(ErrorKind::DimensionMismatch, "action argument length");
    Vec out(dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) axpy(out, x[i], actions_[i] * m);
    return out;
}

const char* to_string(Role role) {
    switch (role) {
        case Role::Module: return "module";
        case Role::Algebra: return "algebra";
        case Role::DualModule: return "dual-module";
        case Role::DualAlgebra: return "dual-algebra";
    }
    return "?";
}

std::optional<Role> role_from_string(const std::string& s) {
    if (s == "module") return Role::Module;
    if (s == "algebra") return Role::Algebra;
    if (s == "dual-module") return Role::DualModule;
    if (s == "dual-algebra") return Role::DualAlgebra;
    return std::nullopt;
}

std::size_t role_dim(const Representation& rep, Role role) {
    return (role == Role::Module || role == Role::DualModule) ? rep.dim() : rep.algebra().dim();
}

void LinMap::check_shape(const Representation& rep) const {
    std::size_t r = role_dim(rep, target), c = role_dim(rep, source);
    if (matrix.rows() != r || matrix.cols() != c)
        throw Error(ErrorKind::DimensionMismatch, std::string("map ") + to_string(source) + " -> " +
                                                      to_string(target) + " must be " + std::to_string(r) + "x" +
                                                      std::to_string(c));
}

Subspace Subspace::from_basis(std::size_t ambient, std::vector<Vec> basis) {
    for (const auto& v : basis)
        if (v.size() != ambient) throw Error(ErrorKind::DimensionMismatch, "subspace vector length");
    if (!are_independent(basis, ambient)) throw Error(ErrorKind::DimensionMismatch, "subspace basis is dependent");
    return Subspace(ambient, std::move(basis));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient) throw Error(ErrorKind::DimensionMismatch, "subspace vector length");
    return Subspace(ambient, row_space_basis(vectors, ambient));
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vec> b;
    for (std::size_t i = 0; i < ambient; ++i) b.push_back(unit_vec(ambient, i));
    return Subspace(ambient, std::move(b));
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match subspace");
    if (basis_.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    return liemod::coordinates(basis_matrix(), v);
}

Representation adjoint(const LieAlgebra& g) {
    std::vector<Matrix> acts;
    for (std::size_t i = 0; i < g.dim(); ++i) acts.push_back(g.ad(i));
    return Representation::create(g, g.dim(), std::move(acts));
}

Representation dual_rep(const Representation& rep) {
    std::vector<Matrix> acts;
    for (const auto& a : rep.actions()) acts.push_back(-a.transpose());
    return Representation::create(rep.algebra(), rep.dim(), std::move(acts));
}

Representation coadjoint(const LieAlgebra& g) { return dual_rep(adjoint(g)); }

LieAlgebra semidirect(const Representation& rep) {
    const LieAlgebra& g = rep.algebra();
    std::size_t n = g.dim(), d = rep.dim(), t = n + d;
    std::vector<Rational> c(t * t * t);
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * t + j) * t + k]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) at(i, j, k) = g.c(i, j, k);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const Rational& v = rep.action(i)(b, a);
                if (v.is_zero()) continue;
                at(i, n + a, n + b) = v;
                at(n + a, i, n + b) = -v;
            }
    }
    return LieAlgebra::create(t, std::move(c));
}

Check is_subalgebra(const LieAlgebra& g, const Subspace& w) {
    const auto& b = w.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            Vec br = g.bracket(b[i], b[j]);
            if (!w.contains(br)) return Check::fail("subalgebra", {i, j}, br);
        }
    return Check::pass();
}

Check is_ideal(const LieAlgebra& g, const Subspace& w) {
    const auto& b = w.basis();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Vec br = g.ad(i) * b[j];
            if (!w.contains(br)) return Check::fail("ideal", {i, j}, br);
        }
    return Check::pass();
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& w) {
    Check ch = is_subalgebra(g, w);
    if (!ch) throw Error(ErrorKind::NotSubalgebra, "subspace is not closed under the bracket", ch.witness, ch.defect);
    std::size_t k = w.dim();
    std::vector<Rational> c(k * k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Vec coords = *w.coordinates(g.bracket(w.basis()[i], w.basis()[j]));
            for (std::size_t l = 0; l < k; ++l) c[(i * k + j) * k + l] = coords[l];
        }
    return LieAlgebra::create(k, std::move(c));
}

Quotient quotient(const LieAlgebra& h, const Subspace& w) {
    if (w.ambient() != h.dim()) throw Error(ErrorKind::DimensionMismatch, "ideal lives in a different space");
    Check ch = is_ideal(h, w);
    if (!ch) throw Error(ErrorKind::NotIdeal, "quotient by a non-ideal", ch.witness, ch.defect);
    std::size_t n = h.dim();
    Echelon e = rref(Matrix::from_rows(w.basis(), n));
    std::vector<bool> pivot(n, false);
    for (auto p : e.pivots) pivot[p] = true;
    std::vector<Vec> comp;
    for (std::size_t j = 0; j < n; ++j)
        if (!pivot[j]) comp.push_back(unit_vec(n, j));
    std::size_t q = comp.size();
    Matrix section = Matrix::from_columns(comp, n);
    Matrix full = w.basis_matrix().hstack(section);
    Matrix proj = invert(full).block(w.dim(), 0, q, n);
    std::vector<Rational> c(q * q * q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            Vec v = proj * h.bracket(comp[a], comp[b]);
            for (std::size_t l = 0; l < q; ++l) c[(a * q + b) * q + l] = v[l];
        }
    return {LieAlgebra::create(q, std::move(c)), std::move(proj), std::move(section)};
}

Subspace annihilator(const Representation& rep, const Subspace& x) {
    Matrix stacked(0, rep.dim());
    for (const auto& v : x.basis()) stacked = stacked.vstack(rep.action(v));
    return Subspace::from_basis(rep.dim(), kernel(stacked));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "intersect: different ambient spaces");
    std::size_t n = a.ambient();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
    // a s = b t  <=>  [A | -B] (s, t) = 0
    Matrix sys = a.basis_matrix().hstack(-b.basis_matrix());
    std::vector<Vec> out;
    for (const auto& k : kernel(sys)) {
        Vec s(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.dim()));
        out.push_back(a.basis_matrix() * s);
    }
    return Subspace::span(n, out);
}

Subspace image(const Matrix& f) { return Subspace::span(f.rows(), f.columns()); }

Check is_lie_morphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix& f) {
    if (f.rows() != target.dim() || f.cols() != source.dim()) return Check::fail("shape", {f.rows(), f.cols()});
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = i + 1; j < source.dim(); ++j) {
            Vec d = f * source.bracket(i, j) - target.bracket(f.column(i), f.column(j));
            if (!is_zero(d)) return Check::fail("morphism", {i, j}, d);
        }
    return Check::pass();
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& basis) {
    Matrix inv = invert(basis);
    std::size_t n = g.dim();
    std::vector<Rational> c(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = inv * g.bracket(basis.column(i), basis.column(j));
            for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = v[k];
        }
    return LieAlgebra::create(n, std::move(c));
}

}  // namespace liemod
