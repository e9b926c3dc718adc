#include "liemod/cochain.hpp"

#include <algorithm>
#include <functional>

#include "liemod/linalg.hpp"

namespace liemod {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Sorts a copy of `idx`; returns the sign of the sorting permutation, or 0 on a repeat.
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

int perm_parity(const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> p(perm);
    return sort_sign(p);
}

}  // namespace

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (k == 0) break;
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Cochain::Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim)
    : degree_(degree),
      source_dim_(source_dim),
      target_dim_(target_dim),
      tuples_(increasing_tuples(source_dim, degree)),
      values_(tuples_.size(), Vec(target_dim)) {}

Cochain Cochain::constant(const Vec& value, std::size_t source_dim) {
    Cochain c(0, source_dim, value.size());
    c.values_[0] = value;
    return c;
}

Cochain Cochain::from_map(const Matrix& f) {
    Cochain c(1, f.cols(), f.rows());
    for (std::size_t j = 0; j < f.cols(); ++j) c.values_[j] = f.column(j);
    return c;
}

Cochain Cochain::from_bracket(const LieAlgebra& g) {
    Cochain c(2, g.dim(), g.dim());
    for (std::size_t r = 0; r < c.size(); ++r) c.values_[r] = g.bracket(c.tuples_[r][0], c.tuples_[r][1]);
    return c;
}

std::size_t Cochain::rank_of(std::span<const std::size_t> t) const {
    std::size_t rank = 0, prev = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::size_t start = i == 0 ? 0 : prev + 1;
        for (std::size_t j = start; j < t[i]; ++j) rank += binom(source_dim_ - 1 - j, degree_ - 1 - i);
        prev = t[i];
    }
    return rank;
}

void Cochain::set(std::span<const std::size_t> increasing, const Vec& v) {
    if (increasing.size() != degree_ || v.size() != target_dim_)
        throw Error(ErrorKind::DimensionMismatch, "cochain value shape");
    for (std::size_t i = 0; i < increasing.size(); ++i)
        if (increasing[i] >= source_dim_ || (i > 0 && increasing[i] <= increasing[i - 1]))
            throw Error(ErrorKind::DimensionMismatch, "cochain indices must be strictly increasing and in range");
    values_[rank_of(increasing)] = v;
}

Vec Cochain::eval(std::span<const std::size_t> indices) const {
    if (indices.size() != degree_) throw Error(ErrorKind::DimensionMismatch, "cochain arity");
    std::vector<std::size_t> idx(indices.begin(), indices.end());
    int s = sort_sign(idx);
    if (s == 0) return Vec(target_dim_);
    const Vec& v = values_[rank_of(idx)];
    return s > 0 ? v : -v;
}

Vec Cochain::eval_vectors(const std::vector<Vec>& args) const {
    if (args.size() != degree_) throw Error(ErrorKind::DimensionMismatch, "cochain arity");
    Vec out(target_dim_);
    std::vector<std::size_t> idx(degree_);
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t pos, const Rational& coeff) {
        if (pos == degree_) {
            axpy(out, coeff, eval(idx));
            return;
        }
        for (std::size_t i = 0; i < source_dim_; ++i) {
            if (args[pos][i].is_zero()) continue;
            idx[pos] = i;
            rec(pos + 1, coeff * args[pos][i]);
        }
    };
    rec(0, Rational(1));
    return out;
}

Matrix Cochain::as_matrix() const {
    if (degree_ != 1) throw Error(ErrorKind::DimensionMismatch, "as_matrix needs a degree 1 cochain");
    return Matrix::from_columns(values_, target_dim_);
}

bool Cochain::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Vec& v) { return liemod::is_zero(v); });
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (o.degree_ != degree_ || o.source_dim_ != source_dim_ || o.target_dim_ != target_dim_)
        throw Error(ErrorKind::DimensionMismatch, "cochain shape mismatch");
    for (std::size_t r = 0; r < values_.size(); ++r) values_[r] += o.values_[r];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    if (o.degree_ != degree_ || o.source_dim_ != source_dim_ || o.target_dim_ != target_dim_)
        throw Error(ErrorKind::DimensionMismatch, "cochain shape mismatch");
    for (std::size_t r = 0; r < values_.size(); ++r) values_[r] -= o.values_[r];
    return *this;
}

Cochain operator*(const Rational& s, Cochain a) {
    for (auto& v : a.values_) v = s * v;
    return a;
}

Cochain ce_differential(const Representation& rep, const Cochain& f) {
    const LieAlgebra& g = rep.algebra();
    if (f.source_dim() != g.dim() || f.target_dim() != rep.dim())
        throw Error(ErrorKind::DimensionMismatch, "cochain does not match the representation");
    std::size_t n = f.degree();
    Cochain out(n + 1, g.dim(), rep.dim());
    std::vector<std::size_t> rest;
    for (std::size_t r = 0; r < out.size(); ++r) {
        const auto& x = out.tuple(r);
        Vec acc(rep.dim());
        for (std::size_t i = 0; i <= n; ++i) {
            rest.clear();
            for (std::size_t l = 0; l <= n; ++l)
                if (l != i) rest.push_back(x[l]);
            Vec term = rep.action(x[i]) * f.eval(rest);
            if (i % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                Vec br = g.bracket(x[i], x[j]);
                if (is_zero(br)) continue;
                rest.assign(1, 0);
                for (std::size_t l = 0; l <= n; ++l)
                    if (l != i && l != j) rest.push_back(x[l]);
                Vec term(rep.dim());
                for (std::size_t k = 0; k < g.dim(); ++k) {
                    if (br[k].is_zero()) continue;
                    rest[0] = k;
                    axpy(term, br[k], f.eval(rest));
                }
                if ((i + j) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
        out.value(r) = std::move(acc);
    }
    return out;
}

Check is_cocycle(const Representation& rep, const Cochain& f) {
    Cochain d = ce_differential(rep, f);
    for (std::size_t r = 0; r < d.size(); ++r)
        if (!is_zero(d.value(r))) return Check::fail("cocycle", d.tuple(r), d.value(r));
    return Check::pass();
}

std::vector<Cochain> cocycle_basis(const Representation& rep, std::size_t degree) {
    std::size_t n = rep.algebra().dim(), d = rep.dim();
    Cochain shape(degree, n, d);
    std::size_t vars = shape.size() * d;
    Cochain next(degree + 1, n, d);
    Matrix sys(next.size() * d, vars);
    for (std::size_t v = 0; v < vars; ++v) {
        Cochain e(degree, n, d);
        e.value(v / d)[v % d] = 1;
        Cochain de = ce_differential(rep, e);
        for (std::size_t r = 0; r < de.size(); ++r)
            for (std::size_t k = 0; k < d; ++k) sys(r * d + k, v) = de.value(r)[k];
    }
    std::vector<Cochain> out;
    for (const auto& kv : kernel(sys)) {
        Cochain c(degree, n, d);
        for (std::size_t v = 0; v < vars; ++v) c.value(v / d)[v % d] = kv[v];
        out.push_back(std::move(c));
    }
    return out;
}

Cochain insertion(const Cochain& p, const Cochain& q) {
    if (p.source_dim() != p.target_dim() || q.source_dim() != q.target_dim() || p.source_dim() != q.source_dim())
        throw Error(ErrorKind::DimensionMismatch, "insertion needs self-valued cochains on one space");
    std::size_t dim = p.source_dim();
    std::size_t qa = q.degree();
    if (p.degree() == 0) {
        // P takes no argument to insert into.
        std::size_t deg = qa == 0 ? 0 : qa - 1;
        return Cochain(deg, dim, dim);
    }
    std::size_t pa = p.degree() - 1;  // arguments of P left after the insertion slot
    std::size_t total = qa + pa;
    Cochain out(total, dim, dim);
    auto chosen = increasing_tuples(total, qa);
    std::vector<std::size_t> perm(total), qargs(qa), pargs(pa + 1);
    for (std::size_t r = 0; r < out.size(); ++r) {
        const auto& x = out.tuple(r);
        Vec acc(dim);
        for (const auto& sel : chosen) {
            std::size_t a = 0, b = 0;
            std::vector<bool> in(total, false);
            for (auto s : sel) in[s] = true;
            for (std::size_t s = 0; s < total; ++s) {
                if (in[s])
                    perm[a++] = s;
                else
                    perm[qa + b++] = s;
            }
            int sign = perm_parity(perm);
            for (std::size_t l = 0; l < qa; ++l) qargs[l] = x[perm[l]];
            Vec inner = q.eval(qargs);
            if (is_zero(inner)) continue;
            for (std::size_t l = 0; l < pa; ++l) pargs[l + 1] = x[perm[qa + l]];
            for (std::size_t k = 0; k < dim; ++k) {
                if (inner[k].is_zero()) continue;
                pargs[0] = k;
                axpy(acc, sign > 0 ? inner[k] : -inner[k], p.eval(pargs));
            }
        }
        out.value(r) = std::move(acc);
    }
    return out;
}

Cochain nr_bracket(const Cochain& p, const Cochain& q) {
    // Graded degrees are arity - 1; the sign only depends on their parity.
    long pd = static_cast<long>(p.degree()) - 1;
    long qd = static_cast<long>(q.degree()) - 1;
    Cochain pq = insertion(p, q);
    Cochain qp = insertion(q, p);
    bool odd = ((pd * qd) % 2) != 0;
    return odd ? pq + qp : pq - qp;
}

Cochain lift(const Cochain& f, std::size_t dim_a, std::size_t dim_b) {
    if (f.source_dim() != dim_a || f.target_dim() != dim_b)
        throw Error(ErrorKind::DimensionMismatch, "lift: cochain is not a -> b");
    std::size_t n = dim_a + dim_b;
    Cochain out(f.degree(), n, n);
    for (std::size_t r = 0; r < out.size(); ++r) {
        const auto& t = out.tuple(r);
        if (!t.empty() && t.back() >= dim_a) continue;
        const Vec& v = f.value(f.rank_of(t));
        Vec w(n);
        for (std::size_t k = 0; k < dim_b; ++k) w[dim_a + k] = v[k];
        out.value(r) = std::move(w);
    }
    return out;
}

Cochain restrict_lift(const Cochain& f, std::size_t dim_a) {
    if (f.source_dim() != f.target_dim() || dim_a > f.source_dim())
        throw Error(ErrorKind::DimensionMismatch, "restrict_lift: not a self-valued cochain on a (+) b");
    std::size_t dim_b = f.source_dim() - dim_a;
    Cochain out(f.degree(), dim_a, dim_b);
    for (std::size_t r = 0; r < f.size(); ++r) {
        const auto& t = f.tuple(r);
        const Vec& v = f.value(r);
        bool on_a = t.empty() || t.back() < dim_a;
        for (std::size_t k = 0; k < f.target_dim(); ++k) {
            if (v[k].is_zero()) continue;
            if (!on_a || k < dim_a)
                throw Error(ErrorKind::MalformedLift,
                            on_a ? "value has a component in a" : "cochain does not vanish on arguments from b", t, v);
        }
        if (!on_a) continue;
        Vec w(v.begin() + static_cast<std::ptrdiff_t>(dim_a), v.end());
        out.value(out.rank_of(t)) = std::move(w);
    }
    return out;
}

Cochain derived_bracket(const Cochain& mu2, std::size_t dim_a, const Cochain& p, const Cochain& q) {
    if (mu2.degree() != 2 || mu2.source_dim() != mu2.target_dim() || dim_a > mu2.source_dim())
        throw Error(ErrorKind::DimensionMismatch, "mu2 must be a self-valued degree 2 cochain on a (+) b");
    std::size_t dim_b = mu2.source_dim() - dim_a;
    Cochain lp = lift(p, dim_a, dim_b);
    Cochain lq = lift(q, dim_a, dim_b);
    Cochain full = nr_bracket(nr_bracket(mu2, lp), lq);
    Cochain out(full.degree(), dim_a, dim_b);
    for (std::size_t r = 0; r < out.size(); ++r) {
        const Vec& v = full.value(full.rank_of(out.tuple(r)));
        out.value(r) = Vec(v.begin() + static_cast<std::ptrdiff_t>(dim_a), v.end());
    }
    bool negate = p.degree() % 2 == 0;  // (-1)^(p-1)
    return negate ? Rational(-1) * out : out;
}

}  // namespace liemod
