#include <gtest/gtest.h>

#include <random>

#include "liemod/cochain.hpp"
#include "liemod/fixtures.hpp"
#include "liemod/linalg.hpp"
#include "liemod/onstruct.hpp"
#include "liemod/ooper.hpp"
#include "support.hpp"

using namespace liemod;
using support::for_each_small_matrix;

namespace {

std::vector<Matrix> small_o_operators(const Representation& rep) {
    std::vector<Matrix> out;
    for_each_small_matrix(rep.algebra().dim(), rep.dim(), [&](const Matrix& t) {
        if (is_o_operator(rep, t)) out.push_back(t);
    });
    return out;
}

const Matrix kAffT{{0, 0}, {1, 0}};  // e1 -> e2, e2 -> 0

}  // namespace

TEST(OResidual, Examples) {
    auto rep = adjoint(fixtures::aff1());
    auto zero = o_residual(rep, Matrix(2, 2));
    for (const auto& v : zero) EXPECT_TRUE(is_zero(v));
    EXPECT_TRUE(is_o_operator(rep, kAffT));
    auto r = o_residual(rep, Matrix::identity(2));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0], (Vec{0, -1}));
    EXPECT_FALSE(is_o_operator(rep, Matrix::identity(2)));
}

TEST(InducedLie, Examples) {
    auto rep = adjoint(fixtures::aff1());
    EXPECT_EQ(induced_lie(rep, Matrix(2, 2)), LieAlgebra::abelian(2));
    EXPECT_EQ(induced_lie(rep, kAffT), LieAlgebra::abelian(2));
    EXPECT_THROW(induced_lie(rep, Matrix::identity(2)), Error);
    // invertible O-operators: T is an isomorphism M^T -> g
    auto co = coadjoint(fixtures::h3());
    int seen = 0;
    for (const auto& t : small_o_operators(co)) {
        if (!is_invertible(t)) continue;
        EXPECT_TRUE(is_lie_morphism(induced_lie(co, t), co.algebra(), t));
        ++seen;
    }
    EXPECT_GT(seen, 0);
}

TEST(GraphCheck, AgreesWithResidual) {
    auto rep = adjoint(fixtures::aff1());
    EXPECT_TRUE(graph_check(rep, Matrix(2, 2)));
    EXPECT_TRUE(graph_check(rep, kAffT));
    EXPECT_FALSE(graph_check(rep, Matrix::identity(2)));
    std::mt19937_64 rng(21);
    for (const auto& [name, r] : fixtures::representations())
        for (int it = 0; it < 40; ++it) {
            Matrix t = support::random_matrix(rng, r.algebra().dim(), r.dim(), -2, 2);
            if (it % 2) t = Rational(0) * t;
            EXPECT_EQ(graph_check(r, t), is_o_operator(r, t)) << name;
        }
}

TEST(StructureReport, Fixtures) {
    auto rep = adjoint(fixtures::aff1());
    auto z = structure_report(rep, Matrix(2, 2));
    EXPECT_TRUE(z.kernel_is_ideal_in_MT);
    EXPECT_TRUE(z.image_is_subalgebra);
    for (const auto& [name, r] : fixtures::representations())
        for (const auto& t : small_o_operators(r)) {
            auto s = structure_report(r, t);
            EXPECT_TRUE(s.kernel_is_ideal_in_MT && s.image_is_subalgebra) << name;
            // T is a morphism M^T -> g
            EXPECT_TRUE(is_lie_morphism(induced_lie(r, t), r.algebra(), t)) << name;
        }
}

TEST(RSharp, Examples) {
    EXPECT_TRUE(r_sharp(Bivector(2)).is_zero());
    auto r = Bivector::from_entries(2, {{0, 1, Rational(1)}});
    Matrix s = r_sharp(r);
    EXPECT_EQ(s.column(0), (Vec{0, 1}));
    EXPECT_EQ(s.column(1), (Vec{-1, 0}));
    EXPECT_TRUE(is_antisymmetric(s));
    EXPECT_EQ(Bivector::from_sharp(s), r);
    EXPECT_THROW(Bivector::from_matrix(Matrix{{0, 1}, {1, 0}}), Error);
}

TEST(Schouten, Examples) {
    auto ab = fixtures::ab2();
    EXPECT_TRUE(is_r_matrix(ab, Bivector::from_entries(2, {{0, 1, Rational(3)}})));
    auto h = fixtures::h3();
    auto r13 = Bivector::from_entries(3, {{0, 2, Rational(1)}});
    auto r12 = Bivector::from_entries(3, {{0, 1, Rational(1)}});
    EXPECT_TRUE(is_r_matrix(h, r13));
    EXPECT_FALSE(is_r_matrix(h, r12));
    EXPECT_TRUE(lemma_r_equiv(h, r13));
    EXPECT_FALSE(lemma_r_equiv(h, r12));
    EXPECT_TRUE(lemma_r_equiv(ab, Bivector::from_entries(2, {{0, 1, Rational(3)}})));
}

TEST(Schouten, GradedRules) {
    // [x, y ^ z] = [x, y] ^ z + y ^ [x, z] and graded skew-symmetry on sl2
    auto g = fixtures::sl2();
    Multivector x{{{0}, Rational(1)}}, y{{{1}, Rational(1)}}, z{{{2}, Rational(1)}};
    Multivector lhs = schouten(g, x, wedge(y, z));
    Multivector a = wedge(schouten(g, x, y), z), b = wedge(y, schouten(g, x, z));
    for (const auto& [k, v] : b) a[k] += v;
    std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
    EXPECT_EQ(lhs, a);
    // [P, Q] = -(-1)^{(p-1)(q-1)} [Q, P] with p = 2, q = 1
    Multivector p = wedge(x, y);
    Multivector pq = schouten(g, p, z), qp = schouten(g, z, p);
    for (auto& [k, v] : qp) v = -v;
    EXPECT_EQ(pq, qp);
}

TEST(Schouten, CoadjointOracleExhaustiveSmall) {
    for (const auto& [name, g] : fixtures::algebras()) {
        std::size_t d = g.dim(), pairs = d * (d - 1) / 2, total = 1;
        for (std::size_t i = 0; i < pairs; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<std::tuple<std::size_t, std::size_t, Rational>> e;
            std::size_t x = code;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i + 1; j < d; ++j) {
                    e.emplace_back(i, j, Rational(static_cast<int>(x % 3) - 1));
                    x /= 3;
                }
            EXPECT_NO_THROW(lemma_r_equiv(g, Bivector::from_entries(d, e))) << name;
        }
    }
}

TEST(Gauge, TrivialCases) {
    auto rep = adjoint(fixtures::aff1());
    EXPECT_EQ(gauge_transform(rep, kAffT, Matrix(2, 2)), kAffT);
    EXPECT_TRUE(gauge_iso_check(rep, kAffT, Matrix(2, 2)));
    // B T = 0: the cocycles vanishing on im T = span{e2}
    for (const auto& c : cocycle_basis(rep, 1)) {
        Matrix b = c.as_matrix();
        if (!(b * kAffT).is_zero()) continue;
        EXPECT_EQ(gauge_transform(rep, kAffT, b), kAffT);
    }
}

TEST(Gauge, CocycleInstances) {
    int instances = 0;
    for (const auto& [name, rep] : fixtures::representations()) {
        auto basis = cocycle_basis(rep, 1);
        for (const auto& c : basis) EXPECT_TRUE(is_cocycle(rep, c));
        auto ops = small_o_operators(rep);
        for (std::size_t k = 0; k < ops.size(); k += 7) {
            const Matrix& t = ops[k];
            for (std::size_t bi = 0; bi < basis.size(); ++bi) {
                Matrix b = basis[bi].as_matrix();
                if (bi % 2) b = Rational(-1, 2) * b;
                Matrix a = Matrix::identity(rep.dim()) + b * t;
                if (!is_invertible(a)) {
                    EXPECT_THROW(gauge_transform(rep, t, b), Error);
                    continue;
                }
                Matrix tb = gauge_transform(rep, t, b);
                EXPECT_TRUE(is_o_operator(rep, tb));
                EXPECT_TRUE(image(tb).same_as(image(t))) << name;
                EXPECT_TRUE(gauge_iso_check(rep, t, b)) << name;
                if (is_invertible(t)) EXPECT_EQ(invert(tb), invert(t) + b) << name;
                ++instances;
            }
        }
    }
    EXPECT_GE(instances, 20);
}

TEST(Gauge, Errors) {
    auto rep = adjoint(fixtures::aff1());
    try {
        gauge_transform(rep, kAffT, Matrix::identity(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotCocycle);
    }
    try {
        gauge_transform(rep, Matrix::identity(2), Matrix(2, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotOOperator);
    }
    // trivial module over ab2: every B is a cocycle; id + B T singular
    auto triv = adjoint(fixtures::ab2());
    Matrix t = Matrix::identity(2);
    try {
        gauge_transform(triv, t, -Matrix::identity(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAdmissible);
    }
}

TEST(Reduction, NothingQuotiented) {
    auto rep = coadjoint(fixtures::h3());
    auto ops = small_o_operators(rep);
    const Matrix& t = ops[ops.size() / 2];
    auto red = mr_reduce(rep, t, Subspace::whole(3), Subspace::zero(3), Subspace::whole(3));
    EXPECT_EQ(red.quotient.algebra, fixtures::h3());
    EXPECT_EQ(red.t_bar, t);
}

TEST(Reduction, IdealConsequence) {
    auto g = fixtures::h3();
    auto rep = coadjoint(g);
    Subspace e = Subspace::span(3, {{0, 0, 1}});
    int ok = 0;
    for (const auto& t : small_o_operators(rep)) {
        auto red = mr_reduce(rep, t, Subspace::whole(3), e, Subspace::whole(3));
        EXPECT_EQ(red.quotient.algebra.dim(), 2u);
        EXPECT_TRUE(red.module.same_as(annihilator(rep, e)));
        EXPECT_TRUE(is_o_operator(red.reduced_rep, red.t_bar));
        ++ok;
    }
    EXPECT_GT(ok, 0);
}

TEST(Reduction, RestrictionConsequence) {
    // E = 0, h a subalgebra, N with T(N) in h: T|_N is an O-operator over h
    auto rep = adjoint(fixtures::h3());
    Subspace h = Subspace::span(3, {{1, 0, 0}, {0, 0, 1}});
    Subspace n = Subspace::span(3, {{0, 0, 1}});
    Matrix t{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}};
    ASSERT_TRUE(is_o_operator(rep, t));
    auto red = mr_reduce(rep, t, h, Subspace::zero(3), n);
    EXPECT_EQ(red.module.dim(), 1u);
    EXPECT_TRUE(is_o_operator(red.reduced_rep, red.t_bar));
}

TEST(Reduction, HypothesisFailures) {
    auto rep = adjoint(fixtures::h3());
    Matrix t(3, 3);
    auto expect_kind = [&](const Subspace& h, const Subspace& e, const Subspace& n, const Matrix& tt, ErrorKind k) {
        try {
            mr_reduce(rep, tt, h, e, n);
            ADD_FAILURE() << "no error";
        } catch (const Error& err) {
            EXPECT_EQ(err.kind(), k) << err.what();
        }
    };
    expect_kind(Subspace::span(3, {{1, 0, 0}, {0, 1, 0}}), Subspace::zero(3), Subspace::whole(3), t,
                ErrorKind::NotSubalgebra);
    expect_kind(Subspace::span(3, {{1, 0, 0}}), Subspace::zero(3), Subspace::span(3, {{0, 1, 0}}), t,
                ErrorKind::NotStable);
    Matrix te{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}};
    expect_kind(Subspace::span(3, {{1, 0, 0}}), Subspace::zero(3), Subspace::span(3, {{0, 0, 1}}), te,
                ErrorKind::ImageEscapesH);
    // aff1: E n h = span{e1} is not an ideal
    auto arep = adjoint(fixtures::aff1());
    try {
        mr_reduce(arep, Matrix(2, 2), Subspace::whole(2), Subspace::span(2, {{1, 0}}), Subspace::whole(2));
        ADD_FAILURE();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::QuotientError);
    }
}

TEST(Compatibility, Examples) {
    auto rep = coadjoint(fixtures::h3());
    auto ops = small_o_operators(rep);
    std::mt19937_64 rng(4);
    for (std::size_t a = 0; a < ops.size(); a += 37) {
        EXPECT_TRUE(are_compatible(rep, ops[a], Matrix(3, 3)));
        EXPECT_TRUE(are_compatible(rep, ops[a], ops[a]));
        for (std::size_t b = 0; b < ops.size(); b += 53) {
            bool c = are_compatible(rep, ops[a], ops[b]);
            for (int it = 0; it < 5 && c; ++it) {
                Rational mu = support::random_rational(rng), la = support::random_rational(rng);
                EXPECT_TRUE(is_o_operator(rep, mu * ops[a] + la * ops[b]));
            }
        }
    }
    EXPECT_THROW(are_compatible(adjoint(fixtures::aff1()), Matrix::identity(2), Matrix(2, 2)), Error);
}

TEST(Compatibility, InvertiblePairsAndNijenhuis) {
    int compatible = 0, incompatible = 0;
    for (const auto& rep : {coadjoint(fixtures::aff1()), coadjoint(fixtures::h3()), adjoint(fixtures::h3())}) {
        std::vector<Matrix> inv;
        for (const auto& t : small_o_operators(rep))
            if (is_invertible(t)) inv.push_back(t);
        for (std::size_t a = 0; a < inv.size(); a += 3)
            for (std::size_t b = 0; b < inv.size(); b += 5) {
                bool comp = are_compatible(rep, inv[a], inv[b]);
                Matrix n = inv[a] * invert(inv[b]);
                // Prop: compatible => N Nijenhuis; both invertible and N Nijenhuis => compatible
                EXPECT_EQ(comp, is_nijenhuis(rep.algebra(), n));
                if (comp) {
                    EXPECT_EQ(nijenhuis_from_pair(rep, inv[a], inv[b]), n);
                    ++compatible;
                } else {
                    EXPECT_THROW(nijenhuis_from_pair(rep, inv[a], inv[b]), Error);
                    ++incompatible;
                }
            }
    }
    EXPECT_GT(compatible, 0);
    EXPECT_GT(incompatible, 0);
}

TEST(NijenhuisFromPair, Trivial) {
    auto rep = coadjoint(fixtures::aff1());
    for (const auto& t : small_o_operators(rep)) {
        if (!is_invertible(t)) continue;
        EXPECT_TRUE(nijenhuis_from_pair(rep, Matrix(2, 2), t).is_zero());
        EXPECT_EQ(nijenhuis_from_pair(rep, t, t), Matrix::identity(2));
    }
}

TEST(PreLie, Examples) {
    auto rep = adjoint(fixtures::aff1());
    auto z = pre_lie_from_o(rep, Matrix(2, 2));
    EXPECT_TRUE(std::all_of(z.tensor().begin(), z.tensor().end(), [](const Rational& q) { return q.is_zero(); }));
    auto p = pre_lie_from_o(rep, kAffT);
    EXPECT_EQ(p.product(unit_vec(2, 0), unit_vec(2, 1)), (Vec{0, 0}));
    EXPECT_EQ(p.product(unit_vec(2, 0), unit_vec(2, 0)), (Vec{0, -1}));
    auto triv = Representation::trivial(fixtures::h3(), 2);
    auto pt = pre_lie_from_o(triv, Matrix{{1, 0}, {0, 0}, {0, 1}});
    EXPECT_TRUE(std::all_of(pt.tensor().begin(), pt.tensor().end(), [](const Rational& q) { return q.is_zero(); }));
}

TEST(PreLie, CompatibleFromCompatibleO) {
    auto rep = adjoint(fixtures::h3());
    auto ops = small_o_operators(rep);
    int both = 0;
    for (std::size_t a = 0; a < ops.size(); a += 29)
        for (std::size_t b = 0; b < ops.size(); b += 31) {
            auto p1 = pre_lie_from_o(rep, ops[a]), p2 = pre_lie_from_o(rep, ops[b]);
            EXPECT_TRUE(pre_lie_compatible(p1, PreLieProduct::create(3, std::vector<Rational>(27))));
            EXPECT_TRUE(pre_lie_compatible(p1, p1));
            bool pc = pre_lie_compatible(p1, p2);
            if (are_compatible(rep, ops[a], ops[b])) {
                EXPECT_TRUE(pc);
                ++both;
            }
        }
    EXPECT_GT(both, 0);
}
