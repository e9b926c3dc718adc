#include <gtest/gtest.h>

#include <random>

#include "liemod/cochain.hpp"
#include "liemod/fixtures.hpp"
#include "support.hpp"

using namespace liemod;

namespace {

Cochain random_cochain(std::mt19937_64& rng, std::size_t deg, std::size_t src, std::size_t tgt) {
    Cochain c(deg, src, tgt);
    for (std::size_t r = 0; r < c.size(); ++r) c.value(r) = support::random_vec(rng, tgt, -3, 3);
    return c;
}

// mu2 on M (+) g with the module first: [x, u] for x in M, u in g is -(u . x).
Cochain module_mu2(const Representation& rep) {
    std::size_t da = rep.dim(), db = rep.algebra().dim(), n = da + db;
    Cochain mu(2, n, n);
    for (std::size_t r = 0; r < mu.size(); ++r) {
        const auto& t = mu.tuple(r);
        Vec v(n);
        if (t[0] >= da) {
            Vec br = rep.algebra().bracket(t[0] - da, t[1] - da);
            for (std::size_t k = 0; k < db; ++k) v[da + k] = br[k];
        } else if (t[1] >= da) {
            Vec act = rep.action(t[1] - da).column(t[0]);
            for (std::size_t k = 0; k < da; ++k) v[k] = -act[k];
        }
        mu.value(r) = v;
    }
    return mu;
}

}  // namespace

TEST(Cochain, AlternatingEval) {
    Cochain c(2, 3, 1);
    std::vector<std::size_t> t{0, 2};
    c.set(t, Vec{5});
    EXPECT_EQ(c.eval(std::vector<std::size_t>{2, 0}), (Vec{-5}));
    EXPECT_EQ(c.eval(std::vector<std::size_t>{2, 2}), (Vec{0}));
    EXPECT_EQ(c.size(), 3u);
    for (std::size_t r = 0; r < c.size(); ++r) EXPECT_EQ(c.rank_of(c.tuple(r)), r);
    EXPECT_EQ(c.eval_vectors({{1, 0, 1}, {0, 0, 2}}), (Vec{10}));
}

TEST(Cochain, RankOfMatchesEnumeration) {
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            Cochain c(k, n, 1);
            auto ts = increasing_tuples(n, k);
            ASSERT_EQ(ts.size(), c.size());
            for (std::size_t r = 0; r < ts.size(); ++r) EXPECT_EQ(c.rank_of(ts[r]), r);
        }
}

TEST(CeDifferential, Examples) {
    auto aff = fixtures::aff1();
    auto adj = adjoint(aff);
    EXPECT_TRUE(ce_differential(adj, Cochain(1, 2, 2)).is_zero());
    auto triv = Representation::trivial(aff, 2);
    EXPECT_TRUE(ce_differential(triv, Cochain::constant(Vec{3, -1}, 2)).is_zero());

    Cochain id = Cochain::from_map(Matrix::identity(2));
    Cochain d = ce_differential(adj, id);
    EXPECT_EQ(d.eval(std::vector<std::size_t>{0, 1}), (Vec{0, 1}));
    EXPECT_FALSE(is_cocycle(adj, id));
    EXPECT_TRUE(is_cocycle(adj, Cochain(1, 2, 2)));

    // degree beyond dim: empty index set
    Cochain top(2, 2, 2);
    EXPECT_EQ(ce_differential(adj, top).size(), 0u);
}

TEST(CeDifferential, SquareIsZero) {
    std::mt19937_64 rng(11);
    for (const auto& [name, rep] : fixtures::representations())
        for (std::size_t deg = 0; deg <= 3; ++deg)
            for (int it = 0; it < 4; ++it) {
                Cochain f = random_cochain(rng, deg, rep.algebra().dim(), rep.dim());
                Cochain dd = ce_differential(rep, ce_differential(rep, f));
                EXPECT_TRUE(dd.is_zero()) << name << " degree " << deg;
                EXPECT_TRUE(is_cocycle(rep, ce_differential(rep, f)));
            }
}

TEST(NrBracket, Examples) {
    std::mt19937_64 rng(5);
    for (const auto& [name, g] : fixtures::algebras()) {
        Cochain mu = Cochain::from_bracket(g);
        EXPECT_TRUE(nr_bracket(mu, mu).is_zero()) << name;
        EXPECT_TRUE(nr_bracket(mu, Cochain(3, g.dim(), g.dim())).is_zero());
    }
    Matrix p = support::random_matrix(rng, 3, 3, -2, 2), q = support::random_matrix(rng, 3, 3, -2, 2);
    Cochain b = nr_bracket(Cochain::from_map(p), Cochain::from_map(q));
    EXPECT_EQ(b.as_matrix(), p * q - q * p);
}

TEST(NrBracket, GradedSkew) {
    std::mt19937_64 rng(6);
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b) {
            Cochain p = random_cochain(rng, a, 3, 3), q = random_cochain(rng, b, 3, 3);
            long pd = static_cast<long>(a) - 1, qd = static_cast<long>(b) - 1;
            Rational sign = ((pd * qd) % 2 == 0) ? Rational(-1) : Rational(1);
            EXPECT_EQ(nr_bracket(p, q), sign * nr_bracket(q, p)) << a << "," << b;
        }
}

TEST(NrBracket, JacobiEquivalence) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> d(-1, 1);
    int lie = 0, not_lie = 0;
    for (int it = 0; it < 300; ++it) {
        Cochain mu(2, 3, 3);
        std::vector<Rational> t(27);
        for (std::size_t r = 0; r < 3; ++r) {
            Vec v(3);
            for (auto& x : v) x = (it % 2) ? d(rng) * (d(rng) != 0) : d(rng);
            mu.value(r) = v;
            const auto& tp = mu.tuple(r);
            for (std::size_t k = 0; k < 3; ++k) {
                t[(tp[0] * 3 + tp[1]) * 3 + k] = v[k];
                t[(tp[1] * 3 + tp[0]) * 3 + k] = -v[k];
            }
        }
        bool jac = nr_bracket(mu, mu).is_zero();
        EXPECT_EQ(jac, bool(lie_check(3, t)));
        (jac ? lie : not_lie)++;
    }
    EXPECT_GT(lie, 0);
    EXPECT_GT(not_lie, 0);
}

TEST(DerivedBracket, ModuleCaseIsTwiceTheOResidual) {
    // a = M, b = g: [T, T](m, n) = 2([Tm, Tn] - T(Tm . n) + T(Tn . m))
    std::mt19937_64 rng(9);
    for (const auto& [name, rep] : fixtures::representations()) {
        Cochain mu = module_mu2(rep);
        for (int it = 0; it < 5; ++it) {
            Matrix t = support::random_matrix(rng, rep.algebra().dim(), rep.dim(), -2, 2);
            Cochain br = derived_bracket(mu, rep.dim(), Cochain::from_map(t), Cochain::from_map(t));
            for (std::size_t i = 0; i < rep.dim(); ++i)
                for (std::size_t j = i + 1; j < rep.dim(); ++j) {
                    Vec tm = t.column(i), tn = t.column(j);
                    Vec expect = rep.algebra().bracket(tm, tn) - t * rep.act(tm, unit_vec(rep.dim(), j)) +
                                 t * rep.act(tn, unit_vec(rep.dim(), i));
                    EXPECT_EQ(br.eval(std::vector<std::size_t>{i, j}), Rational(2) * expect) << name;
                }
        }
    }
}

TEST(DerivedBracket, TrivialCases) {
    auto rep = adjoint(fixtures::h3());
    Cochain mu = module_mu2(rep);
    Cochain q = Cochain::from_map(Matrix::identity(3));
    EXPECT_TRUE(derived_bracket(mu, 3, Cochain(1, 3, 3), q).is_zero());
    Cochain flat(2, 4, 4);
    EXPECT_TRUE(derived_bracket(flat, 2, Cochain::from_map(Matrix{{1, 2}, {3, 4}}), Cochain::from_map(Matrix{{0, 1}, {1, 0}}))
                    .is_zero());
}

TEST(Lift, RoundTripAndMalformed) {
    Cochain f = Cochain::from_map(Matrix{{1, 2}, {3, 4}, {5, 6}});
    Cochain l = lift(f, 2, 3);
    EXPECT_EQ(restrict_lift(l, 2), f);
    Cochain bad = l;
    bad.value(bad.size() - 1) = unit_vec(5, 0);
    try {
        restrict_lift(bad, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MalformedLift);
    }
}
