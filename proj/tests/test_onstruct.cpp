#include <gtest/gtest.h>

#include <random>

#include "liemod/fixtures.hpp"
#include "liemod/linalg.hpp"
#include "liemod/onstruct.hpp"
#include "liemod/ooper.hpp"
#include "support.hpp"

using namespace liemod;
using support::for_each_small_matrix;

namespace {

std::vector<Matrix> small_nijenhuis(const LieAlgebra& g) {
    std::vector<Matrix> out;
    for_each_small_matrix(g.dim(), g.dim(), [&](const Matrix& n) {
        if (is_nijenhuis(g, n)) out.push_back(n);
    });
    return out;
}

std::vector<Matrix> small_invertible_o(const Representation& rep) {
    std::vector<Matrix> out;
    for_each_small_matrix(rep.algebra().dim(), rep.dim(), [&](const Matrix& t) {
        if (is_invertible(t) && is_o_operator(rep, t)) out.push_back(t);
    });
    return out;
}

// Independent torsion: expand the bracket by structure constants.
bool torsion_free(const LieAlgebra& g, const Matrix& n) {
    std::size_t d = g.dim();
    auto br = [&](const Vec& x, const Vec& y) {
        Vec out(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!x[i].is_zero() && !y[j].is_zero())
                    for (std::size_t k = 0; k < d; ++k) out[k] += x[i] * y[j] * g.c(i, j, k);
        return out;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec x = unit_vec(d, i), y = unit_vec(d, j);
            Vec inner = br(n * x, y) + br(x, n * y) - n * br(x, y);
            if (br(n * x, n * y) != n * inner) return false;
        }
    return true;
}

struct OnCase {
    Representation rep;
    ONStructure on;
};

std::vector<OnCase> on_cases(std::size_t stride) {
    std::vector<OnCase> out;
    for (const auto& rep : {coadjoint(fixtures::aff1()), adjoint(fixtures::h3()), coadjoint(fixtures::h3()),
                            adjoint(fixtures::ab2())}) {
        auto inv = small_invertible_o(rep);
        for (std::size_t a = 0; a < inv.size(); a += stride)
            for (std::size_t b = 1; b < inv.size(); b += stride + 2)
                if (are_compatible(rep, inv[a], inv[b])) out.push_back({rep, on_from_compatible_pair(rep, inv[a], inv[b])});
    }
    return out;
}

}  // namespace

TEST(Nijenhuis, Examples) {
    auto g = fixtures::aff1();
    EXPECT_TRUE(is_nijenhuis(g, Matrix::identity(2)));
    EXPECT_TRUE(is_nijenhuis(g, Matrix(2, 2)));
    Matrix n{{1, 0}, {0, 0}};
    EXPECT_TRUE(is_nijenhuis(g, n));
    auto d = deformed_bracket(g, n);
    EXPECT_EQ(d.bracket(unit_vec(2, 0), unit_vec(2, 1)), (Vec{0, 1}));
    EXPECT_EQ(deformed_bracket(g, Matrix::identity(2)), g);
    EXPECT_EQ(deformed_bracket(g, Matrix(2, 2)), LieAlgebra::abelian(2));
    // a non-Nijenhuis operator on sl2
    auto s = fixtures::sl2();
    bool found = false;
    for_each_small_matrix(3, 3, [&](const Matrix& m) {
        if (found || is_nijenhuis(s, m)) return;
        found = true;
        EXPECT_THROW(deformed_bracket(s, m), Error);
    });
    EXPECT_TRUE(found);
}

TEST(Nijenhuis, AgreesWithOracle) {
    for (const auto& [name, g] : fixtures::algebras())
        for_each_small_matrix(g.dim(), g.dim(), [&](const Matrix& n) {
            EXPECT_EQ(is_nijenhuis(g, n), torsion_free(g, n)) << name;
        });
}

TEST(Nijenhuis, PowerProps) {
    for (const auto& [name, g] : fixtures::algebras()) {
        EXPECT_TRUE(nijenhuis_power_props(g, Matrix::identity(g.dim()), 3).ok());
        EXPECT_TRUE(nijenhuis_power_props(g, Matrix(g.dim(), g.dim()), 3).ok());
        auto ns = small_nijenhuis(g);
        for (std::size_t i = 0; i < ns.size(); i += 11) {
            auto r = nijenhuis_power_props(g, ns[i], 3, i);
            EXPECT_TRUE(r.ok()) << name << " " << r.first_failure;
        }
    }
}

TEST(Deformation, Examples) {
    for (const auto& [name, rep] : fixtures::representations()) {
        std::size_t d = rep.algebra().dim(), m = rep.dim();
        DeformationData zero{std::vector<Rational>(d * d * d), std::vector<Matrix>(d, Matrix(m, m))};
        EXPECT_TRUE(is_infinitesimal_deformation(rep, zero).ok) << name;
        // doubling: the bracket and action themselves
        DeformationData dbl{rep.algebra().tensor(), rep.actions()};
        EXPECT_TRUE(is_infinitesimal_deformation(rep, dbl).ok) << name;
        auto tid = trivial_deformation_from(rep, Matrix::identity(d), Matrix::identity(m));
        EXPECT_EQ(tid.bracket1, dbl.bracket1);
        EXPECT_EQ(tid.action1, dbl.action1);
        auto t0 = trivial_deformation_from(rep, Matrix(d, d), Matrix(m, m));
        EXPECT_EQ(t0.bracket1, zero.bracket1);
        EXPECT_EQ(t0.action1, zero.action1);
    }
    // a skew-violating bracket is rejected
    auto rep = adjoint(fixtures::aff1());
    std::vector<Rational> bad(8);
    bad[(0 * 2 + 1) * 2 + 1] = 1;
    auto c = is_infinitesimal_deformation(rep, {bad, std::vector<Matrix>(2, Matrix(2, 2))});
    EXPECT_FALSE(c.ok);
}

TEST(Deformation, TrivialFromPairsAff1) {
    auto rep = adjoint(fixtures::aff1());
    int found = 0, rejected = 0;
    for (const auto& n : small_nijenhuis(rep.algebra()))
        for_each_small_matrix(2, 2, [&](const Matrix& s) {
            if (!deformation_identity_check(rep, n, s).ok) {
                if (rejected++ < 10) EXPECT_THROW(trivial_deformation_from(rep, n, s), Error);
                return;
            }
            auto d = trivial_deformation_from(rep, n, s);
            EXPECT_TRUE(is_infinitesimal_deformation(rep, d).ok);
            EXPECT_TRUE(triviality_check(rep, d, n, s).ok);
            ++found;
        });
    EXPECT_GT(found, 2);
    EXPECT_GT(rejected, 0);
}

TEST(NijenhuisStructure, Examples) {
    for (const auto& [name, rep] : fixtures::representations()) {
        std::size_t d = rep.algebra().dim(), m = rep.dim();
        EXPECT_TRUE(is_nijenhuis_structure(rep, Matrix::identity(d), Matrix::identity(m))) << name;
        EXPECT_TRUE(is_nijenhuis_structure(rep, Matrix(d, d), Matrix(m, m))) << name;
    }
}

TEST(NijenhuisStructure, CoadjointTranspose) {
    for (const auto& [name, g] : fixtures::algebras()) {
        auto co = coadjoint(g);
        for (const auto& n : small_nijenhuis(g)) EXPECT_TRUE(is_nijenhuis_structure(co, n, n.transpose())) << name;
    }
}

TEST(NijenhuisStructure, AdjointSameOperatorCounterexample) {
    // (N, N) on the adjoint module is not a Nijenhuis structure in general
    auto rep = adjoint(fixtures::aff1());
    Matrix n{{1, 0}, {0, 0}};
    ASSERT_TRUE(is_nijenhuis(rep.algebra(), n));
    EXPECT_FALSE(nijenhuis_structure_identity(rep, n, n).ok);
    EXPECT_FALSE(nijenhuis_structure_oracle(rep, n, n));
    EXPECT_FALSE(is_nijenhuis_structure(rep, n, n));
}

TEST(NijenhuisStructure, DirectAgreesWithLiftExhaustive) {
    int yes = 0, no = 0;
    for (const auto& rep : {adjoint(fixtures::aff1()), coadjoint(fixtures::aff1()), adjoint(fixtures::ab2())}) {
        auto ns = small_nijenhuis(rep.algebra());
        for (const auto& n : ns)
            for_each_small_matrix(2, 2, [&](const Matrix& s) {
                bool v = is_nijenhuis_structure(rep, n, s);  // throws on disagreement
                (v ? yes : no)++;
                if (v) {
                    // powers remain Nijenhuis structures
                    EXPECT_TRUE(is_nijenhuis_structure(rep, n * n, s * s));
                    EXPECT_TRUE(is_nijenhuis_structure(rep, n * n * n, s * s * s));
                }
            });
    }
    EXPECT_GT(yes, 0);
    EXPECT_GT(no, 0);
}

TEST(TildeAction, Examples) {
    for (const auto& [name, rep] : fixtures::representations()) {
        std::size_t d = rep.algebra().dim(), m = rep.dim();
        auto t1 = tilde_action(rep, Matrix::identity(d), Matrix(m, m));
        EXPECT_EQ(t1.actions(), rep.actions()) << name;
        auto t0 = tilde_action(rep, Matrix(d, d), Matrix(m, m));
        for (const auto& a : t0.actions()) EXPECT_TRUE(a.is_zero());
        EXPECT_EQ(t0.algebra(), LieAlgebra::abelian(d));
    }
    auto rep = adjoint(fixtures::aff1());
    Matrix n{{1, 0}, {0, 0}};
    try {
        tilde_action(rep, n, n);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotNijenhuisStructure);
    }
}

TEST(ONStructure, TrivialCases) {
    for (const auto& [name, rep] : fixtures::representations()) {
        std::size_t d = rep.algebra().dim(), m = rep.dim();
        auto inv = small_invertible_o(rep);
        for_each_small_matrix(d, m, [&](const Matrix& t) {
            if (!is_o_operator(rep, t) || t.is_zero() || !(t(0, 0) == Rational(1))) return;
            EXPECT_TRUE(is_on_structure(rep, t, Matrix::identity(d), Matrix::identity(m))) << name;
        });
        EXPECT_TRUE(is_on_structure(rep, Matrix(d, m), Matrix(d, d), Matrix(m, m))) << name;
    }
    auto co = coadjoint(fixtures::h3());
    for (const auto& n : small_nijenhuis(co.algebra()))
        EXPECT_TRUE(is_on_structure(co, Matrix(3, 3), n, n.transpose()));
}

TEST(ONStructure, FromCompatiblePairs) {
    auto cases = on_cases(2);
    ASSERT_GT(cases.size(), 10u);
    for (const auto& [rep, on] : cases) {
        auto rpt = on_report(rep, on.t, on.n, on.s);
        ASSERT_TRUE(rpt.ok()) << (rpt.first_failure() ? rpt.first_failure()->clause : "");
        // T is an O-operator for the tilde action over the deformed algebra
        EXPECT_TRUE(is_o_operator(tilde_action(rep, on.n, on.s), on.t));
        Matrix nt = on.n * on.t;
        EXPECT_TRUE(is_o_operator(rep, nt));
        EXPECT_TRUE(are_compatible(rep, on.t, nt));
    }
    auto rep = coadjoint(fixtures::aff1());
    auto inv = small_invertible_o(rep);
    auto a = on_from_compatible_pair(rep, Matrix(2, 2), inv[0]);
    EXPECT_TRUE(a.n.is_zero() && a.s.is_zero());
    auto b = on_from_compatible_pair(rep, inv[0], inv[0]);
    EXPECT_EQ(b.n, Matrix::identity(2));
    EXPECT_EQ(b.s, Matrix::identity(2));
    try {
        on_from_compatible_pair(rep, inv[0], Matrix(2, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Singular);
    }
}

TEST(ONStructure, Failures) {
    auto rep = adjoint(fixtures::aff1());
    auto rpt = on_report(rep, Matrix::identity(2), Matrix::identity(2), Matrix::identity(2));
    EXPECT_FALSE(rpt.ok());
    ASSERT_NE(rpt.first_failure(), nullptr);
    EXPECT_FALSE(rpt.o_operator.ok);
    Matrix t{{0, 0}, {1, 0}};
    auto r2 = on_report(rep, t, Matrix::identity(2), Matrix(2, 2));
    EXPECT_FALSE(r2.intertwining.ok);
}

TEST(Hierarchy, Examples) {
    for (const auto& [rep, on] : on_cases(3)) {
        auto h = hierarchy(rep, on.t, on.n, on.s, 3);
        ASSERT_EQ(h.t.size(), 4u);
        Matrix sk = Matrix::identity(rep.dim());
        for (std::size_t k = 0; k <= 3; ++k) {
            EXPECT_EQ(h.t[k], on.t * sk);
            sk = sk * on.s;
        }
        EXPECT_TRUE(hierarchy_identities(rep, on.t, on.n, on.s, 3).ok);
    }
    auto rep = coadjoint(fixtures::h3());
    auto inv = small_invertible_o(rep);
    auto h = hierarchy(rep, inv[0], Matrix::identity(3), Matrix::identity(3), 3);
    for (const auto& tk : h.t) EXPECT_EQ(tk, inv[0]);
    auto hz = hierarchy(rep, Matrix(3, 3), Matrix::identity(3), Matrix::identity(3), 3);
    for (const auto& tk : hz.t) EXPECT_TRUE(tk.is_zero());
    EXPECT_THROW(hierarchy(adjoint(fixtures::aff1()), Matrix::identity(2), Matrix::identity(2), Matrix::identity(2), 2),
                 Error);
}

TEST(PN, Examples) {
    for (const auto& [name, g] : fixtures::algebras()) {
        for (const auto& n : small_nijenhuis(g)) EXPECT_TRUE(is_pn_structure(g, Bivector(g.dim()), n)) << name;
    }
    auto h = fixtures::h3();
    auto r = Bivector::from_entries(3, {{0, 2, Rational(1)}});
    EXPECT_TRUE(is_pn_structure(h, r, Matrix::identity(3)));
    Matrix rs = r_sharp(r);
    int yes = 0, no = 0;
    for (const auto& n : small_nijenhuis(h)) {
        bool v = is_pn_structure(h, r, n);
        if (n * rs != rs * n.transpose()) {
            EXPECT_FALSE(v);
            continue;
        }
        (v ? yes : no)++;
        if (!v) continue;
        auto rk = pn_hierarchy(h, r, n, 3);
        ASSERT_EQ(rk.size(), 4u);
        Matrix nk = Matrix::identity(3);
        for (std::size_t k = 0; k <= 3; ++k) {
            EXPECT_EQ(r_sharp(rk[k]), nk * rs);
            EXPECT_TRUE(is_r_matrix(h, rk[k]));
            nk = nk * n;
        }
    }
    EXPECT_GT(yes, 0);
    auto same = pn_hierarchy(h, r, Matrix::identity(3), 3);
    for (const auto& b : same) EXPECT_EQ(b, r);
    auto zero = pn_hierarchy(h, Bivector(3), Matrix::identity(3), 2);
    for (const auto& b : zero) EXPECT_TRUE(b.is_zero());
    try {
        pn_hierarchy(h, Bivector::from_entries(3, {{0, 1, Rational(1)}}), Matrix::identity(3), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPN);
    }
}

TEST(Hierarchy, LiteralShiftFormFails) {
    // S^k([m,n]^{T_l}) differs from [m,n]^{T_{k+l}} already at k = 1, l = 0
    int mismatches = 0;
    for (const auto& [rep, on] : on_cases(3)) {
        Matrix ts = on.t * on.s;
        for (std::size_t i = 0; i < rep.dim(); ++i)
            for (std::size_t j = i + 1; j < rep.dim(); ++j) {
                Vec m = unit_vec(rep.dim(), i), q = unit_vec(rep.dim(), j);
                Vec lhs = induced_lie(rep, ts).bracket(m, q);
                Vec lit = on.s * induced_lie(rep, on.t).bracket(m, q);
                EXPECT_EQ(lhs, deformed_t_bracket(rep, on.t, on.s, m, q));
                if (lhs != lit) ++mismatches;
            }
    }
    EXPECT_GT(mismatches, 0);
}
