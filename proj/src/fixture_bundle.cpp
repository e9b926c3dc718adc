#include "liemod/fixture_bundle.hpp"

#include <functional>
#include <optional>

#include "liemod/fixtures.hpp"
#include "liemod/gcsholo.hpp"
#include "liemod/linalg.hpp"
#include "liemod/twilled.hpp"

namespace liemod {

namespace {

// First matrix with entries in {-1, 0, 1} accepted by `pred`, in the order
// where entry (0, 0) varies fastest.
std::optional<Matrix> find_matrix(std::size_t rows, std::size_t cols, const std::function<bool(const Matrix&)>& pred) {
    std::size_t n = rows * cols, total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        Matrix m(rows, cols);
        std::size_t x = code;
        for (std::size_t i = 0; i < n; ++i) {
            m(i / cols, i % cols) = static_cast<int>(x % 3) - 1;
            x /= 3;
        }
        if (pred(m)) return m;
    }
    return std::nullopt;
}

std::vector<Matrix> all_matrices(std::size_t rows, std::size_t cols, const std::function<bool(const Matrix&)>& pred) {
    std::vector<Matrix> out;
    find_matrix(rows, cols, [&](const Matrix& m) {
        if (pred(m)) out.push_back(m);
        return false;
    });
    return out;
}

Matrix must(const std::optional<Matrix>& m, const char* what) {
    if (!m) throw Error(ErrorKind::PreconditionFailed, std::string("fixture search found no ") + what);
    return *m;
}

bool is_scalar(const Matrix& m) { return m == m(0, 0) * Matrix::identity(m.rows()); }

const Matrix kRot{{0, -1}, {1, 0}};

class Bundle {
public:
    void put(const std::string& name, Json obj) { objects_[name] = std::move(obj); }
    Json doc() const {
        Json d;
        d["objects"] = objects_;
        return d;
    }

private:
    Json objects_ = Json::object();
};

Json with(Json base, std::initializer_list<std::pair<const char*, Json>> fields) {
    for (const auto& [k, v] : fields) base[k] = v;
    return base;
}

Json kind(const char* k) {
    Json j;
    j["kind"] = k;
    return j;
}

}  // namespace

Json fixture_bundle() {
    Bundle b;
    for (const auto& [name, g] : fixtures::algebras()) b.put(name, algebra_to_json(g));
    for (const auto& nr : fixtures::representations()) {
        std::string alg = nr.name.substr(0, nr.name.find('_'));
        b.put(nr.name, rep_to_json(nr.rep, alg));
    }
    LieAlgebra ab2 = fixtures::ab2(), aff1 = fixtures::aff1(), h3 = fixtures::h3(), sl2 = fixtures::sl2();
    Representation aff1_adj = adjoint(aff1), aff1_coadj = coadjoint(aff1);
    Representation h3_adj = adjoint(h3), h3_coadj = coadjoint(h3), sl2_adj = adjoint(sl2);
    Representation ab2_triv = Representation::trivial(ab2, 2);

    // O-operators
    auto o = [](const char* rep_ref, const Matrix& t) {
        return with(kind("o-operator"), {{"rep_ref", rep_ref}, {"matrix", to_json(t)}});
    };
    Matrix aff1_t{{0, 0}, {1, 0}};
    b.put("aff1_T", o("aff1_adj", aff1_t));
    b.put("ab2_adj_T", o("ab2_adj", Matrix::identity(2)));
    Matrix aff1_coadj_t = must(find_matrix(2, 2, [&](const Matrix& t) {
                                   return is_invertible(t) && is_o_operator(aff1_coadj, t);
                               }),
                               "invertible O-operator on aff1_coadj");
    b.put("aff1_coadj_T", o("aff1_coadj", aff1_coadj_t));
    Matrix h3_coadj_t = must(find_matrix(3, 3, [&](const Matrix& t) {
                                 return rank(t) >= 2 && is_o_operator(h3_coadj, t);
                             }),
                             "rank 2 O-operator on h3_coadj");
    b.put("h3_coadj_T", o("h3_coadj", h3_coadj_t));
    Matrix h3_adj_t{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}};
    b.put("h3_adj_T", o("h3_adj", h3_adj_t));
    Matrix sl2_t = must(find_matrix(3, 3, [&](const Matrix& t) { return !t.is_zero() && is_o_operator(sl2_adj, t); }),
                        "nonzero O-operator on sl2_adj");
    b.put("sl2_adj_T", o("sl2_adj", sl2_t));

    // r-matrices
    Bivector r13 = Bivector::from_entries(3, {{0, 2, Rational(1)}});
    b.put("h3_r13", bivector_to_json(r13));
    b.put("h3_rmat", with(kind("r-matrix"), {{"algebra_ref", "h3"}, {"r", "h3_r13"}}));
    b.put("aff1_rmat", with(kind("r-matrix"), {{"algebra_ref", "aff1"},
                                               {"r", bivector_to_json(Bivector::from_entries(2, {{0, 1, Rational(1)}}))}}));
    Matrix sl2_rm = must(find_matrix(3, 3, [&](const Matrix& m) {
                             if (!is_antisymmetric(m) || m.is_zero()) return false;
                             return is_r_matrix(sl2, Bivector::from_matrix(m));
                         }),
                         "r-matrix on sl2");
    b.put("sl2_rmat", with(kind("r-matrix"), {{"algebra_ref", "sl2"}, {"r", bivector_to_json(Bivector::from_matrix(sl2_rm))}}));

    // compatible pairs and ON-structures built from them
    auto pair_on = [&](const Representation& rep, const char* rep_ref, const std::string& stem, const std::string& on_name) {
        std::size_t d = rep.algebra().dim(), m = rep.dim();
        auto inv = all_matrices(d, m, [&](const Matrix& t) { return is_invertible(t) && is_o_operator(rep, t); });
        for (const auto& t2 : inv)
            for (const auto& t1 : inv) {
                if (is_scalar(t1 * invert(t2)) || !are_compatible(rep, t1, t2)) continue;
                b.put(stem + "_pair", with(kind("compatible-pair"),
                                            {{"rep_ref", rep_ref}, {"T1", to_json(t1)}, {"T2", to_json(t2)}}));
                ONStructure on = on_from_compatible_pair(rep, t1, t2);
                b.put(on_name, with(kind("on-structure"), {{"rep_ref", rep_ref},
                                                            {"T", to_json(on.t)},
                                                            {"N", to_json(on.n)},
                                                            {"S", to_json(on.s)}}));
                return;
            }
        throw Error(ErrorKind::PreconditionFailed, "fixture search found no compatible pair on " + std::string(rep_ref));
    };
    pair_on(aff1_coadj, "aff1_coadj", "aff1_coadj", "onstruct_fix");
    pair_on(h3_adj, "h3_adj", "h3_adj", "h3_adj_on");

    // Nijenhuis operators and structures
    auto nij = [](const char* alg, const Matrix& n) {
        return with(kind("nijenhuis"), {{"algebra_ref", alg}, {"matrix", to_json(n)}});
    };
    Matrix aff1_n{{1, 0}, {0, 0}};
    b.put("aff1_N", nij("aff1", aff1_n));
    Matrix h3_n = must(find_matrix(3, 3, [&](const Matrix& n) { return !is_scalar(n) && rank(n) == 3 && is_nijenhuis(h3, n); }),
                       "invertible non-scalar Nijenhuis operator on h3");
    b.put("h3_N", nij("h3", h3_n));
    Matrix sl2_n = must(find_matrix(3, 3, [&](const Matrix& n) { return !is_scalar(n) && is_nijenhuis(sl2, n); }),
                        "non-scalar Nijenhuis operator on sl2");
    b.put("sl2_N", nij("sl2", sl2_n));
    b.put("aff1_coadj_NS", with(kind("nijenhuis-structure"),
                                {{"rep_ref", "aff1_coadj"}, {"N", to_json(aff1_n)}, {"S", to_json(aff1_n.transpose())}}));
    Matrix h3_s = must(find_matrix(3, 3, [&](const Matrix& s) { return is_nijenhuis_structure(h3_adj, h3_n, s); }),
                       "Nijenhuis structure on h3_adj");
    b.put("h3_adj_NS", with(kind("nijenhuis-structure"), {{"rep_ref", "h3_adj"}, {"N", to_json(h3_n)}, {"S", to_json(h3_s)}}));

    // deformation from (N, S)
    Matrix def_s = must(find_matrix(2, 2, [&](const Matrix& s) { return deformation_identity_check(aff1_coadj, aff1_n, s).ok; }),
                        "deformation pair on aff1_coadj");
    DeformationData dd = trivial_deformation_from(aff1_coadj, aff1_n, def_s);
    Json acts = Json::array();
    for (const auto& a : dd.action1) acts.push_back(to_json(a));
    b.put("aff1_coadj_def", with(kind("deformation"), {{"rep_ref", "aff1_coadj"},
                                                       {"bracket1", tensor_to_json(2, dd.bracket1, true)},
                                                       {"action1", std::move(acts)}}));

    // PN structure
    Matrix h3_pn = must(find_matrix(3, 3, [&](const Matrix& n) { return !is_scalar(n) && is_pn_structure(h3, r13, n); }),
                        "PN structure on h3");
    b.put("h3_pn", with(kind("pn-structure"), {{"algebra_ref", "h3"}, {"r", "h3_r13"}, {"N", to_json(h3_pn)}}));

    // twilled algebras and MC solutions
    Json a_h3 = Json::array({to_json(Vec{1, 0, 0})});
    Json b_h3 = Json::array({to_json(Vec{0, 1, 0}), to_json(Vec{0, 0, 1})});
    b.put("h3_twilled", with(kind("twilled"), {{"total_ref", "h3"}, {"a_basis", a_h3}, {"b_basis", b_h3}}));
    b.put("aff1_twilled", with(kind("twilled"), {{"total_ref", "aff1"},
                                                 {"a_basis", Json::array({to_json(Vec{1, 0})})},
                                                 {"b_basis", Json::array({to_json(Vec{0, 1})})}}));
    b.put("aff1_coadj_T_twilled", with(kind("twilled"), {{"o_ref", "aff1_coadj_T"}}));
    TwilledLieAlgebra h3_tw = twilled_new(h3, Subspace::from_basis(3, {{1, 0, 0}}),
                                          Subspace::from_basis(3, {{0, 1, 0}, {0, 0, 1}}));
    Matrix h3_omega = must(find_matrix(2, 1, [&](const Matrix& w) { return !w.is_zero() && mc_check(h3_tw, w); }),
                           "MC solution on h3_twilled");
    b.put("h3_mc", with(kind("mc-solution"), {{"twilled_ref", "h3_twilled"},
                                              {"omega", to_json(h3_omega)},
                                              {"strong", strong_mc_check(h3_tw, h3_omega)}}));
    Matrix strong = [&] {
        for (const auto& w : strong_mc_search(aff1_coadj, aff1_coadj_t, 1))
            if (!w.is_zero()) return w;
        throw Error(ErrorKind::PreconditionFailed, "fixture search found no strong MC solution");
    }();
    b.put("aff1_coadj_mc", with(kind("mc-solution"), {{"twilled_ref", "aff1_coadj_T_twilled"},
                                                      {"omega", to_json(strong)},
                                                      {"strong", true}}));

    // generalized complex structures
    auto gcs = [](const char* rep_ref, const GCSModule& j) {
        return with(kind("gcs-module"), {{"rep_ref", rep_ref},
                                         {"N", to_json(j.n)},
                                         {"T", to_json(j.t)},
                                         {"sigma", to_json(j.sigma)},
                                         {"S", to_json(j.s)}});
    };
    b.put("aff1_coadj_gcs", gcs("aff1_coadj", gcs_from_invertible_o(aff1_coadj, aff1_coadj_t)));
    b.put("ab2_triv_gcs", gcs("ab2_triv", gcs_from_complex(ab2_triv, kRot, kRot)));
    b.put("ab2_gcs_lie", with(kind("gcs-lie"), {{"algebra_ref", "ab2"},
                                                {"N", to_json(kRot)},
                                                {"r", bivector_to_json(Bivector(2))},
                                                {"sigma2", to_json(Matrix(2, 2))}}));
    b.put("ab2_gcs_lie_r", with(kind("gcs-lie"), {{"algebra_ref", "ab2"},
                                                  {"N", to_json(Matrix(2, 2))},
                                                  {"r", bivector_to_json(Bivector::from_entries(2, {{0, 1, Rational(1)}}))},
                                                  {"sigma2", to_json(Matrix{{0, 1}, {-1, 0}})}}));

    // complex structures and holomorphic operators
    Matrix aff1_i = must(find_matrix(2, 2, [&](const Matrix& i) { return is_complex_structure(aff1, i); }),
                         "complex structure on aff1");
    b.put("aff1_I", with(kind("complex-structure"), {{"algebra_ref", "aff1"}, {"I", to_json(aff1_i)}}));
    b.put("ab2_I", with(kind("complex-structure"), {{"algebra_ref", "ab2"}, {"I", to_json(kRot)}}));
    b.put("ab2_triv_pair", with(kind("complex-pair"), {{"rep_ref", "ab2_triv"}, {"I", to_json(kRot)}, {"I_M", to_json(kRot)}}));
    Matrix ti = Matrix::identity(2);
    b.put("ab2_triv_holo", with(kind("holo-o"), {{"rep_ref", "ab2_triv"},
                                                 {"J", to_json(kRot)},
                                                 {"J_M", to_json(kRot)},
                                                 {"T_R", to_json(ti * kRot)},
                                                 {"T_I", to_json(ti)}}));
    // in dim 2, r_I# J^T is never antisymmetric for r_I != 0, so only r = 0 qualifies
    auto holo_r = [&](const LieAlgebra& g, const char* alg, const std::string& name, const Matrix& j) {
        std::size_t d = g.dim(), pairs = d * (d - 1) / 2, total = 1;
        for (std::size_t i = 0; i < pairs; ++i) total *= 3;
        // code 0 is r_I = 0, tried last
        for (std::size_t step = 1; step <= total; ++step) {
            std::size_t x = step % total;
            Matrix m(d, d);
            for (std::size_t p = 0, a = 0; a < d; ++a)
                for (std::size_t c = a + 1; c < d; ++c, ++p, x /= 3) {
                    m(a, c) = static_cast<int>(x % 3) - 1;
                    m(c, a) = -m(a, c);
                }
            Bivector ri = Bivector::from_matrix(m);
            Matrix rr_sharp = r_sharp(ri) * j.transpose();
            if (!is_antisymmetric(rr_sharp)) continue;
            Bivector rr = Bivector::from_sharp(rr_sharp);
            if (!is_holomorphic_r(g, j, rr, ri)) continue;
            b.put(name, with(kind("holo-r"), {{"algebra_ref", alg},
                                              {"J", to_json(j)},
                                              {"r_R", bivector_to_json(rr)},
                                              {"r_I", bivector_to_json(ri)}}));
            return;
        }
        throw Error(ErrorKind::PreconditionFailed, "fixture search found no holomorphic r-matrix");
    };
    holo_r(ab2, "ab2", "ab2_holo_r", kRot);
    holo_r(aff1, "aff1", "aff1_holo_r", aff1_i);
    LieAlgebra ab4 = LieAlgebra::abelian(4);
    b.put("ab4", algebra_to_json(ab4));
    holo_r(ab4, "ab4", "ab4_holo_r", direct_sum(kRot, kRot));

    // pre-Lie algebra
    b.put("aff1_pre_lie", pre_lie_to_json(pre_lie_from_o(aff1_adj, aff1_t)));

    // gauge data: maps g -> M
    auto map = [](const char* rep_ref, const Matrix& m) {
        return with(kind("map"), {{"rep_ref", rep_ref}, {"source", "algebra"}, {"target", "module"}, {"matrix", to_json(m)}});
    };
    b.put("aff1_B0", map("aff1_adj", Matrix(2, 2)));
    Matrix gauge_b = [&] {
        // nonzero admissible cocycle, preferring one that moves T
        auto basis = cocycle_basis(aff1_coadj, 1);
        std::optional<Matrix> fallback;
        std::size_t total = 1;
        for (std::size_t i = 0; i < basis.size(); ++i) total *= 3;
        for (std::size_t code = 1; code < total; ++code) {
            Matrix m(2, 2);
            std::size_t x = code;
            for (const auto& c : basis) {
                m += Rational(static_cast<int>(x % 3) - 1) * c.as_matrix();
                x /= 3;
            }
            if (m.is_zero()) continue;
            try {
                Matrix tb = gauge_transform(aff1_coadj, aff1_coadj_t, m);
                if (!(tb == aff1_coadj_t)) return m;
                if (!fallback) fallback = m;
            } catch (const Error&) {
            }
        }
        return must(fallback, "admissible cocycle");
    }();
    b.put("aff1_B", map("aff1_coadj", gauge_b));
    b.put("aff1_adj_cocycle", cochain_to_json(cocycle_basis(aff1_adj, 1).front()));

    // reduction data on h3 coadjoint: the ideal E = span{e3}
    b.put("h3_h", subspace_to_json(Subspace::whole(3)));
    b.put("h3_E", subspace_to_json(Subspace::from_basis(3, {{0, 0, 1}})));
    b.put("h3_Nsub", subspace_to_json(Subspace::whole(3)));
    return b.doc();
}

Json invalid_bundle() {
    Bundle b;
    LieAlgebra aff1 = fixtures::aff1();
    Representation aff1_coadj = coadjoint(aff1);
    b.put("aff1", algebra_to_json(aff1));
    b.put("aff1_adj", rep_to_json(adjoint(aff1), "aff1"));
    b.put("aff1_coadj", rep_to_json(aff1_coadj, "aff1"));
    // [e1, e2] = e2, [e2, e3] = e1: Jacobi fails on (0, 1, 2)
    Json broken = kind("lie-algebra");
    broken["dim"] = 3;
    broken["brackets"] = Json::array({Json::array({0, 1, to_json(Vec{0, 1, 0})}), Json::array({1, 2, to_json(Vec{1, 0, 0})})});
    b.put("broken_jacobi", broken);
    b.put("bad_T", with(kind("o-operator"), {{"rep_ref", "aff1_adj"}, {"matrix", to_json(Matrix::identity(2))}}));
    Matrix t = *find_matrix(2, 2, [&](const Matrix& m) { return is_invertible(m) && is_o_operator(aff1_coadj, m); });
    // N = S = sigma = 0: N T = T S holds, N^2 + T sigma = -id fails
    b.put("bad_J", with(kind("gcs-module"), {{"rep_ref", "aff1_coadj"},
                                             {"N", to_json(Matrix(2, 2))},
                                             {"T", to_json(t)},
                                             {"sigma", to_json(Matrix(2, 2))},
                                             {"S", to_json(Matrix(2, 2))}}));
    b.put("h3", algebra_to_json(fixtures::h3()));
    b.put("bad_r", with(kind("r-matrix"), {{"algebra_ref", "h3"},
                                           {"r", bivector_to_json(Bivector::from_entries(3, {{0, 1, Rational(1)}}))}}));
    return b.doc();
}

}  // namespace liemod
