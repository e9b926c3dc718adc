#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liemod/cli.hpp"
#include "liemod/fixtures.hpp"
#include "liemod/gcsholo.hpp"
#include "liemod/twilled.hpp"

namespace py = pybind11;
using namespace liemod;

namespace {

// Python values cross as int, str "p/q" or fractions.Fraction.
Rational to_rational(const py::handle& h) { return Rational::parse(py::str(h).cast<std::string>()); }

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.str());
}

Vec to_vec(const py::sequence& s) {
    Vec v;
    for (auto x : s) v.push_back(to_rational(x));
    return v;
}

py::list from_vec(const Vec& v) {
    py::list out;
    for (const auto& q : v) out.append(to_fraction(q));
    return out;
}

Matrix to_matrix(const py::sequence& rows) {
    std::vector<Vec> rs;
    for (auto r : rows) rs.push_back(to_vec(r.cast<py::sequence>()));
    if (rs.empty()) return Matrix();
    return Matrix::from_rows(rs, rs.front().size());
}

py::list from_matrix(const Matrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.append(from_vec(m.row(i)));
    return out;
}

Bivector to_bivector(const py::sequence& rows) { return Bivector::from_matrix(to_matrix(rows)); }

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict check_to_py(const Check& c) {
    py::dict d;
    d["ok"] = c.ok;
    d["clause"] = c.clause;
    d["witness"] = c.witness;
    d["defect"] = from_vec(c.defect);
    return d;
}

}  // namespace

PYBIND11_MODULE(_liemod, m) {
    m.doc() = "Exact O-operators, ON-structures, twilled Lie algebras and generalized complex structures";

    py::register_exception<Error>(m, "LiemodError", PyExc_ValueError);

    py::class_<LieAlgebra>(m, "LieAlgebra")
        .def_static(
            "from_brackets",
            [](std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, py::sequence>>& entries) {
                std::vector<BracketEntry> es;
                for (const auto& [i, j, v] : entries) es.emplace_back(i, j, to_vec(v));
                return lie_from_brackets(dim, es);
            },
            py::arg("dim"), py::arg("entries"))
        .def_static("abelian", &LieAlgebra::abelian)
        .def_property_readonly("dim", &LieAlgebra::dim)
        .def("bracket", [](const LieAlgebra& g, const py::sequence& x, const py::sequence& y) {
            return from_vec(g.bracket(to_vec(x), to_vec(y)));
        });

    py::class_<Representation>(m, "Representation")
        .def_static("trivial", &Representation::trivial)
        .def_property_readonly("dim", &Representation::dim)
        .def_property_readonly("algebra", &Representation::algebra)
        .def("act", [](const Representation& r, const py::sequence& x, const py::sequence& v) {
            return from_vec(r.act(to_vec(x), to_vec(v)));
        });

    m.def("adjoint", &adjoint);
    m.def("coadjoint", &coadjoint);
    m.def("dual_rep", &dual_rep);
    m.def("fixture_algebra", [](const std::string& name) {
        for (const auto& [n, g] : fixtures::algebras())
            if (n == name) return g;
        throw Error(ErrorKind::Resolution, "no fixture algebra '" + name + "'");
    });

    m.def("is_o_operator", [](const Representation& r, const py::sequence& t) { return is_o_operator(r, to_matrix(t)); });
    m.def("graph_check", [](const Representation& r, const py::sequence& t) { return graph_check(r, to_matrix(t)); });
    m.def("o_check", [](const Representation& r, const py::sequence& t) { return check_to_py(o_check(r, to_matrix(t))); });
    m.def("induced_lie", [](const Representation& r, const py::sequence& t) { return induced_lie(r, to_matrix(t)); });
    m.def("is_r_matrix", [](const LieAlgebra& g, const py::sequence& r) { return is_r_matrix(g, to_bivector(r)); });
    m.def("gauge_transform", [](const Representation& r, const py::sequence& t, const py::sequence& b) {
        return from_matrix(gauge_transform(r, to_matrix(t), to_matrix(b)));
    });
    m.def("are_compatible", [](const Representation& r, const py::sequence& t1, const py::sequence& t2) {
        return are_compatible(r, to_matrix(t1), to_matrix(t2));
    });
    m.def("is_nijenhuis", [](const LieAlgebra& g, const py::sequence& n) { return is_nijenhuis(g, to_matrix(n)); });
    m.def("deformed_bracket", [](const LieAlgebra& g, const py::sequence& n) { return deformed_bracket(g, to_matrix(n)); });
    m.def("is_on_structure", [](const Representation& r, const py::sequence& t, const py::sequence& n,
                                const py::sequence& s) {
        return is_on_structure(r, to_matrix(t), to_matrix(n), to_matrix(s));
    });
    m.def(
        "hierarchy",
        [](const Representation& r, const py::sequence& t, const py::sequence& n, const py::sequence& s,
           unsigned kmax) {
            py::list out;
            for (const auto& tk : hierarchy(r, to_matrix(t), to_matrix(n), to_matrix(s), kmax).t)
                out.append(from_matrix(tk));
            return out;
        },
        py::arg("rep"), py::arg("t"), py::arg("n"), py::arg("s"), py::arg("kmax") = 3);
    m.def("is_pn_structure", [](const LieAlgebra& g, const py::sequence& r, const py::sequence& n) {
        return is_pn_structure(g, to_bivector(r), to_matrix(n));
    });
    m.def("mc_check", [](const Representation& r, const py::sequence& t, const py::sequence& omega) {
        return mc_check(twilled_from_o(r, to_matrix(t)), to_matrix(omega));
    });
    m.def("strong_mc_check", [](const Representation& r, const py::sequence& t, const py::sequence& omega) {
        return strong_mc_check(twilled_from_o(r, to_matrix(t)), to_matrix(omega));
    });
    m.def("on_from_strong_mc", [](const Representation& r, const py::sequence& t, const py::sequence& omega) {
        ONStructure on = on_from_strong_mc(r, to_matrix(t), to_matrix(omega));
        return py::make_tuple(from_matrix(on.t), from_matrix(on.n), from_matrix(on.s));
    });
    m.def("is_gcs", [](const Representation& r, const py::sequence& n, const py::sequence& t,
                       const py::sequence& sigma, const py::sequence& s) {
        return gcs_check_direct(r, to_matrix(n), to_matrix(t), to_matrix(sigma), to_matrix(s)).ok();
    });
    m.def("gcs_first_failure", [](const Representation& r, const py::sequence& n, const py::sequence& t,
                                  const py::sequence& sigma, const py::sequence& s) {
        return gcs_check_components(r, to_matrix(n), to_matrix(t), to_matrix(sigma), to_matrix(s)).first_failure();
    });
    m.def("is_complex_structure",
          [](const LieAlgebra& g, const py::sequence& i) { return is_complex_structure(g, to_matrix(i)); });
    m.def("is_holomorphic_r", [](const LieAlgebra& g, const py::sequence& j, const py::sequence& rr,
                                 const py::sequence& ri) {
        return is_holomorphic_r(g, to_matrix(j), to_bivector(rr), to_bivector(ri));
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line front end; returns (exit code, stdout, stderr).");
    m.def(
        "validate_text",
        [](const std::string& text, unsigned threads) {
            Workspace ws;
            ws.load_text(text, "<python>");
            ws.resolve_references();
            py::list out;
            for (const auto& v : validate_all(ws, threads)) out.append(json_to_py(v.to_json()));
            return out;
        },
        py::arg("text"), py::arg("threads") = 1);
}
