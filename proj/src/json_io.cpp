#include "liemod/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace liemod {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::Parse, where + ": " + what);
}

std::size_t index_from_json(const Json& j, std::size_t bound, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        parse_fail(where, "expected a non-negative index");
    auto i = j.get<std::size_t>();
    if (i >= bound)
        throw Error(ErrorKind::DimensionMismatch, where + ": index " + std::to_string(i) + " out of range", {i});
    return i;
}

}  // namespace

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) parse_fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::size_t size_field(const Json& obj, const char* key, const std::string& where) {
    const Json& j = field(obj, key, where);
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        parse_fail(where, std::string("field '") + key + "' must be a non-negative integer");
    return j.get<std::size_t>();
}

std::string string_field(const Json& obj, const char* key, const std::string& where) {
    const Json& j = field(obj, key, where);
    if (!j.is_string()) parse_fail(where, std::string("field '") + key + "' must be a string");
    return j.get<std::string>();
}

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) parse_fail(where, "rationals are written as strings");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        parse_fail(where, e.what());
    }
}

Json to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_json(q));
    return out;
}

Vec vec_from_json(const Json& j, std::size_t len, const std::string& where) {
    if (!j.is_array()) parse_fail(where, "expected an array");
    if (j.size() != len)
        throw Error(ErrorKind::DimensionMismatch,
                    where + ": expected length " + std::to_string(len) + ", got " + std::to_string(j.size()));
    Vec v;
    v.reserve(len);
    for (const auto& x : j) v.push_back(rational_from_json(x, where));
    return v;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) parse_fail(where, "expected an array of rows");
    if (j.size() != rows)
        throw Error(ErrorKind::DimensionMismatch,
                    where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vec r = vec_from_json(j[i], cols, where + " row " + std::to_string(i));
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = std::move(r[c]);
    }
    return m;
}

Json tensor_to_json(std::size_t dim, const std::vector<Rational>& tensor, bool skew) {
    Json out = Json::array();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = skew ? i + 1 : 0; j < dim; ++j) {
            Vec v(tensor.begin() + static_cast<std::ptrdiff_t>((i * dim + j) * dim),
                  tensor.begin() + static_cast<std::ptrdiff_t>((i * dim + j + 1) * dim));
            if (!is_zero(v)) out.push_back(Json::array({i, j, to_json(v)}));
        }
    return out;
}

std::vector<Rational> tensor_from_json(const Json& j, std::size_t dim, bool skew, const std::string& where) {
    if (!j.is_array()) parse_fail(where, "expected an array of [i, j, [coeffs]] entries");
    std::vector<Rational> t(dim * dim * dim);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) parse_fail(where, "entries are [i, j, [coeffs]]");
        std::size_t a = index_from_json(e[0], dim, where);
        std::size_t b = index_from_json(e[1], dim, where);
        if (skew && a >= b) parse_fail(where, "bracket entries need i < j");
        Vec v = vec_from_json(e[2], dim, where);
        for (std::size_t k = 0; k < dim; ++k) {
            t[(a * dim + b) * dim + k] = v[k];
            if (skew) t[(b * dim + a) * dim + k] = -v[k];
        }
    }
    return t;
}

Json algebra_to_json(const LieAlgebra& g) {
    Json out;
    out["kind"] = "lie-algebra";
    out["dim"] = g.dim();
    out["brackets"] = tensor_to_json(g.dim(), g.tensor(), true);
    if (!g.names().empty()) out["names"] = g.names();
    return out;
}

LieAlgebra algebra_from_json(const Json& j, const std::string& where) {
    std::size_t dim = size_field(j, "dim", where);
    auto t = tensor_from_json(field(j, "brackets", where), dim, true, where + " brackets");
    std::vector<std::string> names;
    if (auto it = j.find("names"); it != j.end()) {
        if (!it->is_array() || it->size() != dim) parse_fail(where, "names must list one string per basis vector");
        for (const auto& n : *it) {
            if (!n.is_string()) parse_fail(where, "names must be strings");
            names.push_back(n.get<std::string>());
        }
    }
    return LieAlgebra::create(dim, std::move(t), std::move(names));
}

Json rep_to_json(const Representation& rep, const std::string& algebra_ref) {
    Json out;
    out["kind"] = "representation";
    out["algebra_ref"] = algebra_ref;
    out["dim"] = rep.dim();
    Json acts = Json::array();
    for (const auto& a : rep.actions()) acts.push_back(to_json(a));
    out["actions"] = std::move(acts);
    return out;
}

Json subspace_to_json(const Subspace& s) {
    Json out;
    out["kind"] = "subspace";
    out["ambient"] = s.ambient();
    Json basis = Json::array();
    for (const auto& v : s.basis()) basis.push_back(to_json(v));
    out["basis"] = std::move(basis);
    return out;
}

Subspace subspace_from_json(const Json& j, const std::string& where) {
    std::size_t ambient = size_field(j, "ambient", where);
    const Json& b = field(j, "basis", where);
    if (!b.is_array()) parse_fail(where, "basis must be an array of vectors");
    std::vector<Vec> vs;
    for (const auto& v : b) vs.push_back(vec_from_json(v, ambient, where + " basis"));
    return Subspace::from_basis(ambient, std::move(vs));
}

Json bivector_to_json(const Bivector& r) {
    Json out;
    out["kind"] = "bivector";
    out["dim"] = r.dim();
    Json entries = Json::array();
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = i + 1; j < r.dim(); ++j)
            if (!r(i, j).is_zero()) entries.push_back(Json::array({i, j, to_json(r(i, j))}));
    out["entries"] = std::move(entries);
    return out;
}

Bivector bivector_from_json(const Json& j, const std::string& where) {
    std::size_t dim = size_field(j, "dim", where);
    const Json& e = field(j, "entries", where);
    if (!e.is_array()) parse_fail(where, "entries must be an array");
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
    for (const auto& x : e) {
        if (!x.is_array() || x.size() != 3) parse_fail(where, "entries are [i, j, \"p/q\"]");
        std::size_t a = index_from_json(x[0], dim, where);
        std::size_t b = index_from_json(x[1], dim, where);
        if (a >= b) parse_fail(where, "bivector entries need i < j");
        entries.emplace_back(a, b, rational_from_json(x[2], where));
    }
    return Bivector::from_entries(dim, entries);
}

Json cochain_to_json(const Cochain& c) {
    Json out;
    out["kind"] = "cochain";
    out["degree"] = c.degree();
    out["source_dim"] = c.source_dim();
    out["target_dim"] = c.target_dim();
    Json values = Json::array();
    for (std::size_t r = 0; r < c.size(); ++r)
        if (!is_zero(c.value(r))) values.push_back(Json::array({c.tuple(r), to_json(c.value(r))}));
    out["values"] = std::move(values);
    return out;
}

Cochain cochain_from_json(const Json& j, const std::string& where) {
    std::size_t degree = size_field(j, "degree", where);
    std::size_t src = size_field(j, "source_dim", where);
    std::size_t tgt = size_field(j, "target_dim", where);
    if (degree > src && degree > 0) parse_fail(where, "degree exceeds source_dim");
    Cochain c(degree, src, tgt);
    const Json& values = field(j, "values", where);
    if (!values.is_array()) parse_fail(where, "values must be an array");
    for (const auto& x : values) {
        if (!x.is_array() || x.size() != 2 || !x[0].is_array())
            parse_fail(where, "values are [[indices...], [vector...]]");
        std::vector<std::size_t> idx;
        for (const auto& i : x[0]) idx.push_back(index_from_json(i, src, where));
        if (idx.size() != degree) parse_fail(where, "index tuple length differs from degree");
        Vec v = vec_from_json(x[1], tgt, where);
        // any order is accepted; the stored value is for the sorted tuple
        bool odd = false;
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                if (idx[a] == idx[b]) parse_fail(where, "repeated index in cochain tuple");
                if (idx[a] > idx[b]) odd = !odd;
            }
        std::sort(idx.begin(), idx.end());
        c.set(idx, odd ? -v : v);
    }
    return c;
}

Json pre_lie_to_json(const PreLieProduct& p) {
    Json out;
    out["kind"] = "pre-lie";
    out["dim"] = p.dim();
    out["products"] = tensor_to_json(p.dim(), p.tensor(), false);
    return out;
}

Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
}

}  // namespace liemod
