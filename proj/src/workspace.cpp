#include "liemod/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "liemod/gcsholo.hpp"

namespace liemod {

namespace {

struct Schema {
    const char* kind;
    std::vector<const char*> fields;
};

const std::vector<Schema>& schemas() {
    static const std::vector<Schema> s = {
        {"lie-algebra", {"dim", "brackets"}},
        {"representation", {"algebra_ref", "dim", "actions"}},
        {"subspace", {"ambient", "basis"}},
        {"map", {"rep_ref", "source", "target", "matrix"}},
        {"bivector", {"dim", "entries"}},
        {"cochain", {"degree", "source_dim", "target_dim", "values"}},
        {"o-operator", {"rep_ref", "matrix"}},
        {"r-matrix", {"algebra_ref", "r"}},
        {"compatible-pair", {"rep_ref", "T1", "T2"}},
        {"nijenhuis", {"algebra_ref", "matrix"}},
        {"nijenhuis-structure", {"rep_ref", "N", "S"}},
        {"on-structure", {"rep_ref", "T", "N", "S"}},
        {"pn-structure", {"algebra_ref", "r", "N"}},
        {"deformation", {"rep_ref", "bracket1", "action1"}},
        {"twilled", {}},
        {"mc-solution", {"twilled_ref", "omega"}},
        {"gcs-module", {"rep_ref", "N", "T", "sigma", "S"}},
        {"gcs-lie", {"algebra_ref", "N", "r", "sigma2"}},
        {"complex-structure", {"algebra_ref", "I"}},
        {"complex-pair", {"rep_ref", "I", "I_M"}},
        {"holo-o", {"rep_ref", "J", "J_M", "T_R", "T_I"}},
        {"holo-r", {"algebra_ref", "J", "r_R", "r_I"}},
        {"pre-lie", {"dim", "products"}},
    };
    return s;
}

const Schema* find_schema(const std::string& kind) {
    for (const auto& s : schemas())
        if (kind == s.kind) return &s;
    return nullptr;
}

// reference field -> kind it must name
const std::vector<std::pair<const char*, const char*>>& ref_fields() {
    static const std::vector<std::pair<const char*, const char*>> r = {
        {"algebra_ref", "lie-algebra"}, {"rep_ref", "representation"}, {"total_ref", "lie-algebra"},
        {"o_ref", "o-operator"},        {"twilled_ref", "twilled"},
    };
    return r;
}
const char* const kBivectorFields[] = {"r", "r_R", "r_I"};

[[noreturn]] void unresolved(const std::string& what) { throw Error(ErrorKind::Resolution, what); }

Vec flat(const Matrix& m) {
    Vec v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

bool is_error_kind(ErrorKind k) {
    return k == ErrorKind::Parse || k == ErrorKind::Resolution || k == ErrorKind::DimensionMismatch ||
           k == ErrorKind::OracleDisagreement;
}

Json witness_json(const std::vector<std::size_t>& w) {
    Json out = Json::array();
    for (auto i : w) out.push_back(i);
    return out;
}

Check r_matrix_verdict(const LieAlgebra& g, const Bivector& r) {
    if (lemma_r_equiv(g, r)) return Check::pass();
    auto sch = schouten_self(g, r);
    return Check::fail("[r, r] = 0", sch.begin()->first, {sch.begin()->second});
}

Check first_failing_pair(const std::vector<Vec>& residual, std::size_t dim, const std::string& clause) {
    auto tuples = increasing_tuples(dim, 2);
    for (std::size_t k = 0; k < residual.size(); ++k)
        if (!is_zero(residual[k])) return Check::fail(clause, tuples[k], residual[k]);
    return Check::pass();
}

Check gcs_verdict(const GCSComponentReport& rep) {
    int f = rep.first_failure();
    if (f < 0) return Check::pass();
    Check c = rep.identities[static_cast<std::size_t>(f)];
    c.clause = "identity " + std::to_string(f) + ": " + kGCSIdentityNames[static_cast<std::size_t>(f)];
    return c;
}

}  // namespace

const char* to_string(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::Valid: return "valid";
        case Verdict::Status::Invalid: return "invalid";
        case Verdict::Status::Error: return "error";
    }
    return "error";
}

Json Verdict::to_json() const {
    Json out;
    out["name"] = name;
    out["kind"] = kind;
    out["status"] = to_string(status);
    if (status == Status::Invalid && !check.clause.empty()) {
        out["clause"] = check.clause;
        out["witness"] = witness_json(check.witness);
        out["defect"] = liemod::to_json(check.defect);
    }
    if (!error.empty()) out["error"] = error;
    return out;
}

std::string Verdict::to_text() const {
    std::ostringstream os;
    os << name << " [" << kind << "] " << to_string(status);
    if (status == Status::Invalid && !check.clause.empty()) {
        os << ": " << check.clause << " at (";
        for (std::size_t i = 0; i < check.witness.size(); ++i) os << (i ? "," : "") << check.witness[i];
        os << ")";
        if (!check.defect.empty()) os << " defect " << check.defect;
    }
    if (!error.empty()) os << ": " << error;
    return os.str();
}

void Workspace::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    load_text(ss.str(), path);
}

void Workspace::load_text(const std::string& text, const std::string& source) {
    load_document(parse_json_text(text, source), source);
}

void Workspace::load_document(const Json& doc, const std::string& source) {
    if (!doc.is_object()) throw Error(ErrorKind::Parse, source + ": top level must be an object");
    auto it = doc.find("objects");
    if (it == doc.end() || !it->is_object())
        throw Error(ErrorKind::Parse, source + ": missing top-level 'objects' map");
    for (const auto& [name, obj] : it->items()) add(name, obj, source);
}

void Workspace::add(const std::string& name, Json object, const std::string& source) {
    std::string where = source + ": object '" + name + "'";
    if (objects_.count(name))
        throw Error(ErrorKind::Parse, where + " is already defined in " + sources_.at(name));
    std::string kind = string_field(object, "kind", where);
    const Schema* s = find_schema(kind);
    if (!s) throw Error(ErrorKind::Parse, where + ": unknown kind '" + kind + "'");
    for (const char* f : s->fields) field(object, f, where);
    if (kind == "twilled" && !object.contains("o_ref")) {
        field(object, "total_ref", where);
        field(object, "a_basis", where);
        field(object, "b_basis", where);
    }
    for (const auto& [key, target] : ref_fields()) {
        (void)target;
        if (object.contains(key)) string_field(object, key, where);
    }
    objects_.emplace(name, std::move(object));
    sources_.emplace(name, source);
}

void Workspace::resolve_references() const {
    for (const auto& [name, obj] : objects_) {
        for (const auto& [key, target] : ref_fields()) {
            auto it = obj.find(key);
            if (it == obj.end()) continue;
            std::string ref = it->get<std::string>();
            auto found = objects_.find(ref);
            if (found == objects_.end())
                unresolved("object '" + name + "': " + key + " names unknown object '" + ref + "'");
            if (found->second.at("kind") != target)
                unresolved("object '" + name + "': " + key + " '" + ref + "' is not a " + target);
        }
        for (const char* key : kBivectorFields) {
            auto it = obj.find(key);
            if (it == obj.end() || !it->is_string()) continue;
            std::string ref = it->get<std::string>();
            auto found = objects_.find(ref);
            if (found == objects_.end())
                unresolved("object '" + name + "': " + key + " names unknown object '" + ref + "'");
            if (found->second.at("kind") != "bivector")
                unresolved("object '" + name + "': " + key + " '" + ref + "' is not a bivector");
        }
    }
}

std::vector<std::string> Workspace::names() const {
    std::vector<std::string> out;
    for (const auto& [n, o] : objects_) out.push_back(n);
    return out;
}

const Json& Workspace::object(const std::string& name) const {
    auto it = objects_.find(name);
    if (it == objects_.end()) unresolved("unknown object '" + name + "'");
    return it->second;
}

std::string Workspace::kind(const std::string& name) const { return object(name).at("kind").get<std::string>(); }

std::vector<std::string> Workspace::references(const std::string& name) const {
    const Json& obj = object(name);
    std::vector<std::string> out;
    for (const auto& [key, target] : ref_fields())
        if (auto it = obj.find(key); it != obj.end()) out.push_back(it->get<std::string>());
    for (const char* key : kBivectorFields)
        if (auto it = obj.find(key); it != obj.end() && it->is_string()) out.push_back(it->get<std::string>());
    return out;
}

Json Workspace::document(const std::vector<std::string>& roots) const {
    std::set<std::string> seen;
    std::vector<std::string> stack(roots.begin(), roots.end());
    while (!stack.empty()) {
        std::string n = stack.back();
        stack.pop_back();
        if (!seen.insert(n).second) continue;
        for (auto& r : references(n)) stack.push_back(r);
    }
    Json objs = Json::object();
    for (const auto& n : seen) objs[n] = object(n);
    Json doc;
    doc["objects"] = std::move(objs);
    return doc;
}

namespace {

const Json& expect_kind(const Workspace& ws, const std::string& name, std::initializer_list<const char*> kinds) {
    const Json& obj = ws.object(name);
    std::string k = obj.at("kind").get<std::string>();
    for (const char* want : kinds)
        if (k == want) return obj;
    std::string list;
    for (const char* want : kinds) list += (list.empty() ? "" : " or ") + std::string(want);
    unresolved("object '" + name + "' is a " + k + ", expected " + list);
}

}  // namespace

LieAlgebra Workspace::algebra(const std::string& name) const {
    return algebra_from_json(expect_kind(*this, name, {"lie-algebra"}), "object '" + name + "'");
}

Representation Workspace::rep(const std::string& name) const {
    const Json& obj = expect_kind(*this, name, {"representation"});
    std::string where = "object '" + name + "'";
    LieAlgebra g = algebra(string_field(obj, "algebra_ref", where));
    std::size_t dim = size_field(obj, "dim", where);
    const Json& acts = field(obj, "actions", where);
    if (!acts.is_array() || acts.size() != g.dim())
        throw Error(ErrorKind::DimensionMismatch, where + ": one action matrix per basis vector of the algebra");
    std::vector<Matrix> a;
    for (std::size_t i = 0; i < g.dim(); ++i)
        a.push_back(matrix_from_json(acts[i], dim, dim, where + " action " + std::to_string(i)));
    return Representation::create(std::move(g), dim, std::move(a));
}

Subspace Workspace::subspace(const std::string& name) const {
    return subspace_from_json(expect_kind(*this, name, {"subspace"}), "object '" + name + "'");
}

Bivector Workspace::bivector(const std::string& name) const {
    return bivector_from_json(expect_kind(*this, name, {"bivector"}), "object '" + name + "'");
}

Cochain Workspace::cochain(const std::string& name) const {
    return cochain_from_json(expect_kind(*this, name, {"cochain"}), "object '" + name + "'");
}

Representation Workspace::rep_of(const std::string& name) const {
    return rep(string_field(object(name), "rep_ref", "object '" + name + "'"));
}

LieAlgebra Workspace::algebra_of(const std::string& name) const {
    const Json& obj = object(name);
    if (obj.contains("algebra_ref")) return algebra(string_field(obj, "algebra_ref", "object '" + name + "'"));
    return rep_of(name).algebra();
}

Matrix Workspace::matrix(const std::string& name, const char* key, std::size_t rows, std::size_t cols) const {
    std::string where = "object '" + name + "' field " + key;
    return matrix_from_json(field(object(name), key, where), rows, cols, where);
}

Bivector Workspace::bivector_field(const std::string& name, const char* key, std::size_t dim) const {
    std::string where = "object '" + name + "' field " + key;
    const Json& f = field(object(name), key, where);
    Bivector r = f.is_string() ? bivector(f.get<std::string>()) : bivector_from_json(f, where);
    if (r.dim() != dim)
        throw Error(ErrorKind::DimensionMismatch, where + ": bivector dimension differs from the algebra");
    return r;
}

std::pair<Representation, Matrix> Workspace::o_operator(const std::string& name) const {
    const Json& obj = expect_kind(*this, name, {"o-operator", "map"});
    Representation r = rep_of(name);
    if (obj.at("kind") == "map") {
        std::string where = "object '" + name + "'";
        if (string_field(obj, "source", where) != "module" || string_field(obj, "target", where) != "algebra")
            unresolved(where + " is not a map from the module to the algebra");
    }
    Matrix t = matrix(name, "matrix", r.algebra().dim(), r.dim());
    return {std::move(r), std::move(t)};
}

TwilledLieAlgebra Workspace::twilled(const std::string& name) const {
    const Json& obj = expect_kind(*this, name, {"twilled"});
    std::string where = "object '" + name + "'";
    if (obj.contains("o_ref")) {
        auto [r, t] = o_operator(string_field(obj, "o_ref", where));
        return twilled_from_o(r, t);
    }
    LieAlgebra g = algebra(string_field(obj, "total_ref", where));
    auto basis = [&](const char* key) {
        const Json& b = field(obj, key, where);
        if (!b.is_array()) throw Error(ErrorKind::Parse, where + ": " + key + " must be an array of vectors");
        std::vector<Vec> vs;
        for (const auto& v : b) vs.push_back(vec_from_json(v, g.dim(), where + " " + key));
        return Subspace::from_basis(g.dim(), std::move(vs));
    };
    return twilled_new(g, basis("a_basis"), basis("b_basis"));
}

std::optional<std::string> Workspace::twilled_o_ref(const std::string& name) const {
    const Json& obj = expect_kind(*this, name, {"twilled"});
    if (!obj.contains("o_ref")) return std::nullopt;
    return obj.at("o_ref").get<std::string>();
}

PreLieProduct Workspace::pre_lie(const std::string& name) const {
    const Json& obj = expect_kind(*this, name, {"pre-lie"});
    std::string where = "object '" + name + "'";
    std::size_t dim = size_field(obj, "dim", where);
    return PreLieProduct::create(dim, tensor_from_json(field(obj, "products", where), dim, false, where + " products"));
}

namespace {

const std::map<std::string, std::vector<const char*>>& check_table() {
    static const std::map<std::string, std::vector<const char*>> t = {
        {"o-operator", {"o-operator", "map"}},
        {"r-matrix", {"r-matrix"}},
        {"compatible", {"compatible-pair", "o-operator", "map"}},
        {"nijenhuis", {"nijenhuis"}},
        {"nijenhuis-structure", {"nijenhuis-structure"}},
        {"on", {"on-structure"}},
        {"pn", {"pn-structure"}},
        {"twilled", {"twilled"}},
        {"mc", {"mc-solution"}},
        {"twilled-mc", {"mc-solution"}},
        {"strong-mc", {"mc-solution"}},
        {"gcs", {"gcs-module"}},
        {"gcs-lie", {"gcs-lie"}},
        {"complex", {"complex-structure", "complex-pair"}},
        {"holo-o", {"holo-o"}},
        {"holo-r", {"holo-r"}},
        {"pre-lie", {"pre-lie"}},
    };
    return t;
}

// The defining property of an object, as a Check. Throws liemod::Error.
Check evaluate(const Workspace& ws, const std::string& prop, const std::vector<std::string>& args) {
    const std::string& name = args.front();
    std::string kind = ws.kind(name);
    if (prop == "lie-algebra") {
        ws.algebra(name);
        return Check::pass();
    }
    if (prop == "representation") {
        ws.rep(name);
        return Check::pass();
    }
    if (prop == "shape") {
        if (kind == "subspace") ws.subspace(name);
        if (kind == "bivector") ws.bivector(name);
        if (kind == "cochain") ws.cochain(name);
        if (kind == "map") {
            Representation r = ws.rep_of(name);
            const Json& obj = ws.object(name);
            std::string where = "object '" + name + "'";
            auto src = role_from_string(string_field(obj, "source", where));
            auto tgt = role_from_string(string_field(obj, "target", where));
            if (!src || !tgt) throw Error(ErrorKind::Parse, where + ": unknown source or target role");
            ws.matrix(name, "matrix", role_dim(r, *tgt), role_dim(r, *src));
        }
        return Check::pass();
    }
    if (prop == "o-operator") {
        auto [r, t] = ws.o_operator(name);
        Check c = o_check(r, t);
        if (c.ok != graph_check(r, t))
            throw Error(ErrorKind::OracleDisagreement, "o_check and graph_check differ on '" + name + "'");
        return c;
    }
    if (prop == "r-matrix") {
        LieAlgebra g = ws.algebra_of(name);
        return r_matrix_verdict(g, ws.bivector_field(name, "r", g.dim()));
    }
    if (prop == "compatible") {
        Representation r;
        Matrix t1, t2;
        if (kind == "compatible-pair") {
            r = ws.rep_of(name);
            t1 = ws.matrix(name, "T1", r.algebra().dim(), r.dim());
            t2 = ws.matrix(name, "T2", r.algebra().dim(), r.dim());
        } else {
            if (args.size() != 2) throw Error(ErrorKind::Parse, "check compatible takes a pair object or two operators");
            auto a = ws.o_operator(args[0]);
            auto b = ws.o_operator(args[1]);
            if (!(a.first == b.first))
                throw Error(ErrorKind::DimensionMismatch, "the two operators act on different modules");
            r = a.first;
            t1 = a.second;
            t2 = b.second;
        }
        for (const Matrix* t : {&t1, &t2}) {
            Check c = o_check(r, *t);
            if (!c) return Check::fail("T" + std::string(t == &t1 ? "1" : "2") + " O-operator: " + c.clause, c.witness, c.defect);
        }
        if (are_compatible(r, t1, t2)) return Check::pass();
        return first_failing_pair(compatibility_defect(r, t1, t2), r.dim(), "T1 + T2 mixed identity");
    }
    if (prop == "nijenhuis") {
        LieAlgebra g = ws.algebra_of(name);
        return nijenhuis_check(g, ws.matrix(name, "matrix", g.dim(), g.dim()));
    }
    if (prop == "nijenhuis-structure") {
        Representation r = ws.rep_of(name);
        Matrix n = ws.matrix(name, "N", r.algebra().dim(), r.algebra().dim());
        Matrix s = ws.matrix(name, "S", r.dim(), r.dim());
        if (is_nijenhuis_structure(r, n, s)) return Check::pass();
        Check c = nijenhuis_check(r.algebra(), n);
        if (!c) return c;
        c = nijenhuis_structure_identity(r, n, s);
        if (!c) return c;
        return Check::fail("S Nijenhuis", {}, {});
    }
    if (prop == "on") {
        Representation r = ws.rep_of(name);
        std::size_t d = r.algebra().dim(), m = r.dim();
        ONReport rep = on_report(r, ws.matrix(name, "T", d, m), ws.matrix(name, "N", d, d), ws.matrix(name, "S", m, m));
        const Check* f = rep.first_failure();
        return f ? *f : Check::pass();
    }
    if (prop == "pn") {
        LieAlgebra g = ws.algebra_of(name);
        Bivector r = ws.bivector_field(name, "r", g.dim());
        Matrix n = ws.matrix(name, "N", g.dim(), g.dim());
        Check c = pn_direct(g, r, n);
        if (c.ok != is_pn_structure(g, r, n))
            throw Error(ErrorKind::OracleDisagreement, "PN verdicts differ on '" + name + "'");
        return c;
    }
    if (prop == "deformation") {
        Representation r = ws.rep_of(name);
        const Json& obj = ws.object(name);
        std::string where = "object '" + name + "'";
        std::size_t d = r.algebra().dim();
        DeformationData dd;
        dd.bracket1 = tensor_from_json(field(obj, "bracket1", where), d, true, where + " bracket1");
        const Json& acts = field(obj, "action1", where);
        if (!acts.is_array() || acts.size() != d)
            throw Error(ErrorKind::DimensionMismatch, where + ": action1 needs one matrix per basis vector");
        for (std::size_t i = 0; i < d; ++i) dd.action1.push_back(matrix_from_json(acts[i], r.dim(), r.dim(), where));
        return is_infinitesimal_deformation(r, dd);
    }
    if (prop == "twilled") {
        ws.twilled(name);
        return Check::pass();
    }
    if (prop == "mc" || prop == "twilled-mc" || prop == "strong-mc") {
        std::string tw_name = string_field(ws.object(name), "twilled_ref", "object '" + name + "'");
        TwilledLieAlgebra tw = ws.twilled(tw_name);
        MCReport rep = mc_report(tw, ws.matrix(name, "omega", tw.dim_b(), tw.dim_a()));
        if (!rep.mc) return rep.mc;
        if (prop == "strong-mc" && !rep.cocycle) return rep.cocycle;
        return Check::pass();
    }
    if (prop == "gcs") {
        Representation r = ws.rep_of(name);
        std::size_t d = r.algebra().dim(), m = r.dim();
        return gcs_verdict(gcs_check_components(r, ws.matrix(name, "N", d, d), ws.matrix(name, "T", d, m),
                                                ws.matrix(name, "sigma", m, d), ws.matrix(name, "S", m, m)));
    }
    if (prop == "gcs-lie") {
        LieAlgebra g = ws.algebra_of(name);
        std::size_t d = g.dim();
        Matrix n = ws.matrix(name, "N", d, d);
        Bivector r = ws.bivector_field(name, "r", d);
        Matrix s2 = ws.matrix(name, "sigma2", d, d);
        if (gcs_lie_check(g, n, r, s2)) return Check::pass();
        return gcs_verdict(gcs_components_raw(coadjoint(g), n, r_sharp(r), sigma_flat(s2), n.transpose()));
    }
    if (prop == "complex") {
        if (kind == "complex-structure") {
            LieAlgebra g = ws.algebra_of(name);
            return complex_structure_check(g, ws.matrix(name, "I", g.dim(), g.dim()));
        }
        Representation r = ws.rep_of(name);
        Matrix i = ws.matrix(name, "I", r.algebra().dim(), r.algebra().dim());
        Matrix im = ws.matrix(name, "I_M", r.dim(), r.dim());
        Check c = module_complex_pair_check(r, i, im);
        if (c.ok != is_module_complex_pair(r, i, im))
            throw Error(ErrorKind::OracleDisagreement, "complex pair verdicts differ on '" + name + "'");
        return c;
    }
    if (prop == "holo-o") {
        Representation r = ws.rep_of(name);
        std::size_t d = r.algebra().dim(), m = r.dim();
        return holomorphic_o_check(r, ws.matrix(name, "J", d, d), ws.matrix(name, "J_M", m, m),
                                   ws.matrix(name, "T_R", d, m), ws.matrix(name, "T_I", d, m));
    }
    if (prop == "holo-r") {
        LieAlgebra g = ws.algebra_of(name);
        std::size_t d = g.dim();
        Matrix j = ws.matrix(name, "J", d, d);
        Bivector rr = ws.bivector_field(name, "r_R", d);
        Bivector ri = ws.bivector_field(name, "r_I", d);
        if (is_holomorphic_r(g, j, rr, ri)) return Check::pass();
        Check c = pn_direct(g, ri, j);
        if (!c) {
            c.clause = "(r_I, J) Poisson-Nijenhuis: " + c.clause;
            return c;
        }
        Matrix def = r_sharp(rr) - r_sharp(ri) * j.transpose();
        return Check::fail("r_R# = r_I# J^T", {}, flat(def));
    }
    if (prop == "pre-lie") {
        const Json& obj = ws.object(name);
        std::string where = "object '" + name + "'";
        std::size_t dim = size_field(obj, "dim", where);
        return pre_lie_check(dim, tensor_from_json(field(obj, "products", where), dim, false, where + " products"));
    }
    throw Error(ErrorKind::Parse, "unknown check kind '" + prop + "'");
}

std::string default_property(const Workspace& ws, const std::string& name) {
    std::string k = ws.kind(name);
    if (k == "lie-algebra" || k == "representation" || k == "deformation" || k == "twilled" ||
        k == "nijenhuis" || k == "nijenhuis-structure" || k == "r-matrix" || k == "gcs-lie" || k == "holo-o" ||
        k == "holo-r" || k == "pre-lie" || k == "o-operator")
        return k;
    if (k == "subspace" || k == "bivector" || k == "cochain" || k == "map") return "shape";
    if (k == "compatible-pair") return "compatible";
    if (k == "on-structure") return "on";
    if (k == "pn-structure") return "pn";
    if (k == "gcs-module") return "gcs";
    if (k == "complex-structure" || k == "complex-pair") return "complex";
    if (k == "mc-solution") {
        auto it = ws.object(name).find("strong");
        return it != ws.object(name).end() && it->is_boolean() && it->get<bool>() ? "strong-mc" : "mc";
    }
    throw Error(ErrorKind::Parse, "object '" + name + "' has unknown kind '" + k + "'");
}

Verdict run(const Workspace& ws, const std::string& prop, const std::vector<std::string>& args) {
    Verdict v;
    v.name = args.empty() ? std::string() : args.front();
    try {
        if (args.empty()) throw Error(ErrorKind::Parse, "no object named");
        v.kind = ws.kind(v.name);
        v.check = evaluate(ws, prop, args);
        v.status = v.check.ok ? Verdict::Status::Valid : Verdict::Status::Invalid;
    } catch (const Error& e) {
        v.status = is_error_kind(e.kind()) ? Verdict::Status::Error : Verdict::Status::Invalid;
        v.error = e.what();
        if (v.status == Verdict::Status::Invalid) v.check = Check::fail(to_string(e.kind()), e.witness(), e.defect());
    } catch (const std::exception& e) {
        v.status = Verdict::Status::Error;
        v.error = e.what();
    }
    return v;
}

}  // namespace

Verdict Workspace::validate(const std::string& name) const {
    std::string prop;
    try {
        prop = default_property(*this, name);
    } catch (const Error& e) {
        Verdict v;
        v.name = name;
        v.status = Verdict::Status::Error;
        v.error = e.what();
        return v;
    }
    return run(*this, prop, {name});
}

Verdict Workspace::check(const std::string& check_kind, const std::vector<std::string>& args) const {
    auto it = check_table().find(check_kind);
    Verdict v;
    v.name = args.empty() ? std::string() : args.front();
    v.status = Verdict::Status::Error;
    if (it == check_table().end()) {
        v.error = "unknown check kind '" + check_kind + "'";
        return v;
    }
    try {
        for (const auto& a : args) {
            std::string k = kind(a);
            bool ok = std::any_of(it->second.begin(), it->second.end(), [&](const char* want) { return k == want; });
            if (!ok) unresolved("object '" + a + "' is a " + k + "; check " + check_kind + " does not apply");
        }
    } catch (const Error& e) {
        v.error = e.what();
        return v;
    }
    return run(*this, check_kind, args);
}

const std::vector<std::string>& check_kinds() {
    static const std::vector<std::string> k = [] {
        std::vector<std::string> out;
        for (const auto& [name, kinds] : check_table()) out.push_back(name);
        return out;
    }();
    return k;
}

}  // namespace liemod
