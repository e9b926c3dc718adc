#include <map>

#include "liemod/cli.hpp"
#include "liemod/gcsholo.hpp"

namespace liemod {

namespace {

using Derivation = Json (*)(const Workspace&, const std::vector<std::string>&, Json&, Json&);

void need_args(const std::vector<std::string>& args, std::size_t n, const char* usage) {
    if (args.size() != n) throw Error(ErrorKind::Parse, std::string("usage: derive ") + usage);
}

std::string ref_of(const Workspace& ws, const std::string& name, const char* key) {
    return string_field(ws.object(name), key, "object '" + name + "'");
}

Json o_json(const std::string& rep_ref, const Matrix& t) {
    Json o;
    o["kind"] = "o-operator";
    o["rep_ref"] = rep_ref;
    o["matrix"] = to_json(t);
    return o;
}

Json on_json(const std::string& rep_ref, const ONStructure& on) {
    Json o;
    o["kind"] = "on-structure";
    o["rep_ref"] = rep_ref;
    o["T"] = to_json(on.t);
    o["N"] = to_json(on.n);
    o["S"] = to_json(on.s);
    return o;
}

Json gcs_json(const std::string& rep_ref, const GCSModule& j) {
    Json o;
    o["kind"] = "gcs-module";
    o["rep_ref"] = rep_ref;
    o["N"] = to_json(j.n);
    o["T"] = to_json(j.t);
    o["sigma"] = to_json(j.sigma);
    o["S"] = to_json(j.s);
    return o;
}

Json induced(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "induced-lie <o-operator>");
    auto [r, t] = ws.o_operator(a[0]);
    std::string name = a[0] + "_induced";
    out[name] = algebra_to_json(induced_lie(r, t));
    summary["algebra"] = name;
    return out;
}

Json gauge(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 2, "gauge <o-operator> <B: map algebra->module or 1-cochain>");
    auto [r, t] = ws.o_operator(a[0]);
    Matrix b;
    if (ws.kind(a[1]) == "cochain") {
        Cochain c = ws.cochain(a[1]);
        if (c.degree() != 1 || c.source_dim() != r.algebra().dim() || c.target_dim() != r.dim())
            throw Error(ErrorKind::DimensionMismatch, "B must be a 1-cochain from the algebra to the module");
        b = c.as_matrix();
    } else {
        const Json& obj = ws.object(a[1]);
        if (obj.at("kind") != "map" || obj.value("source", "") != "algebra" || obj.value("target", "") != "module")
            throw Error(ErrorKind::Resolution, "object '" + a[1] + "' is not a map from the algebra to the module");
        b = ws.matrix(a[1], "matrix", r.dim(), r.algebra().dim());
    }
    Matrix tb = gauge_transform(r, t, b);
    std::string name = a[0] + "_gauge_" + a[1];
    out[name] = o_json(ref_of(ws, a[0], "rep_ref"), tb);
    summary["operator"] = name;
    summary["unchanged"] = tb == t;
    summary["iso_check"] = gauge_iso_check(r, t, b);
    return out;
}

Json reduce(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 4, "reduce <o-operator> <h> <E> <N>");
    auto [r, t] = ws.o_operator(a[0]);
    Reduction red = mr_reduce(r, t, ws.subspace(a[1]), ws.subspace(a[2]), ws.subspace(a[3]));
    std::string alg = a[0] + "_reduced_algebra", rep = a[0] + "_reduced_rep", op = a[0] + "_reduced";
    out[alg] = algebra_to_json(red.reduced_rep.algebra());
    out[rep] = rep_to_json(red.reduced_rep, alg);
    out[op] = o_json(rep, red.t_bar);
    summary["algebra"] = alg;
    summary["rep"] = rep;
    summary["operator"] = op;
    return out;
}

Json hierarchy_cmd(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 2, "hierarchy <K> <on-structure>");
    unsigned k = 0;
    try {
        k = static_cast<unsigned>(std::stoul(a[0]));
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "hierarchy depth must be a non-negative integer");
    }
    const std::string& on = a[1];
    if (ws.kind(on) != "on-structure") throw Error(ErrorKind::Resolution, "object '" + on + "' is not an on-structure");
    Representation r = ws.rep_of(on);
    std::size_t d = r.algebra().dim(), m = r.dim();
    Matrix t = ws.matrix(on, "T", d, m), n = ws.matrix(on, "N", d, d), s = ws.matrix(on, "S", m, m);
    Hierarchy h = hierarchy(r, t, n, s, k);
    std::string rep_ref = ref_of(ws, on, "rep_ref");
    Json ops = Json::array(), pairs = Json::array();
    for (std::size_t i = 0; i < h.t.size(); ++i) {
        std::string name = on + "_T" + std::to_string(i);
        out[name] = o_json(rep_ref, h.t[i]);
        ops.push_back(name);
    }
    for (std::size_t i = 0; i < h.t.size(); ++i)
        for (std::size_t j = i + 1; j < h.t.size(); ++j) {
            std::string name = on + "_T" + std::to_string(i) + "_T" + std::to_string(j);
            Json p;
            p["kind"] = "compatible-pair";
            p["rep_ref"] = rep_ref;
            p["T1"] = to_json(h.t[i]);
            p["T2"] = to_json(h.t[j]);
            out[name] = std::move(p);
            Json row;
            row["k"] = i;
            row["l"] = j;
            row["compatible"] = are_compatible(r, h.t[i], h.t[j]);
            pairs.push_back(std::move(row));
        }
    summary["operators"] = std::move(ops);
    summary["pairs"] = std::move(pairs);
    summary["identities"] = hierarchy_identities(r, t, n, s, k).ok;
    return out;
}

Json deformed(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "deformed-bracket <nijenhuis>");
    if (ws.kind(a[0]) != "nijenhuis") throw Error(ErrorKind::Resolution, "object '" + a[0] + "' is not a nijenhuis");
    LieAlgebra g = ws.algebra_of(a[0]);
    std::string name = a[0] + "_deformed";
    out[name] = algebra_to_json(deformed_bracket(g, ws.matrix(a[0], "matrix", g.dim(), g.dim())));
    summary["algebra"] = name;
    return out;
}

Json tilde(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "tilde-action <nijenhuis-structure>");
    if (ws.kind(a[0]) != "nijenhuis-structure")
        throw Error(ErrorKind::Resolution, "object '" + a[0] + "' is not a nijenhuis-structure");
    Representation r = ws.rep_of(a[0]);
    Matrix n = ws.matrix(a[0], "N", r.algebra().dim(), r.algebra().dim());
    Matrix s = ws.matrix(a[0], "S", r.dim(), r.dim());
    Representation tr = tilde_action(r, n, s);
    std::string alg = a[0] + "_deformed", rep = a[0] + "_tilde";
    out[alg] = algebra_to_json(tr.algebra());
    out[rep] = rep_to_json(tr, alg);
    summary["algebra"] = alg;
    summary["rep"] = rep;
    return out;
}

Json twilled_o(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "twilled-from-o <o-operator>");
    if (ws.kind(a[0]) != "o-operator") throw Error(ErrorKind::Resolution, "object '" + a[0] + "' is not an o-operator");
    auto [r, t] = ws.o_operator(a[0]);
    TwilledLieAlgebra tw = twilled_from_o(r, t);
    std::string total = a[0] + "_total", name = a[0] + "_twilled";
    out[total] = algebra_to_json(tw.total());
    Json o;
    o["kind"] = "twilled";
    o["o_ref"] = a[0];
    out[name] = std::move(o);
    summary["total"] = total;
    summary["twilled"] = name;
    return out;
}

Json on_from_mc(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "on-from-mc <mc-solution>");
    if (ws.kind(a[0]) != "mc-solution") throw Error(ErrorKind::Resolution, "object '" + a[0] + "' is not an mc-solution");
    std::string tw = ref_of(ws, a[0], "twilled_ref");
    auto oref = ws.twilled_o_ref(tw);
    if (!oref)
        throw Error(ErrorKind::PreconditionFailed, "twilled '" + tw + "' is not given by an O-operator (o_ref)");
    auto [r, t] = ws.o_operator(*oref);
    ONStructure on = on_from_strong_mc(r, t, ws.matrix(a[0], "omega", r.dim(), r.algebra().dim()));
    std::string name = a[0] + "_on";
    out[name] = on_json(ref_of(ws, *oref, "rep_ref"), on);
    summary["on_structure"] = name;
    return out;
}

Json mc_from_on(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "mc-from-on <on-structure>");
    if (ws.kind(a[0]) != "on-structure") throw Error(ErrorKind::Resolution, "object '" + a[0] + "' is not an on-structure");
    Representation r = ws.rep_of(a[0]);
    std::size_t d = r.algebra().dim(), m = r.dim();
    Matrix t = ws.matrix(a[0], "T", d, m);
    Matrix omega = strong_mc_from_on(r, t, ws.matrix(a[0], "N", d, d), ws.matrix(a[0], "S", m, m));
    std::string op = a[0] + "_T", tw = a[0] + "_twilled", mc = a[0] + "_mc";
    out[op] = o_json(ref_of(ws, a[0], "rep_ref"), t);
    Json tj;
    tj["kind"] = "twilled";
    tj["o_ref"] = op;
    out[tw] = std::move(tj);
    Json mj;
    mj["kind"] = "mc-solution";
    mj["twilled_ref"] = tw;
    mj["omega"] = to_json(omega);
    mj["strong"] = true;
    out[mc] = std::move(mj);
    summary["mc_solution"] = mc;
    return out;
}

Json on_from_pair(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "on-from-pair <compatible-pair>");
    if (ws.kind(a[0]) != "compatible-pair")
        throw Error(ErrorKind::Resolution, "object '" + a[0] + "' is not a compatible-pair");
    Representation r = ws.rep_of(a[0]);
    std::size_t d = r.algebra().dim(), m = r.dim();
    ONStructure on = on_from_compatible_pair(r, ws.matrix(a[0], "T1", d, m), ws.matrix(a[0], "T2", d, m));
    std::string name = a[0] + "_on";
    out[name] = on_json(ref_of(ws, a[0], "rep_ref"), on);
    summary["on_structure"] = name;
    return out;
}

Json gcs_from_o(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "gcs-from-o <o-operator>");
    auto [r, t] = ws.o_operator(a[0]);
    std::string name = a[0] + "_gcs";
    out[name] = gcs_json(ref_of(ws, a[0], "rep_ref"), gcs_from_invertible_o(r, t));
    summary["gcs"] = name;
    return out;
}

Json pre_lie_o(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "pre-lie-from-o <o-operator>");
    auto [r, t] = ws.o_operator(a[0]);
    std::string name = a[0] + "_pre_lie";
    out[name] = pre_lie_to_json(pre_lie_from_o(r, t));
    summary["pre_lie"] = name;
    return out;
}

Json opposite(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "opposite-gcs <gcs-module>");
    if (ws.kind(a[0]) != "gcs-module") throw Error(ErrorKind::Resolution, "object '" + a[0] + "' is not a gcs-module");
    Representation r = ws.rep_of(a[0]);
    std::size_t d = r.algebra().dim(), m = r.dim();
    GCSModule j{r, ws.matrix(a[0], "N", d, d), ws.matrix(a[0], "T", d, m), ws.matrix(a[0], "sigma", m, d),
                ws.matrix(a[0], "S", m, m)};
    std::string name = a[0] + "_opposite";
    out[name] = gcs_json(ref_of(ws, a[0], "rep_ref"), opposite_gcs(j));
    summary["gcs"] = name;
    return out;
}

Json semidirect_cmd(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "semidirect <representation>");
    std::string name = a[0] + "_semidirect";
    out[name] = algebra_to_json(semidirect(ws.rep(a[0])));
    summary["algebra"] = name;
    return out;
}

Json dual_cmd(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "dual <representation>");
    std::string name = a[0] + "_dual";
    out[name] = rep_to_json(dual_rep(ws.rep(a[0])), ref_of(ws, a[0], "algebra_ref"));
    summary["rep"] = name;
    return out;
}

Json adjoint_cmd(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "adjoint <lie-algebra>");
    std::string name = a[0] + "_adjoint";
    out[name] = rep_to_json(adjoint(ws.algebra(a[0])), a[0]);
    summary["rep"] = name;
    return out;
}

Json coadjoint_cmd(const Workspace& ws, const std::vector<std::string>& a, Json& out, Json& summary) {
    need_args(a, 1, "coadjoint <lie-algebra>");
    std::string name = a[0] + "_coadjoint";
    out[name] = rep_to_json(coadjoint(ws.algebra(a[0])), a[0]);
    summary["rep"] = name;
    return out;
}

const std::map<std::string, Derivation>& table() {
    static const std::map<std::string, Derivation> t = {
        {"induced-lie", induced},      {"gauge", gauge},
        {"reduce", reduce},            {"hierarchy", hierarchy_cmd},
        {"deformed-bracket", deformed}, {"tilde-action", tilde},
        {"twilled-from-o", twilled_o}, {"on-from-mc", on_from_mc},
        {"mc-from-on", mc_from_on},    {"on-from-pair", on_from_pair},
        {"gcs-from-o", gcs_from_o},    {"pre-lie-from-o", pre_lie_o},
        {"opposite-gcs", opposite},    {"semidirect", semidirect_cmd},
        {"dual", dual_cmd},            {"adjoint", adjoint_cmd},
        {"coadjoint", coadjoint_cmd},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& derive_kinds() {
    static const std::vector<std::string> k = [] {
        std::vector<std::string> out;
        for (const auto& [name, f] : table()) out.push_back(name);
        return out;
    }();
    return k;
}

Json derive(const Workspace& ws, const std::string& kind, const std::vector<std::string>& args, Json& summary) {
    auto it = table().find(kind);
    if (it == table().end()) throw Error(ErrorKind::Parse, "unknown derive kind '" + kind + "'");
    std::vector<std::string> roots;
    for (const auto& a : args)
        if (ws.has(a)) roots.push_back(a);
    Json fresh = Json::object();
    summary = Json::object();
    summary["kind"] = kind;
    it->second(ws, args, fresh, summary);
    Json doc = ws.document(roots);
    for (auto& [name, obj] : fresh.items()) {
        if (doc["objects"].contains(name))
            throw Error(ErrorKind::Parse, "derived object '" + name + "' clashes with an input object");
        doc["objects"][name] = obj;
    }
    revalidate(doc);
    return doc;
}

void revalidate(const Json& doc) {
    Workspace ws;
    ws.load_document(doc, "<derived>");
    ws.resolve_references();
    for (const auto& name : ws.names()) {
        Verdict v = ws.validate(name);
        if (v.status != Verdict::Status::Valid)
            throw Error(ErrorKind::OracleDisagreement, "derived document fails validation: " + v.to_text());
    }
}

}  // namespace liemod
