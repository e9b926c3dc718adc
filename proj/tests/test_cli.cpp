#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "liemod/cli.hpp"
#include "liemod/fixture_bundle.hpp"
#include "liemod/fixtures.hpp"

using namespace liemod;

namespace {

const std::string kData = LIEMOD_DATA_DIR;
const std::string kFixtures = kData + "/fixtures.json";
const std::string kInvalid = kData + "/invalid_examples.json";

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("liemod_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string p = temp_path(name);
    std::ofstream(p) << text;
    return p;
}

Workspace fixtures_ws() {
    Workspace ws;
    ws.load_file(kFixtures);
    ws.resolve_references();
    return ws;
}

}  // namespace

TEST(Bundle, ShippedFileMatchesGenerator) {
    std::ifstream in(kFixtures);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), fixture_bundle().dump(2) + "\n");
}

TEST(Bundle, EveryObjectValid) {
    Workspace ws = fixtures_ws();
    for (const auto& v : validate_all(ws, 4)) EXPECT_EQ(v.status, Verdict::Status::Valid) << v.to_text();
    CliRun r = cli({"validate", "--input", kFixtures});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Bundle, CoversEveryStructureKind) {
    Workspace ws = fixtures_ws();
    std::set<std::string> kinds;
    for (const auto& n : ws.names()) kinds.insert(ws.kind(n));
    for (const char* k : {"lie-algebra", "representation", "subspace", "map", "bivector", "cochain", "o-operator",
                          "r-matrix", "compatible-pair", "nijenhuis", "nijenhuis-structure", "on-structure",
                          "pn-structure", "deformation", "twilled", "mc-solution", "gcs-module", "gcs-lie",
                          "complex-structure", "complex-pair", "holo-o", "holo-r", "pre-lie"})
        EXPECT_TRUE(kinds.count(k)) << k;
    for (const auto& [name, g] : fixtures::algebras()) {
        EXPECT_EQ(ws.algebra(name), g);
        for (const char* suffix : {"_adj", "_coadj", "_triv"}) EXPECT_TRUE(ws.has(name + suffix));
    }
}

TEST(Validate, BrokenJacobiNamesTriple) {
    // independent expansion: [e1,e2] = e2, [e2,e3] = e1
    // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = [e1,e1] + 0 + [e3,e2] = -e1
    Workspace ws;
    ws.load_file(kInvalid);
    ws.resolve_references();
    Verdict v = ws.validate("broken_jacobi");
    EXPECT_EQ(v.status, Verdict::Status::Invalid);
    EXPECT_EQ(v.check.clause, "JacobiViolation");
    EXPECT_EQ(v.check.witness, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(v.check.defect, (Vec{-1, 0, 0}));
    CliRun r = cli({"validate", kInvalid});
    EXPECT_EQ(r.code, 1);
}

TEST(Validate, DanglingReference) {
    std::string p = write_temp("dangling.json",
                               R"({"objects": {"T": {"kind": "o-operator", "rep_ref": "nowhere", "matrix": [["1"]]}}})");
    CliRun r = cli({"validate", p});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("ResolutionError"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("nowhere"), std::string::npos);
}

TEST(Validate, ParseErrorHasLineAndColumn) {
    std::string p = write_temp("broken.json", "{\n  \"objects\": {\n    \"a\": [1, 2,\n}");
    CliRun r = cli({"validate", p});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("ParseError"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find(p + ":4:"), std::string::npos) << r.err;
}

TEST(Validate, SchemaErrors) {
    Workspace ws;
    EXPECT_THROW(ws.load_text(R"({"objects": {"x": {"kind": "nonsense"}}})", "t"), Error);
    EXPECT_THROW(ws.load_text(R"({"objects": {"x": {"kind": "lie-algebra", "dim": 2}}})", "t"), Error);
    EXPECT_THROW(ws.load_text(R"({"things": {}})", "t"), Error);
    ws.load_text(R"({"objects": {"x": {"kind": "lie-algebra", "dim": 1, "brackets": []}}})", "t");
    EXPECT_THROW(ws.load_text(R"({"objects": {"x": {"kind": "lie-algebra", "dim": 1, "brackets": []}}})", "u"), Error);
    // a bracket with i > j is malformed
    Workspace w2;
    w2.load_text(R"({"objects": {"g": {"kind": "lie-algebra", "dim": 2, "brackets": [[1, 0, ["1", "0"]]]}}})", "t");
    EXPECT_EQ(w2.validate("g").status, Verdict::Status::Error);
}

TEST(Check, ExitCodes) {
    EXPECT_EQ(cli({"check", "o-operator", "aff1_T", "--input", kFixtures}).code, 0);
    CliRun bad = cli({"check", "gcs", "bad_J", "--input", kInvalid, "--format", "text"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("identity 1: N^2 + T sigma = -id"), std::string::npos) << bad.out;
    EXPECT_EQ(cli({"check", "mc", "missing_name", "--input", kFixtures}).code, 2);
    // kind mismatch is an error, not a verdict
    EXPECT_EQ(cli({"check", "gcs", "aff1_T", "--input", kFixtures}).code, 2);
    EXPECT_EQ(cli({"check", "bogus", "aff1_T", "--input", kFixtures}).code, 2);
    EXPECT_EQ(cli({"check", "o-operator", "bad_T", "--input", kInvalid}).code, 1);
    EXPECT_EQ(cli({"check", "r-matrix", "bad_r", "--input", kInvalid}).code, 1);
}

TEST(Check, BadJDefectMatchesHandComputation) {
    // N = sigma = 0 leaves N^2 + T sigma + id = id
    Workspace ws;
    ws.load_file(kInvalid);
    Verdict v = ws.check("gcs", {"bad_J"});
    ASSERT_EQ(v.status, Verdict::Status::Invalid);
    EXPECT_EQ(v.check.defect, (Vec{1, 0, 0, 1}));
}

TEST(Check, EveryKindOnFixtures) {
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
        {"o-operator", {"aff1_coadj_T"}}, {"r-matrix", {"h3_rmat"}},
        {"compatible", {"aff1_coadj_pair"}}, {"nijenhuis", {"h3_N"}},
        {"nijenhuis-structure", {"aff1_coadj_NS"}}, {"on", {"onstruct_fix"}},
        {"pn", {"h3_pn"}}, {"twilled", {"h3_twilled"}},
        {"mc", {"h3_mc"}}, {"twilled-mc", {"h3_mc"}},
        {"strong-mc", {"aff1_coadj_mc"}}, {"gcs", {"aff1_coadj_gcs"}},
        {"gcs-lie", {"ab2_gcs_lie_r"}}, {"complex", {"aff1_I"}},
        {"complex", {"ab2_triv_pair"}}, {"holo-o", {"ab2_triv_holo"}},
        {"holo-r", {"ab4_holo_r"}}, {"pre-lie", {"aff1_pre_lie"}},
        {"compatible", {"aff1_coadj_T", "aff1_coadj_T"}},
    };
    Workspace ws = fixtures_ws();
    for (const auto& [kind, args] : cases) {
        Verdict v = ws.check(kind, args);
        EXPECT_EQ(v.status, Verdict::Status::Valid) << kind << ": " << v.to_text();
    }
}

TEST(Derive, EveryKindRoundTrips) {
    const std::vector<std::vector<std::string>> cases = {
        {"induced-lie", "aff1_T"},
        {"gauge", "aff1_T", "aff1_B0"},
        {"gauge", "aff1_coadj_T", "aff1_B"},
        {"reduce", "h3_coadj_T", "h3_h", "h3_E", "h3_Nsub"},
        {"hierarchy", "3", "onstruct_fix"},
        {"deformed-bracket", "h3_N"},
        {"tilde-action", "aff1_coadj_NS"},
        {"twilled-from-o", "aff1_coadj_T"},
        {"on-from-mc", "aff1_coadj_mc"},
        {"mc-from-on", "onstruct_fix"},
        {"on-from-pair", "aff1_coadj_pair"},
        {"gcs-from-o", "aff1_coadj_T"},
        {"pre-lie-from-o", "aff1_T"},
        {"opposite-gcs", "aff1_coadj_gcs"},
        {"semidirect", "h3_adj"},
        {"dual", "aff1_adj"},
        {"adjoint", "sl2"},
        {"coadjoint", "sl2"},
    };
    ASSERT_EQ(derive_kinds().size(), 17u);
    for (const auto& c : cases) {
        std::string out = temp_path("derive.json");
        std::vector<std::string> args = {"derive"};
        args.insert(args.end(), c.begin(), c.end());
        args.insert(args.end(), {"--input", kFixtures, "--output", out});
        CliRun r = cli(args);
        ASSERT_EQ(r.code, 0) << c[0] << ": " << r.err;
        CliRun v = cli({"validate", out});
        EXPECT_EQ(v.code, 0) << c[0] << ": " << v.out << v.err;
    }
}

TEST(Derive, GaugeByZeroKeepsT) {
    Workspace ws = fixtures_ws();
    Json summary;
    Json doc = derive(ws, "gauge", {"aff1_T", "aff1_B0"}, summary);
    EXPECT_TRUE(summary["unchanged"].get<bool>());
    EXPECT_EQ(doc["objects"]["aff1_T_gauge_aff1_B0"]["matrix"], ws.object("aff1_T")["matrix"]);
}

TEST(Derive, HierarchyReportsSixPairs) {
    Workspace ws = fixtures_ws();
    Json summary;
    Json doc = derive(ws, "hierarchy", {"3", "onstruct_fix"}, summary);
    ASSERT_EQ(summary["operators"].size(), 4u);
    ASSERT_EQ(summary["pairs"].size(), 6u);
    for (const auto& p : summary["pairs"]) EXPECT_TRUE(p["compatible"].get<bool>());
    EXPECT_TRUE(summary["identities"].get<bool>());
    // T_k = T S^k, recomputed here
    Representation r = ws.rep_of("onstruct_fix");
    Matrix t = ws.matrix("onstruct_fix", "T", 2, 2), s = ws.matrix("onstruct_fix", "S", 2, 2);
    Workspace out;
    out.load_document(doc, "derived");
    Matrix tk = t;
    for (int k = 0; k <= 3; ++k, tk = tk * s)
        EXPECT_EQ(out.o_operator("onstruct_fix_T" + std::to_string(k)).second, tk);
}

TEST(Derive, PreconditionFailureIsInvalid) {
    // aff1_T is nilpotent, so the GCS from an invertible operator does not apply
    CliRun r = cli({"derive", "gcs-from-o", "aff1_T", "--input", kFixtures});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("Singular"), std::string::npos) << r.err;
    EXPECT_EQ(cli({"derive", "semidirect", "nothing", "--input", kFixtures}).code, 2);
    EXPECT_EQ(cli({"derive", "hierarchy", "x", "onstruct_fix", "--input", kFixtures}).code, 2);
}

TEST(Report, EmptyWorkspace) {
    Workspace ws;
    Json r = build_report(ws, 1, 1);
    EXPECT_TRUE(r["objects"].empty());
    EXPECT_TRUE(r["suites"].empty());
    EXPECT_EQ(r["summary"]["objects"], 0);
}

TEST(Report, DeterministicAcrossRunsAndThreads) {
    CliRun a = cli({"report", kFixtures, "--seed", "3"});
    CliRun b = cli({"report", kFixtures, "--seed", "3"});
    CliRun c = cli({"report", kFixtures, "--seed", "3", "--threads", "6"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    Json j = Json::parse(a.out);
    EXPECT_EQ(j["summary"]["suites_failed"], 0) << a.out;
    EXPECT_GT(j["summary"]["suites"].get<int>(), 20);
    CliRun t1 = cli({"report", kFixtures, "--format", "text", "--threads", "1"});
    CliRun t4 = cli({"report", kFixtures, "--format", "text", "--threads", "4"});
    EXPECT_EQ(t1.out, t4.out);
}

TEST(Report, StableFieldOrder) {
    CliRun a = cli({"report", kFixtures});
    auto seed = a.out.find("\"seed\""), summary = a.out.find("\"summary\""), objects = a.out.find("\"objects\"");
    EXPECT_LT(seed, summary);
    EXPECT_LT(summary, objects);
}

TEST(JsonIo, RoundTrips) {
    for (const auto& [name, g] : fixtures::algebras()) EXPECT_EQ(algebra_from_json(algebra_to_json(g), name), g);
    Bivector r = Bivector::from_entries(3, {{0, 2, Rational(3, 4)}, {1, 2, Rational(-1)}});
    EXPECT_EQ(bivector_from_json(bivector_to_json(r), "r"), r);
    Cochain c(2, 3, 2);
    c.set(std::vector<std::size_t>{0, 2}, Vec{Rational(1, 3), 0});
    EXPECT_EQ(cochain_from_json(cochain_to_json(c), "c"), c);
    // unsorted tuples pick up the permutation sign
    Json j = cochain_to_json(c);
    j["values"] = Json::array({Json::array({Json::array({2, 0}), Json::array({"1/3", "0"})})});
    EXPECT_EQ(cochain_from_json(j, "c"), Rational(-1) * c);
    EXPECT_EQ(rational_from_json("6/-4", "q"), Rational(-3, 2));
    EXPECT_THROW(rational_from_json(0.5, "q"), Error);
}
