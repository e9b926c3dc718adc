#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "liemod/cli.hpp"
#include "liemod/gcsholo.hpp"
#include "liemod/linalg.hpp"

namespace liemod {

namespace {

constexpr int kOperatorSamples = 100;
constexpr int kBivectorSamples = 50;
constexpr int kOmegaSamples = 50;
constexpr int kGCSSamples = 50;
constexpr int kCochainSamples = 10;

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(threads, n); ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) f(i);
        });
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

struct SuiteResult {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail;
};

struct Item {
    std::string suite;
    std::string object;
    std::function<SuiteResult(std::mt19937_64&)> run;
};

SuiteResult operator_oracle(const Representation& r, std::mt19937_64& rng) {
    SuiteResult s;
    for (int k = 0; k < kOperatorSamples; ++k) {
        Matrix t = random_matrix(rng, r.algebra().dim(), r.dim(), -2, 2);
        ++s.cases;
        if (graph_check(r, t) != is_o_operator(r, t)) {
            if (!s.failures++) s.detail = "graph_check and is_o_operator differ";
        }
    }
    return s;
}

SuiteResult d_squared(const Representation& r, std::mt19937_64& rng) {
    SuiteResult s;
    std::size_t d = r.algebra().dim();
    std::uniform_int_distribution<int> dist(-3, 3);
    for (std::size_t deg = 0; deg <= std::min<std::size_t>(3, d); ++deg)
        for (int k = 0; k < kCochainSamples; ++k) {
            Cochain c(deg, d, r.dim());
            for (std::size_t i = 0; i < c.size(); ++i)
                for (auto& q : c.value(i)) q = dist(rng);
            ++s.cases;
            if (!ce_differential(r, ce_differential(r, c)).is_zero()) {
                if (!s.failures++) s.detail = "d(d f) != 0 in degree " + std::to_string(deg);
            }
        }
    return s;
}

SuiteResult cybe_oracle(const LieAlgebra& g, std::mt19937_64& rng) {
    SuiteResult s;
    for (int k = 0; k < kBivectorSamples; ++k) {
        Matrix m = random_matrix(rng, g.dim(), g.dim(), -1, 1);
        Bivector r = Bivector::from_matrix(m - m.transpose());
        ++s.cases;
        try {
            lemma_r_equiv(g, r);
        } catch (const Error& e) {
            if (!s.failures++) s.detail = e.what();
        }
    }
    return s;
}

SuiteResult mc_oracle(const TwilledLieAlgebra& tw, std::mt19937_64& rng) {
    SuiteResult s;
    for (int k = 0; k < kOmegaSamples; ++k) {
        ++s.cases;
        try {
            mc_report(tw, random_matrix(rng, tw.dim_b(), tw.dim_a(), -1, 1));
        } catch (const Error& e) {
            if (!s.failures++) s.detail = e.what();
        }
    }
    return s;
}

SuiteResult gcs_oracle(const Representation& r, std::mt19937_64& rng) {
    SuiteResult s;
    std::size_t d = r.algebra().dim(), m = r.dim();
    for (int k = 0; k < kGCSSamples; ++k) {
        Matrix n = random_matrix(rng, d, d, -1, 1), t = random_matrix(rng, d, m, -1, 1);
        Matrix sg = random_matrix(rng, m, d, -1, 1), sm = random_matrix(rng, m, m, -1, 1);
        ++s.cases;
        if (gcs_components_raw(r, n, t, sg, sm).ok() != gcs_check_direct(r, n, t, sg, sm).ok()) {
            if (!s.failures++) s.detail = "component and direct GCS verdicts differ";
        }
    }
    return s;
}

SuiteResult single(const std::function<std::string()>& f) {
    SuiteResult s;
    s.cases = 1;
    try {
        s.detail = f();
        if (!s.detail.empty()) s.failures = 1;
    } catch (const Error& e) {
        s.failures = 1;
        s.detail = e.what();
    }
    return s;
}

std::vector<Item> plan(const Workspace& ws, const std::vector<Verdict>& verdicts) {
    std::vector<Item> items;
    for (const auto& v : verdicts) {
        if (v.status != Verdict::Status::Valid) continue;
        const std::string& name = v.name;
        const std::string& k = v.kind;
        if (k == "representation") {
            Representation r = ws.rep(name);
            items.push_back({"o-operator graph oracle", name, [r](auto& rng) { return operator_oracle(r, rng); }});
            items.push_back({"ce differential squares to zero", name, [r](auto& rng) { return d_squared(r, rng); }});
            if (r.algebra().dim() + r.dim() <= 5)
                items.push_back({"gcs component oracle", name, [r](auto& rng) { return gcs_oracle(r, rng); }});
        } else if (k == "lie-algebra") {
            LieAlgebra g = ws.algebra(name);
            if (g.dim() <= 4)
                items.push_back({"cybe coadjoint oracle", name, [g](auto& rng) { return cybe_oracle(g, rng); }});
        } else if (k == "nijenhuis") {
            LieAlgebra g = ws.algebra_of(name);
            Matrix n = ws.matrix(name, "matrix", g.dim(), g.dim());
            items.push_back({"nijenhuis tower", name, [g, n](auto& rng) {
                                 std::uint64_t seed = rng();
                                 return single([&] { return nijenhuis_power_props(g, n, 3, seed).first_failure; });
                             }});
        } else if (k == "on-structure") {
            Representation r = ws.rep_of(name);
            std::size_t d = r.algebra().dim(), m = r.dim();
            Matrix t = ws.matrix(name, "T", d, m), n = ws.matrix(name, "N", d, d), s = ws.matrix(name, "S", m, m);
            items.push_back({"on hierarchy", name, [r, t, n, s](auto&) {
                                 return single([&]() -> std::string {
                                     Hierarchy h = hierarchy(r, t, n, s, 3);
                                     for (std::size_t i = 0; i < h.t.size(); ++i)
                                         for (std::size_t j = i + 1; j < h.t.size(); ++j)
                                             if (!are_compatible(r, h.t[i], h.t[j]))
                                                 return "T_" + std::to_string(i) + ", T_" + std::to_string(j) +
                                                        " not compatible";
                                     Check c = hierarchy_identities(r, t, n, s, 3);
                                     return c.ok ? std::string() : c.clause;
                                 });
                             }});
            if (is_invertible(t))
                items.push_back({"strong mc roundtrip", name, [r, t, n, s](auto&) {
                                     return single([&]() -> std::string {
                                         ONStructure back = on_from_strong_mc(r, t, strong_mc_from_on(r, t, n, s));
                                         return back.t == t && back.n == n && back.s == s ? "" : "roundtrip differs";
                                     });
                                 }});
        } else if (k == "twilled") {
            TwilledLieAlgebra tw = ws.twilled(name);
            items.push_back({"mc oracle", name, [tw](auto& rng) { return mc_oracle(tw, rng); }});
        } else if (k == "mc-solution") {
            std::string twn = string_field(ws.object(name), "twilled_ref", name);
            auto oref = ws.twilled_o_ref(twn);
            if (!oref || !ws.object(name).value("strong", false)) continue;
            auto [r, t] = ws.o_operator(*oref);
            Matrix omega = ws.matrix(name, "omega", r.dim(), r.algebra().dim());
            items.push_back({"strong mc to on", name, [r, t, omega](auto&) {
                                 return single([&]() -> std::string {
                                     ONStructure on = on_from_strong_mc(r, t, omega);
                                     return is_on_structure(r, on.t, on.n, on.s) ? "" : "not an ON-structure";
                                 });
                             }});
        } else if (k == "pn-structure") {
            LieAlgebra g = ws.algebra_of(name);
            Bivector rb = ws.bivector_field(name, "r", g.dim());
            Matrix n = ws.matrix(name, "N", g.dim(), g.dim());
            items.push_back({"pn hierarchy", name, [g, rb, n](auto&) {
                                 return single([&] {
                                     pn_hierarchy(g, rb, n, 3);
                                     return std::string();
                                 });
                             }});
        } else if (k == "holo-r") {
            LieAlgebra g = ws.algebra_of(name);
            std::size_t d = g.dim();
            Matrix j = ws.matrix(name, "J", d, d);
            Bivector rr = ws.bivector_field(name, "r_R", d), ri = ws.bivector_field(name, "r_I", d);
            items.push_back({"holomorphic r equivalence", name, [g, j, rr, ri](auto&) {
                                 return single([&]() -> std::string {
                                     return holomorphic_r_pn(g, j, rr, ri) == holomorphic_r_gcs(g, j, rr, ri)
                                                ? ""
                                                : "PN and GCS characterizations differ";
                                 });
                             }});
        }
    }
    return items;
}

}  // namespace

std::vector<Verdict> validate_all(const Workspace& ws, unsigned threads) {
    auto names = ws.names();
    std::vector<Verdict> out(names.size());
    parallel_for(names.size(), threads, [&](std::size_t i) { out[i] = ws.validate(names[i]); });
    return out;
}

Json build_report(const Workspace& ws, std::uint64_t seed, unsigned threads) {
    std::vector<Verdict> verdicts = validate_all(ws, threads);
    Json report;
    report["seed"] = seed;
    Json objects = Json::array();
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& v : verdicts) {
        objects.push_back(v.to_json());
        ++counts[static_cast<int>(v.status)];
    }
    Json summary;
    summary["objects"] = verdicts.size();
    summary["valid"] = counts[0];
    summary["invalid"] = counts[1];
    summary["error"] = counts[2];

    std::vector<Item> items = plan(ws, verdicts);
    std::vector<SuiteResult> results(items.size());
    parallel_for(items.size(), threads, [&](std::size_t i) {
        // per-item seed, so the schedule cannot change the samples
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (i + 1));
        results[i] = items[i].run(rng);
    });
    Json suites = Json::array();
    std::size_t failed = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        Json s;
        s["suite"] = items[i].suite;
        s["object"] = items[i].object;
        s["cases"] = results[i].cases;
        s["failures"] = results[i].failures;
        s["passed"] = results[i].failures == 0;
        if (!results[i].detail.empty()) s["detail"] = results[i].detail;
        if (results[i].failures) ++failed;
        suites.push_back(std::move(s));
    }
    summary["suites"] = items.size();
    summary["suites_failed"] = failed;
    report["summary"] = std::move(summary);
    report["objects"] = std::move(objects);
    report["suites"] = std::move(suites);
    return report;
}

std::string render_report(const Json& report, bool text) {
    if (!text) return report.dump(2) + "\n";
    std::ostringstream os;
    const Json& s = report.at("summary");
    os << "seed " << report.at("seed").get<std::uint64_t>() << "\n";
    os << "objects " << s.at("objects") << ": " << s.at("valid") << " valid, " << s.at("invalid") << " invalid, "
       << s.at("error") << " error\n";
    for (const auto& o : report.at("objects")) {
        os << "  " << o.at("name").get<std::string>() << " [" << o.at("kind").get<std::string>() << "] "
           << o.at("status").get<std::string>();
        if (o.contains("clause")) os << ": " << o.at("clause").get<std::string>() << " at " << o.at("witness").dump();
        if (o.contains("error")) os << ": " << o.at("error").get<std::string>();
        os << "\n";
    }
    os << "suites " << s.at("suites") << ", " << s.at("suites_failed") << " failed\n";
    for (const auto& r : report.at("suites")) {
        os << "  " << (r.at("passed").get<bool>() ? "PASS " : "FAIL ") << r.at("suite").get<std::string>() << " on "
           << r.at("object").get<std::string>() << " (" << r.at("cases") << " cases)";
        if (r.contains("detail")) os << ": " << r.at("detail").get<std::string>();
        os << "\n";
    }
    return os.str();
}

}  // namespace liemod
