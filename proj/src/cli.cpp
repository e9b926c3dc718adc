#include "liemod/cli.hpp"

#include <algorithm>
#include <fstream>

#include "CLI11.hpp"

namespace liemod {

namespace {

constexpr int kValid = 0;
constexpr int kInvalid = 1;
constexpr int kError = 2;

int exit_code(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::Valid: return kValid;
        case Verdict::Status::Invalid: return kInvalid;
        case Verdict::Status::Error: return kError;
    }
    return kError;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Parse, path + ": cannot write file");
    f << text;
}

Workspace load(const std::vector<std::string>& files) {
    Workspace ws;
    for (const auto& f : files) ws.load_file(f);
    ws.resolve_references();
    return ws;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks and constructions for O-operators, ON-structures, twilled algebras and "
                 "generalized complex structures"};
    app.name("liemod");
    app.require_subcommand(1);
    app.fallthrough();

    std::vector<std::string> inputs;
    std::string output;
    std::string format = "json";
    std::uint64_t seed = 0;
    unsigned threads = 1;
    app.add_option("-i,--input", inputs, "Definition files")->expected(1, -1);
    app.add_option("-o,--output", output, "Write the result here instead of stdout");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", seed, "Seed for the randomized property suites");
    app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

    auto* validate = app.add_subcommand("validate", "Validate every object");
    std::vector<std::string> vfiles;
    validate->add_option("files", vfiles, "Definition files");

    auto* check = app.add_subcommand("check", "Check one structure");
    std::string ckind;
    std::vector<std::string> cargs;
    check->add_option("kind", ckind, "Check kind")->required()->check(CLI::IsMember(check_kinds()));
    check->add_option("objects", cargs, "Object names")->required();

    auto* der = app.add_subcommand("derive", "Run a construction and write the new objects");
    std::string dkind;
    std::vector<std::string> dargs;
    der->add_option("kind", dkind, "Construction")->required()->check(CLI::IsMember(derive_kinds()));
    der->add_option("args", dargs, "Arguments, usually object names")->required();

    auto* rep = app.add_subcommand("report", "Verdicts plus randomized property suites");
    std::vector<std::string> rfiles;
    rep->add_option("files", rfiles, "Definition files");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kError;
    }

    const bool text = format == "text";
    try {
        if (validate->parsed()) {
            inputs.insert(inputs.end(), vfiles.begin(), vfiles.end());
            Workspace ws = load(inputs);
            auto verdicts = validate_all(ws, threads);
            int code = kValid;
            Json objs = Json::array();
            std::string lines;
            for (const auto& v : verdicts) {
                code = std::max(code, exit_code(v.status));
                objs.push_back(v.to_json());
                lines += v.to_text() + "\n";
            }
            Json doc;
            doc["objects"] = std::move(objs);
            emit(text ? lines : doc.dump(2) + "\n", output, out);
            return code;
        }
        if (check->parsed()) {
            Workspace ws = load(inputs);
            Verdict v = ws.check(ckind, cargs);
            emit(text ? v.to_text() + "\n" : v.to_json().dump(2) + "\n", output, out);
            return exit_code(v.status);
        }
        if (der->parsed()) {
            Workspace ws = load(inputs);
            Json summary;
            Json doc = derive(ws, dkind, dargs, summary);
            if (output.empty()) {
                out << doc.dump(2) << "\n";
            } else {
                emit(doc.dump(2) + "\n", output, out);
                out << (text ? summary.dump() : summary.dump(2)) << "\n";
            }
            return kValid;
        }
        if (rep->parsed()) {
            inputs.insert(inputs.end(), rfiles.begin(), rfiles.end());
            Workspace ws = load(inputs);
            emit(render_report(build_report(ws, seed, threads), text), output, out);
            return kValid;
        }
    } catch (const Error& e) {
        err << e.what();
        if (!e.witness().empty()) {
            err << " at (";
            for (std::size_t i = 0; i < e.witness().size(); ++i) err << (i ? "," : "") << e.witness()[i];
            err << ")";
        }
        err << "\n";
        bool hard = e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Resolution ||
                    e.kind() == ErrorKind::DimensionMismatch || e.kind() == ErrorKind::OracleDisagreement;
        return hard || !der->parsed() ? kError : kInvalid;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kError;
    }
    return kError;
}

}  // namespace liemod
