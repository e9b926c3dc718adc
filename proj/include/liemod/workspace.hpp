#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liemod/json_io.hpp"
#include "liemod/twilled.hpp"

namespace liemod {

struct Verdict {
    enum class Status { Valid, Invalid, Error };
    Status status = Status::Valid;
    std::string name;
    std::string kind;
    Check check;        // first failing clause when Invalid
    std::string error;  // error kind and message when an exception decided the verdict
    Json to_json() const;
    std::string to_text() const;
};
const char* to_string(Verdict::Status s);

/// Named objects from one or more documents {"objects": {name: {kind, ...}}}.
/// Loading checks syntax, required fields and kinds; resolve_references()
/// checks cross-references once every input is in. Mathematical validity is
/// decided per object by validate().
class Workspace {
public:
    void load_file(const std::string& path);
    void load_text(const std::string& text, const std::string& source);
    void load_document(const Json& doc, const std::string& source);
    /// Throws Error(Parse) for an unknown kind, a missing field or a duplicate name.
    void add(const std::string& name, Json object, const std::string& source = "<memory>");
    /// Throws Error(Resolution) naming the first dangling or mistyped reference.
    void resolve_references() const;

    bool empty() const noexcept { return objects_.empty(); }
    bool has(const std::string& name) const { return objects_.count(name) != 0; }
    /// Sorted.
    std::vector<std::string> names() const;
    /// Throws Error(Resolution).
    const Json& object(const std::string& name) const;
    std::string kind(const std::string& name) const;
    /// Names directly referenced by `name`.
    std::vector<std::string> references(const std::string& name) const;
    /// {"objects": ...} holding `roots` and everything they reference.
    Json document(const std::vector<std::string>& roots) const;

    // Typed access. Each call rebuilds and revalidates the object, so the
    // workspace is safe to read from several threads.
    LieAlgebra algebra(const std::string& name) const;
    Representation rep(const std::string& name) const;
    Subspace subspace(const std::string& name) const;
    Bivector bivector(const std::string& name) const;
    Cochain cochain(const std::string& name) const;
    /// The representation behind `name`'s rep_ref.
    Representation rep_of(const std::string& name) const;
    /// The algebra behind `name`'s algebra_ref, or the algebra of its rep_ref.
    LieAlgebra algebra_of(const std::string& name) const;
    Matrix matrix(const std::string& name, const char* key, std::size_t rows, std::size_t cols) const;
    /// A bivector field given inline or as the name of a bivector object.
    Bivector bivector_field(const std::string& name, const char* key, std::size_t dim) const;
    /// (rep, T) of an o-operator, or of a map from the module to the algebra.
    std::pair<Representation, Matrix> o_operator(const std::string& name) const;
    TwilledLieAlgebra twilled(const std::string& name) const;
    /// For a twilled object given by o_ref: the name of that o-operator.
    std::optional<std::string> twilled_o_ref(const std::string& name) const;
    PreLieProduct pre_lie(const std::string& name) const;

    /// Structural checks plus the defining property of the object's kind.
    Verdict validate(const std::string& name) const;
    /// `check_kind` is a CLI check kind; args are object names. A kind that
    /// does not apply to the named object is an Error verdict.
    Verdict check(const std::string& check_kind, const std::vector<std::string>& args) const;

private:
    std::map<std::string, Json> objects_;
    std::map<std::string, std::string> sources_;
};

/// Check kinds accepted by Workspace::check.
const std::vector<std::string>& check_kinds();

}  // namespace liemod
