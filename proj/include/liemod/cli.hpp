#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "liemod/workspace.hpp"

namespace liemod {

/// Runs the command line; returns the exit code (0 valid, 1 invalid, 2 error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Verdicts for every object, in name order, computed on `threads` workers.
std::vector<Verdict> validate_all(const Workspace& ws, unsigned threads);

/// Object verdicts plus the randomized property suites; identical for equal
/// inputs and seeds whatever the thread count.
Json build_report(const Workspace& ws, std::uint64_t seed, unsigned threads);
std::string render_report(const Json& report, bool text);

/// Kinds accepted by derive().
const std::vector<std::string>& derive_kinds();
/// A document holding the new objects and everything they reference.
/// `summary` receives a short machine-readable description. Throws Error.
Json derive(const Workspace& ws, const std::string& kind, const std::vector<std::string>& args, Json& summary);

/// Loads `doc` into a fresh workspace and validates every object; throws
/// Error(OracleDisagreement) naming the first object that is not valid.
void revalidate(const Json& doc);

}  // namespace liemod
