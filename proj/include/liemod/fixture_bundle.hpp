#pragma once

#include "liemod/json_io.hpp"

namespace liemod {

/// The shipped fixture document: ab2, aff1, h3, sl2 with adjoint, coadjoint
/// and trivial modules, and a validated instance of every structure kind.
/// Deterministic; instances come from small exhaustive searches.
Json fixture_bundle();
/// Self-contained objects that fail validation, one per common defect.
Json invalid_bundle();

}  // namespace liemod
