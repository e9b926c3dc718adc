#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "liemod/lie.hpp"

namespace liemod {

using BracketEntry = std::tuple<std::size_t, std::size_t, Vec>;

/// Builds a Lie algebra from sparse entries [e_i, e_j] = v with i < j;
/// the skew completion is automatic.
LieAlgebra lie_from_brackets(std::size_t dim, const std::vector<BracketEntry>& entries,
                             std::vector<std::string> names = {});

namespace fixtures {

LieAlgebra ab2();
/// [e1, e2] = e2
LieAlgebra aff1();
/// [e1, e2] = e3
LieAlgebra h3();
/// [h, e] = 2e, [h, f] = -2f, [e, f] = h
LieAlgebra sl2();

/// Name/algebra pairs in a fixed order.
std::vector<std::pair<std::string, LieAlgebra>> algebras();

struct NamedRep {
    std::string name;
    Representation rep;
};
/// adjoint, coadjoint and a 2-dim trivial module for every fixture algebra.
std::vector<NamedRep> representations();

}  // namespace fixtures
}  // namespace liemod
