#include "liemod/fixtures.hpp"

namespace liemod {

LieAlgebra lie_from_brackets(std::size_t dim, const std::vector<BracketEntry>& entries,
                             std::vector<std::string> names) {
    std::vector<Rational> t(dim * dim * dim);
    for (const auto& [i, j, v] : entries) {
        if (i >= j || j >= dim || v.size() != dim)
            throw Error(ErrorKind::DimensionMismatch, "bracket entries need i < j < dim and a vector of length dim",
                        {i, j});
        for (std::size_t k = 0; k < dim; ++k) {
            t[(i * dim + j) * dim + k] = v[k];
            t[(j * dim + i) * dim + k] = -v[k];
        }
    }
    return LieAlgebra::create(dim, std::move(t), std::move(names));
}

namespace fixtures {

LieAlgebra ab2() { return LieAlgebra::abelian(2); }

LieAlgebra aff1() { return lie_from_brackets(2, {{0, 1, {0, 1}}}, {"e1", "e2"}); }

LieAlgebra h3() { return lie_from_brackets(3, {{0, 1, {0, 0, 1}}}, {"e1", "e2", "e3"}); }

LieAlgebra sl2() {
    return lie_from_brackets(3, {{0, 1, {0, 2, 0}}, {0, 2, {0, 0, -2}}, {1, 2, {1, 0, 0}}}, {"h", "e", "f"});
}

std::vector<std::pair<std::string, LieAlgebra>> algebras() {
    return {{"ab2", ab2()}, {"aff1", aff1()}, {"h3", h3()}, {"sl2", sl2()}};
}

std::vector<NamedRep> representations() {
    std::vector<NamedRep> out;
    for (const auto& [name, g] : algebras()) {
        out.push_back({name + "_adj", adjoint(g)});
        out.push_back({name + "_coadj", coadjoint(g)});
        out.push_back({name + "_triv", Representation::trivial(g, 2)});
    }
    return out;
}

}  // namespace fixtures
}  // namespace liemod
