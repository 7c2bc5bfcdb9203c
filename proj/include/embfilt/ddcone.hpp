#pragma once

#include "embfilt/numeric.hpp"

#include <vector>

namespace embfilt {

// Generator description of a polyhedral cone: primitive extreme rays plus a
// basis of the lineality space.
struct GeneratorDescription {
    std::vector<std::vector<BigInt>> rays;
    std::vector<std::vector<BigInt>> lineality;
};

// Extreme rays and lineality of {y in R^n : <row, y> >= 0 for every row},
// computed by incremental double description over exact integers. Both
// polyhedron directions (vertices from halfspaces, facets from generators via
// the dual cone) reduce to this.
GeneratorDescription dual_description(const std::vector<std::vector<BigInt>>& rows, size_t n);

} // namespace embfilt
