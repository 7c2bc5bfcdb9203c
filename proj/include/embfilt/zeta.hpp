#pragma once

#include "embfilt/lattice.hpp"
#include "embfilt/newton.hpp"
#include "embfilt/series.hpp"

#include <vector>

namespace embfilt {

// Normalized lattice volume of the polytope spanned by the given lattice
// points: (dim)! times the Euclidean volume measured in the affine lattice of
// the spanned subspace. Points and unit segments/simplices have volume 1.
Int lattice_volume(const std::vector<Exponents>& points);

// Monodromy zeta function of a nondegenerate germ from its Newton polyhedron:
// over every nonempty coordinate subset J and every compact facet tau of the
// polyhedron of the restriction, a factor (1 - t^{N_tau})^((-1)^|J| LV(tau)).
// Signs follow the convention matching the resolution-graph form.
FactoredSeries varchenko_zeta(const Polynomial& h);

// The polyhedron {x >= 0 : <nu_j, x> >= q_j}; the direct form takes the
// offsets, the series form reads q off the dominant factor of P_V.
NewtonPolyhedron recover_newton(size_t dim, const std::vector<FacetValuation>& rows);
NewtonPolyhedron recover_newton(size_t dim, const std::vector<WeightVector>& rows,
                                const FactoredSeries& pv);

// Equality of normalized single-variable factored forms.
bool compare_zeta(const FactoredSeries& a, const FactoredSeries& b);

} // namespace embfilt
