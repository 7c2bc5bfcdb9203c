#pragma once

#include "embfilt/lattice.hpp"

#include <vector>

namespace embfilt {

struct Facet {
    WeightVector normal; // primitive, inward
    Int offset;          // min of <normal, x> over the polyhedron
    std::vector<size_t> vertex_ids;
    bool compact; // true iff every normal entry is positive
};

// conv(supp h) + R^d_{>=0}: the extreme points together with the full facet
// list (compact and non-compact), both in canonical order.
class NewtonPolyhedron {
public:
    NewtonPolyhedron(size_t dim, std::vector<Exponents> vertices, std::vector<Facet> facets);

    size_t dim() const { return dim_; }
    const std::vector<Exponents>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    std::vector<size_t> compact_facet_ids() const;

private:
    size_t dim_;
    std::vector<Exponents> vertices_; // sorted lexicographically
    std::vector<Facet> facets_;       // sorted by normal, then offset
};

struct FacetValuation {
    WeightVector normal;
    Int offset;
};

NewtonPolyhedron newton_polyhedron(const Polynomial& p);

// One (normal, offset) pair per facet, ordered lexicographically by normal.
std::vector<FacetValuation> facet_valuations(const NewtonPolyhedron& np, bool include_noncompact);

bool is_stellar(const NewtonPolyhedron& np);
bool is_bistellar(const NewtonPolyhedron& np);

// Terms of p whose w-value attains valuate_polynomial(w, p).
Polynomial face_polynomial(const Polynomial& p, const WeightVector& w);

// Terms supported on the given coordinate subspace, re-indexed to |axes|
// variables; axes holds 0-based variable indices, strictly increasing.
Polynomial restrict_to_axes(const Polynomial& p, const std::vector<size_t>& axes);

// {x in R^d_{>=0} : <normal_j, x> >= offset_j for all j} as vertices plus an
// irredundant facet list. The coordinate halfspaces x_i >= 0 are implicit.
NewtonPolyhedron polyhedron_from_halfspaces(size_t dim, const std::vector<FacetValuation>& halfspaces);

bool equal_polyhedra(const NewtonPolyhedron& a, const NewtonPolyhedron& b);

} // namespace embfilt
