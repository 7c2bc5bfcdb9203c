#include "embfilt/newton.hpp"

#include "embfilt/ddcone.hpp"
#include "embfilt/linalg.hpp"

#include <algorithm>
#include <set>

namespace embfilt {

namespace {

bool facet_less(const Facet& a, const Facet& b) {
    if (a.normal.entries() != b.normal.entries()) return a.normal.entries() < b.normal.entries();
    return a.offset < b.offset;
}

// Facets and extreme points of conv(points) + R^d_{>=0}. The homogenized cone
// is generated by (s,1) for each point and (e_i,0); its dual's extreme rays
// (a,c) are exactly the facet inequalities <a,x> >= -c, plus the trivial ray
// a = 0 coming from the recession facet.
NewtonPolyhedron hull_of_points(size_t dim, const std::set<Exponents>& points) {
    std::vector<std::vector<BigInt>> generators;
    for (const auto& s : points) {
        std::vector<BigInt> g(dim + 1);
        for (size_t i = 0; i < dim; ++i) g[i] = s[i];
        g[dim] = 1;
        generators.push_back(std::move(g));
    }
    for (size_t i = 0; i < dim; ++i) {
        std::vector<BigInt> g(dim + 1, 0);
        g[i] = 1;
        generators.push_back(std::move(g));
    }

    GeneratorDescription dual = dual_description(generators, dim + 1);
    if (!dual.lineality.empty()) throw error("internal: dual cone not pointed");

    struct RawFacet {
        std::vector<Int> normal;
        Int offset;
    };
    std::vector<RawFacet> raw;
    for (const auto& ray : dual.rays) {
        bool zero_normal = true;
        for (size_t i = 0; i < dim; ++i)
            if (ray[i] != 0) zero_normal = false;
        if (zero_normal) continue; // t >= 0, not a facet of the polyhedron
        RawFacet f;
        f.normal.resize(dim);
        for (size_t i = 0; i < dim; ++i) {
            if (ray[i] < 0) throw error("internal: facet normal with negative entry");
            f.normal[i] = to_int(ray[i]);
        }
        f.offset = to_int(-ray[dim]);
        raw.push_back(std::move(f));
    }

    // A support point is a vertex iff its tight facet normals span R^d.
    std::vector<Exponents> vertices;
    for (const auto& s : points) {
        QMatrix tight;
        for (const auto& f : raw) {
            Int v = 0;
            for (size_t i = 0; i < dim; ++i) v += f.normal[i] * s[i];
            if (v == f.offset) {
                std::vector<Rational> row(dim);
                for (size_t i = 0; i < dim; ++i) row[i] = f.normal[i];
                tight.push_back(std::move(row));
            }
        }
        if (!tight.empty() && matrix_rank(std::move(tight)) == dim) vertices.push_back(s);
    }
    std::sort(vertices.begin(), vertices.end());

    std::vector<Facet> facets;
    for (const auto& f : raw) {
        Facet out{WeightVector(f.normal), f.offset, {}, true};
        for (size_t vi = 0; vi < vertices.size(); ++vi)
            if (valuate_monomial(out.normal, vertices[vi]) == f.offset) out.vertex_ids.push_back(vi);
        if (out.vertex_ids.empty()) throw error("internal: facet without vertex");
        out.compact = out.normal.all_positive();
        facets.push_back(std::move(out));
    }
    std::sort(facets.begin(), facets.end(), facet_less);

    return NewtonPolyhedron(dim, std::move(vertices), std::move(facets));
}

} // namespace

NewtonPolyhedron::NewtonPolyhedron(size_t dim, std::vector<Exponents> vertices,
                                   std::vector<Facet> facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

std::vector<size_t> NewtonPolyhedron::compact_facet_ids() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < facets_.size(); ++i)
        if (facets_[i].compact) out.push_back(i);
    return out;
}

NewtonPolyhedron newton_polyhedron(const Polynomial& p) {
    if (p.is_zero()) throw error("Newton polyhedron of the zero polynomial");
    std::set<Exponents> points;
    for (const auto& [e, c] : p.terms()) points.insert(e);
    return hull_of_points(p.dim(), points);
}

std::vector<FacetValuation> facet_valuations(const NewtonPolyhedron& np, bool include_noncompact) {
    std::vector<FacetValuation> out;
    for (const auto& f : np.facets()) {
        if (!f.compact && !include_noncompact) continue;
        out.push_back({f.normal, f.offset});
    }
    return out; // facet list is already sorted by normal
}

bool is_stellar(const NewtonPolyhedron& np) {
    auto compact = np.compact_facet_ids();
    if (compact.empty()) throw error("polyhedron has no compact facet");
    std::set<size_t> shared(np.facets()[compact[0]].vertex_ids.begin(),
                            np.facets()[compact[0]].vertex_ids.end());
    for (size_t k = 1; k < compact.size(); ++k) {
        const auto& ids = np.facets()[compact[k]].vertex_ids;
        std::set<size_t> next;
        for (size_t v : ids)
            if (shared.count(v)) next.insert(v);
        shared = std::move(next);
        if (shared.empty()) return false;
    }
    return true;
}

bool is_bistellar(const NewtonPolyhedron& np) {
    auto compact = np.compact_facet_ids();
    if (compact.empty()) throw error("polyhedron has no compact facet");
    for (size_t a = 0; a < compact.size(); ++a)
        for (size_t b = a + 1; b < compact.size(); ++b) {
            const auto& va = np.facets()[compact[a]].vertex_ids;
            const auto& vb = np.facets()[compact[b]].vertex_ids;
            bool meet = false;
            for (size_t v : va)
                if (std::find(vb.begin(), vb.end(), v) != vb.end()) {
                    meet = true;
                    break;
                }
            if (!meet) return false;
        }
    return true;
}

Polynomial face_polynomial(const Polynomial& p, const WeightVector& w) {
    auto value = valuate_polynomial(w, p);
    if (!value) throw error("face polynomial of the zero polynomial");
    Polynomial out(p.dim());
    for (const auto& [e, c] : p.terms())
        if (valuate_monomial(w, e) == *value) out.add_term(e, c);
    return out;
}

Polynomial restrict_to_axes(const Polynomial& p, const std::vector<size_t>& axes) {
    if (axes.empty()) throw error("restriction needs a non-empty variable set");
    for (size_t i = 0; i < axes.size(); ++i) {
        if (axes[i] >= p.dim()) throw error("restriction axis out of range");
        if (i > 0 && axes[i] <= axes[i - 1]) throw error("restriction axes must be increasing");
    }
    std::vector<char> kept(p.dim(), 0);
    for (size_t a : axes) kept[a] = 1;
    Polynomial out(axes.size());
    for (const auto& [e, c] : p.terms()) {
        bool inside = true;
        for (size_t i = 0; i < p.dim(); ++i)
            if (!kept[i] && e[i] != 0) {
                inside = false;
                break;
            }
        if (!inside) continue;
        Exponents re(axes.size());
        for (size_t i = 0; i < axes.size(); ++i) re[i] = e[axes[i]];
        out.add_term(re, c);
    }
    return out;
}

NewtonPolyhedron polyhedron_from_halfspaces(size_t dim, const std::vector<FacetValuation>& halfspaces) {
    std::vector<std::vector<BigInt>> rows;
    for (const auto& h : halfspaces) {
        if (h.normal.dim() != dim) throw error("halfspace dimension mismatch");
        if (h.offset < 0) throw error("halfspace offsets must be nonnegative");
        std::vector<BigInt> row(dim + 1);
        for (size_t i = 0; i < dim; ++i) row[i] = h.normal[i];
        row[dim] = -h.offset;
        rows.push_back(std::move(row));
    }
    for (size_t i = 0; i <= dim; ++i) {
        std::vector<BigInt> row(dim + 1, 0);
        row[i] = 1;
        rows.push_back(std::move(row));
    }

    GeneratorDescription gen = dual_description(rows, dim + 1);
    if (!gen.lineality.empty()) throw error("halfspace region contains a line");

    std::set<Exponents> vertices;
    size_t recession = 0;
    for (const auto& ray : gen.rays) {
        if (ray[dim] == 0) {
            ++recession;
            continue;
        }
        if (ray[dim] != 1)
            throw error("halfspace region has a non-lattice vertex");
        Exponents v(dim);
        for (size_t i = 0; i < dim; ++i) {
            if (ray[i] < 0) throw error("internal: vertex outside the orthant");
            v[i] = to_int(ray[i]);
        }
        vertices.insert(std::move(v));
    }
    if (vertices.empty()) throw error("halfspace region is empty or degenerate");
    if (recession != dim) throw error("internal: unexpected recession cone");

    // Vertices determine the region (its recession cone is the full orthant);
    // rebuilding from them drops every redundant halfspace.
    return hull_of_points(dim, vertices);
}

bool equal_polyhedra(const NewtonPolyhedron& a, const NewtonPolyhedron& b) {
    if (a.dim() != b.dim()) throw error("polyhedron dimension mismatch");
    if (a.vertices() != b.vertices()) return false;
    if (a.facets().size() != b.facets().size()) return false;
    for (size_t i = 0; i < a.facets().size(); ++i) {
        if (a.facets()[i].normal != b.facets()[i].normal) return false;
        if (a.facets()[i].offset != b.facets()[i].offset) return false;
    }
    return true;
}

} // namespace embfilt
