#include "embfilt/zeta.hpp"

#include "embfilt/ddcone.hpp"
#include "embfilt/linalg.hpp"

#include <algorithm>
#include <set>

namespace embfilt {

namespace {

using BVec = std::vector<BigInt>;

// Z-basis of {x in Z^n : A x = 0}, by unimodular column reduction.
std::vector<BVec> integer_kernel(std::vector<BVec> a, size_t n) {
    std::vector<BVec> transform(n, BVec(n, 0));
    for (size_t i = 0; i < n; ++i) transform[i][i] = 1; // transform[col] is a candidate vector

    size_t pivot = 0;
    for (size_t row = 0; row < a.size() && pivot < n; ++row) {
        while (true) {
            size_t best = n;
            for (size_t col = pivot; col < n; ++col) {
                if (a[row][col] == 0) continue;
                if (best == n || abs(a[row][col]) < abs(a[row][best])) best = col;
            }
            if (best == n) break;
            for (auto& r : a) std::swap(r[pivot], r[best]);
            std::swap(transform[pivot], transform[best]);
            bool cleared = true;
            for (size_t col = pivot + 1; col < n; ++col) {
                if (a[row][col] == 0) continue;
                BigInt f = a[row][col] / a[row][pivot];
                for (auto& r : a) r[col] -= f * r[pivot];
                for (size_t k = 0; k < n; ++k) transform[col][k] -= f * transform[pivot][k];
                if (a[row][col] != 0) cleared = false;
            }
            if (cleared) {
                ++pivot;
                break;
            }
        }
    }
    return {transform.begin() + static_cast<long>(pivot), transform.end()};
}

// Coordinates of u in the row basis; solutions must exist for lattice members.
std::vector<Rational> coordinates_in(const std::vector<BVec>& basis, const BVec& u) {
    const size_t k = basis.size(), n = u.size();
    QMatrix a(n, std::vector<Rational>(k));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) a[i][j] = Rational(basis[j][i]);
    std::vector<Rational> b(n);
    for (size_t i = 0; i < n; ++i) b[i] = Rational(u[i]);

    // elimination with right-hand side, consistency checked
    size_t rank = 0;
    for (size_t col = 0; col < k && rank < n; ++col) {
        size_t p = rank;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) throw error("internal: dependent lattice basis");
        std::swap(a[rank], a[p]);
        std::swap(b[rank], b[p]);
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rational f = a[i][col] / a[rank][col];
            for (size_t j = col; j < k; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        ++rank;
    }
    for (size_t i = rank; i < n; ++i)
        if (b[i] != 0) throw error("internal: point outside the spanned lattice");
    std::vector<Rational> x(k);
    for (size_t i = 0; i < rank; ++i) {
        size_t col = 0;
        while (a[i][col] == 0) ++col;
        x[col] = b[i] / a[i][col];
    }
    return x;
}

Int lattice_volume_impl(std::vector<BVec> points, size_t ambient) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty()) throw error("lattice volume of an empty point set");
    if (points.size() == 1) return 1;

    std::vector<BVec> u;
    for (size_t i = 1; i < points.size(); ++i) {
        BVec d(ambient);
        for (size_t c = 0; c < ambient; ++c) d[c] = points[i][c] - points[0][c];
        u.push_back(std::move(d));
    }

    // saturated lattice of the spanned subspace: kernel of the kernel
    std::vector<BVec> orthogonal = integer_kernel(u, ambient);
    std::vector<BVec> lattice = integer_kernel(orthogonal, ambient);
    const size_t k = lattice.size();
    if (k == 0) return 1;

    // integer coordinates of all points relative to points[0]
    std::vector<std::vector<Int>> w;
    w.push_back(std::vector<Int>(k, 0));
    for (const auto& d : u) {
        std::vector<Rational> x = coordinates_in(lattice, d);
        std::vector<Int> row(k);
        for (size_t j = 0; j < k; ++j) {
            if (denominator(x[j]) != 1) throw error("internal: non-integral lattice coordinate");
            row[j] = to_int(numerator(x[j]));
        }
        w.push_back(std::move(row));
    }

    if (k == 1) {
        Int lo = w[0][0], hi = w[0][0];
        for (const auto& p : w) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return hi - lo;
    }

    // pyramids from w[0] over the facets of the hull
    std::vector<BVec> generators;
    for (const auto& p : w) {
        BVec g(k + 1);
        for (size_t c = 0; c < k; ++c) g[c] = p[c];
        g[k] = 1;
        generators.push_back(std::move(g));
    }
    GeneratorDescription dual = dual_description(generators, k + 1);
    if (!dual.lineality.empty()) throw error("internal: degenerate hull");

    Int volume = 0;
    for (const auto& ray : dual.rays) {
        BigInt g = 0;
        for (size_t c = 0; c < k; ++c) g = gcd(g, ray[c]);
        if (g == 0) continue; // trivial inequality, not a facet
        // primitive facet normal and offset in the k-dim lattice
        BVec normal(k);
        for (size_t c = 0; c < k; ++c) normal[c] = ray[c] / g;
        BigInt offset = -ray[k] / g;

        BigInt apex = 0;
        for (size_t c = 0; c < k; ++c) apex += normal[c] * w[0][c];
        BigInt height = apex - offset;
        if (height == 0) continue; // facet through the apex
        if (height < 0) throw error("internal: apex outside a facet halfspace");

        std::vector<BVec> face;
        for (const auto& p : w) {
            BigInt v = 0;
            for (size_t c = 0; c < k; ++c) v += normal[c] * p[c];
            if (v == offset) {
                BVec fp(k);
                for (size_t c = 0; c < k; ++c) fp[c] = p[c];
                face.push_back(std::move(fp));
            }
        }
        volume += lattice_volume_impl(std::move(face), k) * to_int(height);
    }
    return volume;
}

} // namespace

Int lattice_volume(const std::vector<Exponents>& points) {
    if (points.empty()) throw error("lattice volume of an empty point set");
    std::vector<BVec> converted;
    for (const auto& p : points) {
        BVec v(p.size());
        for (size_t c = 0; c < p.size(); ++c) v[c] = p[c];
        converted.push_back(std::move(v));
    }
    return lattice_volume_impl(std::move(converted), points[0].size());
}

FactoredSeries varchenko_zeta(const Polynomial& h) {
    if (h.is_zero()) throw error("zeta of the zero polynomial");
    if (!h.vanishes_at_origin()) throw error("germ must vanish at the origin");
    const size_t d = h.dim();

    FactoredSeries zeta(1);
    for (size_t mask = 1; mask < (size_t(1) << d); ++mask) {
        std::vector<size_t> axes;
        for (size_t i = 0; i < d; ++i)
            if (mask & (size_t(1) << i)) axes.push_back(i);
        Polynomial restricted = restrict_to_axes(h, axes);
        if (restricted.is_zero()) continue;

        const Int sign = (axes.size() % 2 == 0) ? 1 : -1;
        NewtonPolyhedron np = newton_polyhedron(restricted);
        for (size_t id : np.compact_facet_ids()) {
            const Facet& facet = np.facets()[id];
            std::vector<Exponents> corners;
            for (size_t vid : facet.vertex_ids) corners.push_back(np.vertices()[vid]);
            Int lv = lattice_volume(corners);
            zeta.multiply_factor({facet.offset}, sign * lv);
        }
    }
    return zeta;
}

NewtonPolyhedron recover_newton(size_t dim, const std::vector<FacetValuation>& rows) {
    return polyhedron_from_halfspaces(dim, rows);
}

NewtonPolyhedron recover_newton(size_t dim, const std::vector<WeightVector>& rows,
                                const FactoredSeries& pv) {
    if (pv.rank() != rows.size())
        throw error("series rank does not match the number of valuations");
    DominantFactor dominant = extract_dominant_factor(pv);
    std::vector<FacetValuation> halfspaces;
    for (size_t j = 0; j < rows.size(); ++j) halfspaces.push_back({rows[j], dominant.q[j]});
    return polyhedron_from_halfspaces(dim, halfspaces);
}

bool compare_zeta(const FactoredSeries& a, const FactoredSeries& b) {
    if (a.rank() != 1 || b.rank() != 1) throw error("zeta comparison expects single-variable series");
    return a == b;
}

} // namespace embfilt
