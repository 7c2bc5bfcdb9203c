#include "embfilt/curve.hpp"

#include "embfilt/linalg.hpp"

#include <algorithm>

namespace embfilt {

ResolutionGraph::ResolutionGraph(std::vector<Int> vertex_ids,
                                 std::vector<std::vector<Int>> intersection,
                                 std::map<Int, Int> arrows)
    : ids_(std::move(vertex_ids)), intersection_(std::move(intersection)) {
    const size_t n = ids_.size();
    if (n == 0) throw error("resolution graph needs at least one vertex");
    {
        std::set<Int> unique(ids_.begin(), ids_.end());
        if (unique.size() != n) throw error("duplicate vertex ids");
    }
    if (intersection_.size() != n) throw error("intersection matrix size mismatch");
    for (const auto& row : intersection_)
        if (row.size() != n) throw error("intersection matrix is not square");

    for (size_t i = 0; i < n; ++i) {
        if (intersection_[i][i] > -1) throw error("diagonal entries must be <= -1");
        for (size_t j = 0; j < n; ++j) {
            if (i != j && intersection_[i][j] != 0 && intersection_[i][j] != 1)
                throw error("off-diagonal entries must be 0 or 1");
            if (intersection_[i][j] != intersection_[j][i])
                throw error("intersection matrix is not symmetric");
        }
    }

    arrows_.assign(n, 0);
    for (const auto& [id, count] : arrows) {
        auto it = std::find(ids_.begin(), ids_.end(), id);
        if (it == ids_.end()) throw error("arrow on unknown vertex id");
        if (count < 0) throw error("arrow counts must be nonnegative");
        arrows_[static_cast<size_t>(it - ids_.begin())] = count;
    }

    // connectivity
    std::vector<char> seen(n, 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (size_t u = 0; u < n; ++u)
            if (u != v && intersection_[v][u] != 0 && !seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw error("graph is not connected");

    // negative definiteness: leading principal minors alternate in sign
    for (size_t k = 1; k <= n; ++k) {
        QMatrix minor(k, std::vector<Rational>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) minor[i][j] = intersection_[i][j];
        Rational det = determinant(std::move(minor));
        bool positive = (k % 2 == 0) ? det > 0 : det < 0;
        if (!positive) throw error("intersection matrix is not negative definite");
    }

    QMatrix full(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) full[i][j] = intersection_[i][j];
    Rational det = determinant(full);
    if (det != 1 && det != -1) throw error("intersection matrix is not unimodular");
}

std::vector<size_t> ResolutionGraph::rees_set() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i] > 0) out.push_back(i);
    return out;
}

size_t ResolutionGraph::valence(size_t vertex) const {
    size_t count = 0;
    for (size_t u = 0; u < ids_.size(); ++u)
        if (u != vertex && intersection_[vertex][u] != 0) ++count;
    return count;
}

std::vector<std::vector<Int>> curvette_matrix(const ResolutionGraph& g) {
    const size_t n = g.size();
    QMatrix m(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = g.intersection_matrix()[i][j];
    auto inv = inverse(m);
    if (!inv) throw error("intersection matrix is singular");
    std::vector<std::vector<Int>> out(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational value = -(*inv)[i][j];
            if (denominator(value) != 1)
                throw error("curvette matrix has a non-integer entry");
            if (value <= 0) throw error("curvette matrix has a non-positive entry");
            out[i][j] = to_int(numerator(value));
        }
    return out;
}

EulerNumbers euler_numbers(const ResolutionGraph& g) {
    EulerNumbers out;
    out.bullet.resize(g.size());
    out.circ.resize(g.size());
    for (size_t v = 0; v < g.size(); ++v) {
        Int valence = static_cast<Int>(g.valence(v));
        out.bullet[v] = 2 - valence;
        out.circ[v] = 2 - valence - g.arrows(v);
    }
    return out;
}

FactoredSeries ambient_series_from_graph(const ResolutionGraph& g, const std::vector<size_t>& subset) {
    if (subset.empty()) throw error("valuation subset must be non-empty");
    for (size_t j : subset)
        if (j >= g.size()) throw error("valuation subset index out of range");
    auto m = curvette_matrix(g);
    EulerNumbers chi = euler_numbers(g);
    FactoredSeries out(subset.size());
    for (size_t sigma = 0; sigma < g.size(); ++sigma) {
        if (chi.bullet[sigma] == 0) continue;
        std::vector<Int> exponent(subset.size());
        for (size_t k = 0; k < subset.size(); ++k) exponent[k] = m[sigma][subset[k]];
        out.multiply_factor(exponent, -chi.bullet[sigma]);
    }
    return out;
}

ValueTuple q_vector(const ResolutionGraph& g, const std::vector<size_t>& subset) {
    if (subset.empty()) throw error("valuation subset must be non-empty");
    auto m = curvette_matrix(g);
    ValueTuple q(subset.size(), 0);
    for (size_t k = 0; k < subset.size(); ++k)
        for (size_t j = 0; j < g.size(); ++j) q[k] += g.arrows(j) * m[subset[k]][j];
    return q;
}

ValueTuple q_vector(const ResolutionGraph& g) {
    std::vector<size_t> rees = g.rees_set();
    if (rees.empty()) throw error("graph has no strict-transform arrows");
    return q_vector(g, rees);
}

FactoredSeries embedded_series_from_graph(const ResolutionGraph& g) {
    std::vector<size_t> rees = g.rees_set();
    if (rees.empty()) throw error("graph has no strict-transform arrows");
    FactoredSeries out = ambient_series_from_graph(g, rees);
    out.multiply_factor(q_vector(g, rees), 1);
    return out;
}

FactoredSeries acampo_zeta(const ResolutionGraph& g) {
    if (g.rees_set().empty()) throw error("graph has no strict-transform arrows");
    auto m = curvette_matrix(g);
    EulerNumbers chi = euler_numbers(g);
    FactoredSeries out(1);
    for (size_t sigma = 0; sigma < g.size(); ++sigma) {
        if (chi.circ[sigma] == 0) continue;
        Int q = 0;
        for (size_t j = 0; j < g.size(); ++j) q += g.arrows(j) * m[sigma][j];
        out.multiply_factor({q}, -chi.circ[sigma]);
    }
    return out;
}

FactoredSeries zeta_from_embedded(const FactoredSeries& pv, const std::vector<Int>& n,
                                  const ValueTuple& q) {
    if (pv.rank() != n.size() || n.size() != q.size()) throw error("rank mismatch");
    FactoredSeries out = substitute_powers(pv, n);
    Int total = 0;
    for (size_t j = 0; j < n.size(); ++j) {
        if (n[j] < 0) throw error("arrow counts must be nonnegative");
        if (n[j] == 0) continue;
        out.multiply_factor({q[j]}, n[j]);
        total += n[j] * q[j];
    }
    if (total == 0) throw error("no strict-transform arrows");
    out.multiply_factor({total}, -1);
    return out;
}

RecoveredData extract_and_recover(const FactoredSeries& pv, const ResolutionGraph& g) {
    std::vector<size_t> rees = g.rees_set();
    if (rees.empty()) throw error("graph has no strict-transform arrows");
    if (pv.rank() != rees.size()) throw error("series rank does not match the Rees set");

    DominantFactor dominant = extract_dominant_factor(pv);
    auto m = curvette_matrix(g);
    const size_t r = rees.size();
    QMatrix block(r, std::vector<Rational>(r));
    std::vector<Rational> rhs(r);
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < r; ++j) block[i][j] = m[rees[i]][rees[j]];
        rhs[i] = dominant.q[i];
    }
    auto solution = solve_linear(std::move(block), std::move(rhs));
    if (!solution) throw error("curvette block is singular");
    RecoveredData out{dominant.q, {}};
    out.n.resize(r);
    for (size_t j = 0; j < r; ++j) {
        if (denominator((*solution)[j]) != 1)
            throw error("recovered arrow counts are not integral");
        if ((*solution)[j] < 0) throw error("recovered arrow counts are negative");
        out.n[j] = to_int(numerator((*solution)[j]));
    }
    return out;
}

} // namespace embfilt
