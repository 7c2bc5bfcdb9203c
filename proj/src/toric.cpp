#include "embfilt/toric.hpp"

#include "embfilt/ddcone.hpp"
#include "embfilt/linalg.hpp"
#include "embfilt/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace embfilt {

SemigroupPresentation::SemigroupPresentation(size_t d, size_t p,
                                             std::vector<std::vector<Int>> generators,
                                             std::vector<Binomial> binomials)
    : d_(d), p_(p), generators_(std::move(generators)), binomials_(std::move(binomials)) {
    if (d_ == 0 || p_ == 0) throw error("presentation needs d >= 1 and p >= 1");
    if (generators_.size() != d_ + p_) throw error("presentation needs d+p generators");
    for (const auto& s : generators_)
        if (s.size() != d_) throw error("generator dimension mismatch");
    if (binomials_.size() != p_) throw error("presentation needs p binomials");
    for (const auto& b : binomials_) {
        if (b.alpha.size() != d_ + p_ || b.beta.size() != d_ + p_)
            throw error("binomial exponent dimension mismatch");
        for (Int x : b.alpha)
            if (x < 0) throw error("binomial exponents must be nonnegative");
        for (Int x : b.beta)
            if (x < 0) throw error("binomial exponents must be nonnegative");
    }
}

PresentationDiagnostics validate_presentation(const SemigroupPresentation& sp) {
    PresentationDiagnostics out;
    const auto& gens = sp.generators();
    for (size_t i = 0; i < sp.binomials().size(); ++i) {
        const auto& b = sp.binomials()[i];
        std::vector<Int> deg(sp.lattice_dim(), 0);
        for (size_t k = 0; k < gens.size(); ++k)
            for (size_t c = 0; c < sp.lattice_dim(); ++c)
                deg[c] += (b.alpha[k] - b.beta[k]) * gens[k][c];
        if (std::any_of(deg.begin(), deg.end(), [](Int x) { return x != 0; })) {
            out.degrees_match = false;
            out.issues.push_back("binomial " + std::to_string(i + 1) +
                                 ": deg(x^alpha) != deg(x^beta)");
        }
        for (size_t k = 0; k < gens.size(); ++k)
            if (b.alpha[k] > 0 && b.beta[k] > 0) {
                out.supports_disjoint = false;
                out.issues.push_back("binomial " + std::to_string(i + 1) +
                                     ": alpha and beta share variable " + std::to_string(k + 1));
                break;
            }
    }

    // cone(s_1..s_{d+p}) is pointed iff its dual cone is full-dimensional
    std::vector<std::vector<BigInt>> rows;
    for (const auto& s : gens) {
        std::vector<BigInt> row(sp.lattice_dim());
        for (size_t c = 0; c < sp.lattice_dim(); ++c) row[c] = s[c];
        rows.push_back(std::move(row));
    }
    GeneratorDescription dual = dual_description(rows, sp.lattice_dim());
    QMatrix span;
    for (const auto& v : dual.rays) {
        std::vector<Rational> r(sp.lattice_dim());
        for (size_t c = 0; c < sp.lattice_dim(); ++c) r[c] = Rational(v[c]);
        span.push_back(std::move(r));
    }
    for (const auto& v : dual.lineality) {
        std::vector<Rational> r(sp.lattice_dim());
        for (size_t c = 0; c < sp.lattice_dim(); ++c) r[c] = Rational(v[c]);
        span.push_back(std::move(r));
    }
    if (span.empty() || matrix_rank(std::move(span)) != sp.lattice_dim()) {
        out.pointed = false;
        out.issues.push_back("generated semigroup is not pointed (S and -S overlap)");
    }
    return out;
}

std::vector<Int> theta(const SemigroupPresentation& sp, const std::vector<Int>& nu) {
    if (nu.size() != sp.lattice_dim()) throw error("theta input dimension mismatch");
    std::vector<Int> mu(sp.variable_count(), 0);
    for (size_t k = 0; k < sp.variable_count(); ++k)
        for (size_t c = 0; c < sp.lattice_dim(); ++c) mu[k] += sp.generators()[k][c] * nu[c];
    return mu;
}

bool on_dual_locus(const SemigroupPresentation& sp, const std::vector<Int>& mu) {
    if (mu.size() != sp.variable_count()) throw error("dual locus input dimension mismatch");
    for (Int x : mu)
        if (x < 0) throw error("dual locus membership expects a nonnegative tuple");
    for (const auto& b : sp.binomials()) {
        Int sum = 0;
        for (size_t k = 0; k < mu.size(); ++k) sum += (b.alpha[k] - b.beta[k]) * mu[k];
        if (sum != 0) return false;
    }
    return true;
}

Int semigroup_codim(const SemigroupPresentation& sp, const std::vector<std::vector<Int>>& nus,
                    const ValueTuple& w) {
    if (nus.empty()) throw error("semigroup codim needs at least one valuation");
    if (w.size() != nus.size()) throw error("value tuple rank mismatch");
    const auto& gens = sp.generators();
    for (const auto& nu : nus) {
        if (nu.size() != sp.lattice_dim()) throw error("valuation dimension mismatch");
        for (const auto& s : gens) {
            Int v = 0;
            for (size_t c = 0; c < sp.lattice_dim(); ++c) v += s[c] * nu[c];
            if (v < 0) throw error("valuation is negative on a generator");
        }
    }
    for (size_t j = 0; j < nus.size(); ++j) {
        if (w[j] <= 0) continue;
        for (const auto& s : gens) {
            Int v = 0;
            for (size_t c = 0; c < sp.lattice_dim(); ++c) v += s[c] * nus[j][c];
            if (v == 0)
                throw error("count is infinite: no valuation positive on every generator");
        }
    }

    auto values = [&](const std::vector<Int>& s) {
        ValueTuple out(nus.size(), 0);
        for (size_t j = 0; j < nus.size(); ++j)
            for (size_t c = 0; c < sp.lattice_dim(); ++c) out[j] += s[c] * nus[j][c];
        return out;
    };
    auto counted = [&](const ValueTuple& vals) {
        for (size_t j = 0; j < vals.size(); ++j)
            if (vals[j] < w[j]) return true;
        return false;
    };

    std::set<std::vector<Int>> seen;
    std::deque<std::vector<Int>> queue;
    std::vector<Int> origin(sp.lattice_dim(), 0);
    if (!counted(values(origin))) return 0;
    seen.insert(origin);
    queue.push_back(origin);
    while (!queue.empty()) {
        std::vector<Int> s = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<Int> next(s);
            for (size_t c = 0; c < sp.lattice_dim(); ++c) next[c] += g[c];
            if (seen.count(next)) continue;
            if (!counted(values(next))) continue; // values only grow from here
            seen.insert(next);
            queue.push_back(next);
        }
    }
    return static_cast<Int>(seen.size());
}

TruncatedSeries semigroup_series(const SemigroupPresentation& sp,
                                 const std::vector<std::vector<Int>>& nus, const Box& box) {
    if (box.rank() != nus.size()) throw error("box rank mismatch");
    std::map<ValueTuple, Int> cache;
    auto codim = [&](const ValueTuple& w) {
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
        Int value = semigroup_codim(sp, nus, w);
        cache.emplace(w, value);
        return value;
    };
    return poincare_from_codims(codim, box, nus.size());
}

ToricComparison compare_toric(const SemigroupPresentation& sp,
                              const std::vector<std::vector<Int>>& nus, const Box& box) {
    ToricComparison out;
    if (sp.codim() != 1) {
        out.reason = "embedded comparison supports only hypersurface presentations (p = 1)";
        return out;
    }
    PresentationDiagnostics diag = validate_presentation(sp);
    if (!diag.valid()) {
        out.reason = "presentation is invalid: " + diag.issues.front();
        return out;
    }

    std::vector<WeightVector> mus;
    for (const auto& nu : nus) {
        std::vector<Int> mu = theta(sp, nu);
        if (std::any_of(mu.begin(), mu.end(), [](Int x) { return x <= 0; }))
            throw error("theta image is not centred at the maximal ideal; outside oracle scope");
        mus.emplace_back(mu);
    }
    ValuationSystem embedded_sys(sp.variable_count(), mus);

    const Binomial& b = sp.binomials()[0];
    Polynomial h(sp.variable_count());
    h.add_term(b.alpha, 1);
    h.add_term(b.beta, -1);

    TruncatedSeries semi = semigroup_series(sp, nus, box);
    TruncatedSeries embedded = oracle_series(embedded_sys, h, box);
    out.supported = true;
    out.equal = true;
    for (size_t idx = 0; idx < semi.cell_count(); ++idx) {
        ValueTuple v = semi.tuple_at(idx);
        if (semi.coefficient(v) != embedded.coefficient(v)) {
            out.equal = false;
            out.first_mismatch = v;
            break;
        }
    }
    return out;
}

} // namespace embfilt
