#pragma once

#include "embfilt/lattice.hpp"
#include "embfilt/parse.hpp"
#include "embfilt/series.hpp"

#include <map>
#include <random>

// Test-only utilities: brute-force reference computations kept independent of
// the library's evaluation paths, plus seeded generators for property tests.
namespace testutil {

using namespace embfilt;

inline Polynomial P(const std::string& text) { return parse_polynomial(text).poly; }

inline WeightVector W(std::vector<Int> entries) { return WeightVector(std::move(entries)); }

inline ValuationSystem sys2(std::vector<Int> a, std::vector<Int> b) {
    size_t d = a.size();
    return ValuationSystem(d, {WeightVector(std::move(a)), WeightVector(std::move(b))});
}

inline ValuationSystem sys1(std::vector<Int> a) {
    size_t d = a.size();
    return ValuationSystem(d, {WeightVector(std::move(a))});
}

// --- naive truncated series arithmetic over coefficient maps ---

using CoeffMap = std::map<ValueTuple, Rational>;

inline bool in_box(const ValueTuple& v, const Box& box) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0 || v[i] > box.bound[i]) return false;
    return true;
}

inline CoeffMap naive_multiply(const CoeffMap& a, const CoeffMap& b, const Box& box) {
    CoeffMap out;
    for (const auto& [va, ca] : a)
        for (const auto& [vb, cb] : b) {
            ValueTuple v(va.size());
            for (size_t i = 0; i < v.size(); ++i) v[i] = va[i] + vb[i];
            if (!in_box(v, box)) continue;
            out[v] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// Term-by-term reference expansion: negative powers via explicit geometric
// series, positive powers via explicit binomials.
inline CoeffMap naive_expand(const FactoredSeries& f, const Box& box) {
    CoeffMap acc;
    acc[ValueTuple(f.rank(), 0)] = f.scalar();
    for (const auto& [m, e] : f.factors()) {
        CoeffMap factor;
        if (e > 0) {
            factor[ValueTuple(f.rank(), 0)] = 1;
            ValueTuple mv(m);
            factor[mv] = -1;
            for (Int k = 0; k < e; ++k) acc = naive_multiply(acc, factor, box);
        } else {
            factor[ValueTuple(f.rank(), 0)] = 1;
            ValueTuple step(f.rank(), 0);
            while (true) {
                for (size_t i = 0; i < step.size(); ++i) step[i] += m[i];
                if (!in_box(step, box)) break;
                factor[step] = 1;
            }
            for (Int k = 0; k < -e; ++k) acc = naive_multiply(acc, factor, box);
        }
    }
    return acc;
}

inline CoeffMap to_map(const TruncatedSeries& s) {
    CoeffMap out;
    for (size_t idx = 0; idx < s.cell_count(); ++idx) {
        ValueTuple v = s.tuple_at(idx);
        if (s.coefficient(v) != 0) out[v] = s.coefficient(v);
    }
    return out;
}

// --- seeded generators ---

inline Polynomial random_poly(std::mt19937_64& rng, size_t dim, int max_terms, Int max_exp,
                              bool vanish_at_origin) {
    std::uniform_int_distribution<Int> exp_dist(0, max_exp);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    std::uniform_int_distribution<int> terms_dist(1, max_terms);
    while (true) {
        Polynomial p(dim);
        int terms = terms_dist(rng);
        for (int t = 0; t < terms; ++t) {
            Exponents e(dim);
            for (size_t i = 0; i < dim; ++i) e[i] = exp_dist(rng);
            if (vanish_at_origin && std::all_of(e.begin(), e.end(), [](Int x) { return x == 0; }))
                continue;
            int c = coeff_dist(rng);
            if (c == 0) c = 1;
            p.add_term(e, c);
        }
        if (!p.is_zero()) return p;
    }
}

inline WeightVector random_weights(std::mt19937_64& rng, size_t dim, Int lo, Int hi) {
    std::uniform_int_distribution<Int> dist(lo, hi);
    while (true) {
        std::vector<Int> w(dim);
        for (auto& x : w) x = dist(rng);
        if (std::any_of(w.begin(), w.end(), [](Int x) { return x != 0; })) return WeightVector(w);
    }
}

} // namespace testutil
