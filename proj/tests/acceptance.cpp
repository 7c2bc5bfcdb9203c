// Acceptance suite: one line per criterion, nonzero exit on any failure.
// --seed N reseeds the randomized corpus (criterion 2).

#include "embfilt/curve.hpp"
#include "embfilt/newton.hpp"
#include "embfilt/oracle.hpp"
#include "embfilt/parse.hpp"
#include "embfilt/series.hpp"
#include "embfilt/toric.hpp"
#include "embfilt/zeta.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace embfilt;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
        body();
    } catch (const std::exception& e) {
        problem = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && budget_seconds > 0 && elapsed > budget_seconds) {
        std::ostringstream os;
        os << "exceeded the " << budget_seconds << " s budget";
        problem = os.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << number << " [" << label << "]: "
         << (problem.empty() ? "PASS" : "FAIL") << " (" << elapsed << " s)";
    if (!problem.empty()) line << " -- " << problem;
    std::cout << line.str() << "\n";
    if (!problem.empty()) ++failures;
}

void require(bool condition, const std::string& message) {
    if (!condition) throw error(message);
}

Polynomial poly(const std::string& text) { return parse_polynomial(text).poly; }

ValuationSystem system_of(std::vector<std::vector<Int>> rows) {
    size_t dim = rows[0].size();
    std::vector<WeightVector> vals;
    for (auto& r : rows) vals.emplace_back(std::move(r));
    return ValuationSystem(dim, std::move(vals));
}

// --- criterion bodies ---

void example1_coefficient() {
    ValuationSystem sys = system_of({{2, 3}, {4, 3}});
    Polynomial h = poly("x^6*y^2 + y^8");
    Box box({20, 28});

    TruncatedSeries closed = expand(embedded_closed_form(sys, h), box);
    require(closed.coefficient({20, 28}) == 0, "closed-form coefficient at (20,28) is nonzero");

    TruncatedSeries oracle = oracle_series(sys, h, box);
    require(oracle.coefficient({20, 28}) == 0, "oracle coefficient at (20,28) is nonzero");

    Polynomial fibre_member = Polynomial::monomial({4, 4});
    require(value_tuple(sys, fibre_member) == ValueTuple{20, 28},
            "x^4 y^4 does not have value tuple (20,28)");
}

void theorem1_random_corpus(uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> weight(1, 5);
    std::uniform_int_distribution<Int> exponent(0, 5);
    std::uniform_int_distribution<int> coefficient(-3, 3);
    std::uniform_int_distribution<int> term_count(1, 5);

    int done = 0;
    while (done < 20) {
        size_t rank = 1 + (rng() % 2);
        std::vector<std::vector<Int>> rows;
        for (size_t j = 0; j < rank; ++j) rows.push_back({weight(rng), weight(rng)});
        ValuationSystem sys = system_of(std::move(rows));

        Polynomial h(2);
        int terms = term_count(rng);
        for (int t = 0; t < terms; ++t) {
            Exponents e{exponent(rng), exponent(rng)};
            if (e[0] == 0 && e[1] == 0) continue;
            int c = coefficient(rng);
            h.add_term(e, c == 0 ? 1 : c);
        }
        if (h.is_zero()) continue;

        Box box(std::vector<Int>(rank, 12));
        TruncatedSeries oracle = oracle_series(sys, h, box);
        TruncatedSeries closed = expand(embedded_closed_form(sys, h), box);
        if (!(oracle == closed)) {
            std::ostringstream os;
            os << "case " << done << " (" << render_polynomial(h, {"x", "y"})
               << "): oracle and closed form differ";
            throw error(os.str());
        }
        ++done;
    }
}

ConditionChecker bistellar_checker() {
    return ConditionChecker(system_of({{1, 1}, {1, 2}}), poly("x^4 + x^2*y + y^3"));
}

ConditionChecker witness_checker() {
    return ConditionChecker(system_of({{1, 2}, {2, 3}, {2, 1}}),
                            poly("x^6 + x^4*y + x*y^3 + y^5"));
}

void proposition_both_directions(ConditionChecker& bistellar, ConditionChecker& witness) {
    Polynomial h = poly("x^4 + x^2*y + y^3");
    require(is_bistellar(newton_polyhedron(h)), "x^4+x^2*y+y^3 should be bi-stellar");
    for (Int a1 = 0; a1 <= 8; ++a1)
        for (Int a2 = 0; a2 <= 8; ++a2)
            for (Int b1 = 0; b1 <= 8; ++b1)
                for (Int b2 = 0; b2 <= 8; ++b2) {
                    if (bistellar.check({a1, a2}, {b1, b2}) != ConditionVerdict::ConsistentAtTruncation) {
                        std::ostringstream os;
                        os << "violation reported at v1=(" << a1 << "," << a2 << "), v2=(" << b1
                           << "," << b2 << ")";
                        throw error(os.str());
                    }
                }

    Polynomial bad = poly("x^6 + x^4*y + x*y^3 + y^5");
    require(!is_bistellar(newton_polyhedron(bad)), "x^6+x^4*y+x*y^3+y^5 should not be bi-stellar");
    require(witness.check({6, 11, 9}, {7, 11, 5}) == ConditionVerdict::Violated,
            "witness pair (6,11,9), (7,11,5) was not reported violated");
}

void lemma_agreement(ConditionChecker& bistellar, ConditionChecker& witness) {
    for (Int a1 = 0; a1 <= 8; ++a1)
        for (Int a2 = 0; a2 <= 8; ++a2)
            for (Int b1 = 0; b1 <= 8; ++b1)
                for (Int b2 = 0; b2 <= 8; ++b2) {
                    LemmaReport report = bistellar.check_lemma({a1, a2}, {b1, b2});
                    if (!report.agree) {
                        std::ostringstream os;
                        os << "lemma verdicts disagree at v1=(" << a1 << "," << a2 << "), v2=("
                           << b1 << "," << b2 << ")";
                        throw error(os.str());
                    }
                }
    LemmaReport report = witness.check_lemma({6, 11, 9}, {7, 11, 5});
    require(report.agree, "lemma verdicts disagree at the witness pair");
    require(report.intersection_condition == ConditionVerdict::Violated,
            "witness pair not violated in the lemma check");
}

void cusp_pipeline() {
    ResolutionGraph cusp({1, 2, 3}, {{-3, 0, 1}, {0, -2, 1}, {1, 1, -1}}, {{3, 1}});
    FactoredSeries expected(1);
    expected.multiply_factor({6}, 1);
    expected.multiply_factor({2}, -1);
    expected.multiply_factor({3}, -1);

    FactoredSeries from_graph = embedded_series_from_graph(cusp);
    require(from_graph == expected, "graph series differs from (1-t^6)/((1-t^2)(1-t^3))");

    ValuationSystem sys = system_of({{3, 2}});
    Polynomial h = poly("x^2 + y^3");
    Box box({30});
    require(oracle_series(sys, h, box) == expand(expected, box),
            "oracle on box 30 differs from the closed form");

    FactoredSeries acampo = acampo_zeta(cusp);
    require(acampo == expected, "A'Campo zeta differs");

    FactoredSeries from_embedded = zeta_from_embedded(from_graph, {1}, {6});
    require(from_embedded == expected, "zeta from the embedded series differs");

    require(compare_zeta(varchenko_zeta(h), expected), "Newton-polyhedron zeta differs");
}

void theorem2_inverse() {
    ResolutionGraph cusp({1, 2, 3}, {{-3, 0, 1}, {0, -2, 1}, {1, 1, -1}}, {{3, 1}});
    RecoveredData rec = extract_and_recover(embedded_series_from_graph(cusp), cusp);
    require(rec.q == ValueTuple{6} && rec.n == std::vector<Int>{1},
            "cusp recovery expected q=(6), n=(1)");

    ResolutionGraph lines({1}, {{-1}}, {{1, 2}});
    RecoveredData rec2 = extract_and_recover(embedded_series_from_graph(lines), lines);
    require(rec2.q == ValueTuple{2} && rec2.n == std::vector<Int>{2},
            "two-line recovery expected q=(2), n=(2)");
}

void theorem3_toric() {
    SemigroupPresentation sp(1, 1, {{2}, {3}}, {Binomial{{3, 0}, {0, 2}}});
    Box box({20});
    ToricComparison cmp = compare_toric(sp, {{1}}, box);
    require(cmp.supported, "comparison unexpectedly unsupported");
    require(cmp.equal, "semigroup series differs from the embedded oracle");

    // the embedded side is h = x1^3 - x2^2 with weights theta(1) = (2,3)
    ValuationSystem mu = system_of({{2, 3}});
    Polynomial h(2);
    h.add_term({3, 0}, 1);
    h.add_term({0, 2}, -1);
    require(semigroup_series(sp, {{1}}, box) == oracle_series(mu, h, box),
            "explicit oracle comparison differs");
}

void newton_reconstruction() {
    for (const char* text :
         {"x^2 + y^3", "x^6*y^2 + y^8", "x^4 + x^2*y + y^3", "x^6 + x^4*y + x*y^3 + y^5"}) {
        Polynomial h = poly(text);
        NewtonPolyhedron np = newton_polyhedron(h);
        NewtonPolyhedron back = recover_newton(2, facet_valuations(np, true));
        if (!equal_polyhedra(back, np))
            throw error(std::string("round trip failed for ") + text);
    }
    require(render_factored(varchenko_zeta(poly("x^2 + y^2"))) == "1",
            "zeta of x^2+y^2 should be 1");
    require(render_factored(varchenko_zeta(poly("x^5"))) == "(1-t^5)^-1",
            "zeta of x^5 should be 1/(1-t^5)");
}

} // namespace

int main(int argc, char** argv) {
    uint64_t seed = 20260810;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::strtoull(argv[i + 1], nullptr, 10);
            ++i;
        } else {
            std::cerr << "usage: acceptance [--seed N]\n";
            return 2;
        }
    }

    criterion(1, "worked example, coefficient (20,28)", 10.0, example1_coefficient);
    criterion(2, "principal-ideal series identity, 20 random cases", 60.0,
              [seed] { theorem1_random_corpus(seed); });

    // checkers shared between criteria 3 and 4 so the lemma re-uses the grid
    ConditionChecker bistellar = bistellar_checker();
    ConditionChecker witness = witness_checker();
    criterion(3, "ideal-intersection condition, both directions", 0.0,
              [&] { proposition_both_directions(bistellar, witness); });
    criterion(4, "lemma equivalence on the same grid", 0.0,
              [&] { lemma_agreement(bistellar, witness); });

    criterion(5, "cusp pipeline across five routes", 10.0, cusp_pipeline);
    criterion(6, "series-to-graph data recovery", 0.0, theorem2_inverse);
    criterion(7, "semigroup vs embedded series", 0.0, theorem3_toric);
    criterion(8, "Newton polyhedron reconstruction and zetas", 0.0, newton_reconstruction);

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " criterion(s) failed\n";
    return 1;
}
