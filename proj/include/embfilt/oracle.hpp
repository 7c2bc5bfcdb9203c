#pragma once

#include "embfilt/lattice.hpp"
#include "embfilt/linalg.hpp"
#include "embfilt/series.hpp"

#include <map>
#include <optional>
#include <vector>

namespace embfilt {

// Monomial basis of O/M(w): monomials m with nu_j(m) < w_j for some j.
// Requires every valuation in the system to have strictly positive weights
// (the oracle scope), which makes the basis finite with no truncation error.
struct QuotientModel {
    ValuationSystem sys;
    ValueTuple bound;
    std::vector<Exponents> basis; // sorted by total degree, then lexicographic
    std::map<Exponents, size_t> index;
};

QuotientModel quotient_basis(const ValuationSystem& sys, const ValueTuple& w);

Int codim_m(const ValuationSystem& sys, const ValueTuple& w);

// dim O/(M(w)+(h)), exact: the h-multiples meeting O/M(w) are x^a h for a in
// the basis of O/M(w - nu(h)), and their images span the image of (h).
Int codim_j(const ValuationSystem& sys, const Polynomial& h, const ValueTuple& w);

// Coefficient of the embedded Poincare series at v, by the inclusion-exclusion
// over subsets of {1..r}.
Int embedded_coefficient(const ValuationSystem& sys, const Polynomial& h, const ValueTuple& v);
TruncatedSeries oracle_series(const ValuationSystem& sys, const Polynomial& h, const Box& box);

Int ambient_coefficient(const ValuationSystem& sys, const ValueTuple& v);
TruncatedSeries ambient_oracle_series(const ValuationSystem& sys, const Box& box);

enum class ConditionVerdict { ConsistentAtTruncation, Violated };

struct LemmaReport {
    ConditionVerdict intersection_condition; // J(v1) ∩ J(v2) = J(max) side
    ConditionVerdict ideal_sum_condition;    // (M(v1)+M(v2))∩(h) = sum of meets side
    bool agree = false;
};

struct BistellarWitness {
    WeightVector normal_i, normal_j; // compact facets with disjoint face supports
    Polynomial face_part;            // part of h supported on facet i
};

// Finite-level checker for the lattice-compatibility condition of the embedded
// ideals J(v) = M(v)+(h); keeps one elimination context per truncation tuple.
class ConditionChecker {
public:
    ConditionChecker(ValuationSystem sys, Polynomial h);

    const ValueTuple& germ_values() const { return q_; }
    ValueTuple default_truncation(const ValueTuple& v1, const ValueTuple& v2) const;

    // Verdict at the truncation; a violation is re-confirmed at trunc plus one
    // and two escalation margins (margin = q + 2) before being reported.
    ConditionVerdict check(const ValueTuple& v1, const ValueTuple& v2,
                           const std::optional<ValueTuple>& trunc = std::nullopt,
                           int escalations = 2);

    // Both Lemma-equivalent conditions evaluated independently at the same
    // truncation.
    LemmaReport check_lemma(const ValueTuple& v1, const ValueTuple& v2,
                            const std::optional<ValueTuple>& trunc = std::nullopt);

private:
    struct Context {
        QuotientModel model;
        std::vector<std::vector<Int>> column_values; // nu_j(basis[col]) per column
        std::vector<SparseRow> h_rows;               // images of x^a h
        size_t h_rank = 0;
        std::map<ValueTuple, size_t> rkout_cache;
        std::map<ValueTuple, std::vector<SparseRow>> meet_cache;
    };

    Context& context(const ValueTuple& trunc);
    std::vector<char> kept_mask(const Context& ctx, const ValueTuple& v1,
                                const ValueTuple* v2) const;
    size_t rkout(Context& ctx, const ValueTuple& v);
    ConditionVerdict verdict_at(Context& ctx, const ValueTuple& v1, const ValueTuple& v2);

    ValuationSystem sys_;
    Polynomial h_;
    ValueTuple q_;
    std::map<ValueTuple, Context> contexts_;
};

ConditionVerdict check_condition(const ValuationSystem& sys, const Polynomial& h,
                                 const ValueTuple& v1, const ValueTuple& v2,
                                 const std::optional<ValueTuple>& trunc = std::nullopt);

LemmaReport check_lemma_equivalence(const ValuationSystem& sys, const Polynomial& h,
                                    const ValueTuple& v1, const ValueTuple& v2,
                                    const std::optional<ValueTuple>& trunc = std::nullopt);

// Two compact facets of the Newton polyhedron of h whose face supports are
// disjoint, if any; nullopt exactly when the Newton polytope is bi-stellar.
std::optional<BistellarWitness> nonbistellar_witness(const Polynomial& h);

} // namespace embfilt
