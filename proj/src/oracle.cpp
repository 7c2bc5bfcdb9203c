#include "embfilt/oracle.hpp"

#include "embfilt/newton.hpp"

#include <algorithm>
#include <functional>

namespace embfilt {

namespace {

void require_oracle_scope(const ValuationSystem& sys) {
    if (!sys.all_positive())
        throw error("oracle requires all valuations centred at the maximal ideal "
                    "(strictly positive weights)");
}

bool degree_lex_less(const Exponents& a, const Exponents& b) {
    Int da = 0, db = 0;
    for (Int x : a) da += x;
    for (Int x : b) db += x;
    if (da != db) return da < db;
    return a < b;
}

// h with integer, content-free coefficients; scaling does not change (h).
std::vector<std::pair<Exponents, BigInt>> integer_form(const Polynomial& h) {
    BigInt den_lcm = 1;
    for (const auto& [e, c] : h.terms()) den_lcm = lcm(den_lcm, denominator(c));
    BigInt num_gcd = 0;
    for (const auto& [e, c] : h.terms()) num_gcd = gcd(num_gcd, numerator(c) * (den_lcm / denominator(c)));
    std::vector<std::pair<Exponents, BigInt>> out;
    for (const auto& [e, c] : h.terms())
        out.emplace_back(e, numerator(c) * (den_lcm / denominator(c)) / num_gcd);
    return out;
}

ValueTuple clamp_nonnegative(ValueTuple v) {
    for (Int& x : v) x = std::max<Int>(x, 0);
    return v;
}

ValueTuple componentwise_max(const ValueTuple& a, const ValueTuple& b) {
    ValueTuple out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

// Image of x^a * h in the span of the basis; terms outside fall into M(w).
SparseRow shifted_row(const std::vector<std::pair<Exponents, BigInt>>& h_terms,
                      const Exponents& a, const std::map<Exponents, size_t>& index) {
    SparseRow row;
    for (const auto& [e, c] : h_terms) {
        Exponents shifted(e.size());
        for (size_t i = 0; i < e.size(); ++i) shifted[i] = e[i] + a[i];
        auto it = index.find(shifted);
        if (it != index.end()) row.entries.emplace_back(static_cast<int>(it->second), c);
    }
    std::sort(row.entries.begin(), row.entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return row;
}

void check_germ(const ValuationSystem& sys, const Polynomial& h) {
    if (h.is_zero()) throw error("germ must be nonzero");
    if (h.dim() != sys.dim()) throw error("germ dimension mismatch");
    if (!h.vanishes_at_origin()) throw error("germ must vanish at the origin");
}

} // namespace

QuotientModel quotient_basis(const ValuationSystem& sys, const ValueTuple& w) {
    require_oracle_scope(sys);
    if (w.size() != sys.rank()) throw error("value tuple rank mismatch");

    std::set<Exponents> points;
    Exponents current(sys.dim(), 0);
    for (size_t j = 0; j < sys.rank(); ++j) {
        if (w[j] <= 0) continue;
        const WeightVector& nu = sys.valuation(j);
        const Int bound = w[j] - 1;
        // all e >= 0 with <nu, e> <= bound
        std::function<void(size_t, Int)> enumerate = [&](size_t i, Int left) {
            if (i == sys.dim()) {
                points.insert(current);
                return;
            }
            for (Int k = 0; k * nu[i] <= left; ++k) {
                current[i] = k;
                enumerate(i + 1, left - k * nu[i]);
            }
            current[i] = 0;
        };
        enumerate(0, bound);
    }

    QuotientModel model{sys, w, {points.begin(), points.end()}, {}};
    std::sort(model.basis.begin(), model.basis.end(), degree_lex_less);
    for (size_t i = 0; i < model.basis.size(); ++i) model.index.emplace(model.basis[i], i);
    return model;
}

Int codim_m(const ValuationSystem& sys, const ValueTuple& w) {
    return static_cast<Int>(quotient_basis(sys, w).basis.size());
}

Int codim_j(const ValuationSystem& sys, const Polynomial& h, const ValueTuple& w) {
    check_germ(sys, h);
    QuotientModel model = quotient_basis(sys, w);
    if (model.basis.empty()) return 0;

    ValueTuple q = value_tuple(sys, h);
    ValueTuple shift_bound(w.size());
    for (size_t j = 0; j < w.size(); ++j) shift_bound[j] = w[j] - q[j];
    QuotientModel shifts = quotient_basis(sys, shift_bound);

    auto h_terms = integer_form(h);
    std::vector<SparseRow> rows;
    rows.reserve(shifts.basis.size());
    for (const auto& a : shifts.basis) {
        SparseRow row = shifted_row(h_terms, a, model.index);
        if (!row.entries.empty()) rows.push_back(std::move(row));
    }
    return static_cast<Int>(model.basis.size()) - static_cast<Int>(sparse_rank(std::move(rows)));
}

namespace {

Int inclusion_exclusion(const std::function<Int(const ValueTuple&)>& codim, const ValueTuple& v) {
    const size_t r = v.size();
    const Int outer = (r % 2 == 1) ? 1 : -1;
    Int sum = 0;
    for (size_t subset = 0; subset < (size_t(1) << r); ++subset) {
        ValueTuple w(v);
        int bits = 0;
        for (size_t j = 0; j < r; ++j) {
            w[j] += 1;
            if (subset & (size_t(1) << j)) {
                w[j] -= 1;
                ++bits;
            }
        }
        Int term = codim(w);
        sum += (bits % 2 == 0) ? term : -term;
    }
    return outer * sum;
}

} // namespace

Int embedded_coefficient(const ValuationSystem& sys, const Polynomial& h, const ValueTuple& v) {
    check_germ(sys, h);
    return inclusion_exclusion([&](const ValueTuple& w) { return codim_j(sys, h, w); }, v);
}

TruncatedSeries oracle_series(const ValuationSystem& sys, const Polynomial& h, const Box& box) {
    check_germ(sys, h);
    if (box.rank() != sys.rank()) throw error("box rank mismatch");
    std::map<ValueTuple, Int> cache;
    auto codim = [&](const ValueTuple& w) {
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
        Int value = codim_j(sys, h, w);
        cache.emplace(w, value);
        return value;
    };
    return poincare_from_codims(codim, box, sys.rank());
}

Int ambient_coefficient(const ValuationSystem& sys, const ValueTuple& v) {
    return inclusion_exclusion([&](const ValueTuple& w) { return codim_m(sys, w); }, v);
}

TruncatedSeries ambient_oracle_series(const ValuationSystem& sys, const Box& box) {
    if (box.rank() != sys.rank()) throw error("box rank mismatch");
    std::map<ValueTuple, Int> cache;
    auto codim = [&](const ValueTuple& w) {
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
        Int value = codim_m(sys, w);
        cache.emplace(w, value);
        return value;
    };
    return poincare_from_codims(codim, box, sys.rank());
}

ConditionChecker::ConditionChecker(ValuationSystem sys, Polynomial h)
    : sys_(std::move(sys)), h_(std::move(h)), q_() {
    require_oracle_scope(sys_);
    check_germ(sys_, h_);
    q_ = value_tuple(sys_, h_);
}

ValueTuple ConditionChecker::default_truncation(const ValueTuple& v1, const ValueTuple& v2) const {
    ValueTuple m = componentwise_max(clamp_nonnegative(v1), clamp_nonnegative(v2));
    for (size_t j = 0; j < m.size(); ++j) m[j] += q_[j] + 1;
    return m;
}

ConditionChecker::Context& ConditionChecker::context(const ValueTuple& trunc) {
    auto it = contexts_.find(trunc);
    if (it != contexts_.end()) return it->second;

    Context ctx{quotient_basis(sys_, trunc), {}, {}, 0, {}, {}};
    ctx.column_values.resize(ctx.model.basis.size());
    for (size_t c = 0; c < ctx.model.basis.size(); ++c) {
        std::vector<Int> vals(sys_.rank());
        for (size_t j = 0; j < sys_.rank(); ++j)
            vals[j] = valuate_monomial(sys_.valuation(j), ctx.model.basis[c]);
        ctx.column_values[c] = std::move(vals);
    }
    ValueTuple shift_bound(trunc.size());
    for (size_t j = 0; j < trunc.size(); ++j) shift_bound[j] = trunc[j] - q_[j];
    QuotientModel shifts = quotient_basis(sys_, shift_bound);
    auto h_terms = integer_form(h_);
    for (const auto& a : shifts.basis) {
        SparseRow row = shifted_row(h_terms, a, ctx.model.index);
        if (!row.entries.empty()) ctx.h_rows.push_back(std::move(row));
    }
    ctx.h_rank = sparse_rank(ctx.h_rows, std::vector<char>(ctx.model.basis.size(), 1));
    return contexts_.emplace(trunc, std::move(ctx)).first->second;
}

// Columns outside the spanned monomial set: for a single tuple the monomials
// with nu_j < v_j for some j; for a pair, outside both spans.
std::vector<char> ConditionChecker::kept_mask(const Context& ctx, const ValueTuple& v1,
                                              const ValueTuple* v2) const {
    std::vector<char> keep(ctx.model.basis.size(), 0);
    auto outside = [&](const std::vector<Int>& vals, const ValueTuple& v) {
        for (size_t j = 0; j < v.size(); ++j)
            if (vals[j] < v[j]) return true;
        return false;
    };
    for (size_t c = 0; c < keep.size(); ++c) {
        bool k = outside(ctx.column_values[c], v1);
        if (k && v2) k = outside(ctx.column_values[c], *v2);
        keep[c] = static_cast<char>(k);
    }
    return keep;
}

size_t ConditionChecker::rkout(Context& ctx, const ValueTuple& v) {
    auto it = ctx.rkout_cache.find(v);
    if (it != ctx.rkout_cache.end()) return it->second;
    size_t rank = sparse_rank(ctx.h_rows, kept_mask(ctx, v, nullptr));
    ctx.rkout_cache.emplace(v, rank);
    return rank;
}

ConditionVerdict ConditionChecker::verdict_at(Context& ctx, const ValueTuple& v1,
                                              const ValueTuple& v2) {
    // dim(image J(v1) ∩ image J(v2)) - dim(image J(max)) reduces to a rank
    // inequality of h-row projections.
    size_t r1 = rkout(ctx, v1);
    size_t r2 = rkout(ctx, v2);
    size_t runion = sparse_rank(ctx.h_rows, kept_mask(ctx, v1, &v2));
    size_t rmax = rkout(ctx, componentwise_max(v1, v2));
    if (r1 + r2 < runion + rmax) throw error("internal: intersection dimension below maximum");
    return (r1 + r2 - runion > rmax) ? ConditionVerdict::Violated
                                     : ConditionVerdict::ConsistentAtTruncation;
}

ConditionVerdict ConditionChecker::check(const ValueTuple& v1, const ValueTuple& v2,
                                         const std::optional<ValueTuple>& trunc, int escalations) {
    ValueTuple a = clamp_nonnegative(v1), b = clamp_nonnegative(v2);
    if (a.size() != sys_.rank() || b.size() != sys_.rank()) throw error("value tuple rank mismatch");
    ValueTuple base = trunc ? *trunc : default_truncation(a, b);
    ValueTuple floor = default_truncation(a, b);
    for (size_t j = 0; j < base.size(); ++j)
        if (base[j] < floor[j]) throw error("truncation below max(v1,v2) + q + 1");

    ValueTuple level = base;
    for (int round = 0; round <= escalations; ++round) {
        if (verdict_at(context(level), a, b) == ConditionVerdict::ConsistentAtTruncation)
            return ConditionVerdict::ConsistentAtTruncation;
        for (size_t j = 0; j < level.size(); ++j) level[j] += q_[j] + 2;
    }
    return ConditionVerdict::Violated;
}

LemmaReport ConditionChecker::check_lemma(const ValueTuple& v1, const ValueTuple& v2,
                                          const std::optional<ValueTuple>& trunc) {
    ValueTuple a = clamp_nonnegative(v1), b = clamp_nonnegative(v2);
    ValueTuple level = trunc ? *trunc : default_truncation(a, b);
    Context& ctx = context(level);

    LemmaReport report;
    report.intersection_condition = verdict_at(ctx, a, b);

    // Second condition, via explicit subspaces of the h-row space: rows
    // supported inside span(S) are a basis of rowspace ∩ span(S).
    auto meet_basis = [&](const ValueTuple& v) -> const std::vector<SparseRow>& {
        auto it = ctx.meet_cache.find(v);
        if (it != ctx.meet_cache.end()) return it->second;
        SplitEchelon split = split_echelon(ctx.h_rows, kept_mask(ctx, v, nullptr));
        if (split.kept_rank + split.inside.size() != ctx.h_rank)
            throw error("internal: echelon split lost rank");
        return ctx.meet_cache.emplace(v, std::move(split.inside)).first->second;
    };
    SplitEchelon lhs = split_echelon(ctx.h_rows, kept_mask(ctx, a, &b));
    std::vector<SparseRow> stacked = meet_basis(a);
    const auto& mb = meet_basis(b);
    stacked.insert(stacked.end(), mb.begin(), mb.end());
    size_t rhs_dim = sparse_rank(std::move(stacked));
    if (rhs_dim > lhs.inside.size()) throw error("internal: sum of meets exceeds meet of sum");
    report.ideal_sum_condition = (lhs.inside.size() > rhs_dim)
                                     ? ConditionVerdict::Violated
                                     : ConditionVerdict::ConsistentAtTruncation;
    report.agree = report.intersection_condition == report.ideal_sum_condition;
    return report;
}

ConditionVerdict check_condition(const ValuationSystem& sys, const Polynomial& h,
                                 const ValueTuple& v1, const ValueTuple& v2,
                                 const std::optional<ValueTuple>& trunc) {
    ConditionChecker checker(sys, h);
    return checker.check(v1, v2, trunc);
}

LemmaReport check_lemma_equivalence(const ValuationSystem& sys, const Polynomial& h,
                                    const ValueTuple& v1, const ValueTuple& v2,
                                    const std::optional<ValueTuple>& trunc) {
    ConditionChecker checker(sys, h);
    return checker.check_lemma(v1, v2, trunc);
}

std::optional<BistellarWitness> nonbistellar_witness(const Polynomial& h) {
    NewtonPolyhedron np = newton_polyhedron(h);
    auto compact = np.compact_facet_ids();
    if (compact.empty()) throw error("polyhedron has no compact facet");
    std::vector<Polynomial> faces;
    faces.reserve(compact.size());
    for (size_t id : compact) faces.push_back(face_polynomial(h, np.facets()[id].normal));
    for (size_t i = 0; i < compact.size(); ++i)
        for (size_t j = i + 1; j < compact.size(); ++j) {
            bool disjoint = true;
            for (const auto& [e, c] : faces[i].terms())
                if (faces[j].terms().count(e)) {
                    disjoint = false;
                    break;
                }
            if (disjoint)
                return BistellarWitness{np.facets()[compact[i]].normal,
                                        np.facets()[compact[j]].normal, faces[i]};
        }
    return std::nullopt;
}

} // namespace embfilt
