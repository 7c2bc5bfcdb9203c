#include "embfilt/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace embfilt {

WeightVector::WeightVector(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw error("weight vector needs at least one entry");
    bool nonzero = false;
    for (Int a : entries_) {
        if (a < 0) throw error("weight vector entries must be nonnegative");
        if (a > 0) nonzero = true;
    }
    if (!nonzero) throw error("weight vector must not be zero");
}

bool WeightVector::all_positive() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Int a) { return a > 0; });
}

bool WeightVector::is_primitive() const {
    Int g = 0;
    for (Int a : entries_) g = std::gcd(g, a);
    return g == 1;
}

WeightVector WeightVector::primitive() const {
    Int g = 0;
    for (Int a : entries_) g = std::gcd(g, a);
    std::vector<Int> scaled = entries_;
    for (Int& a : scaled) a /= g;
    return WeightVector(std::move(scaled));
}

ValuationSystem::ValuationSystem(size_t dim, std::vector<WeightVector> valuations)
    : dim_(dim), valuations_(std::move(valuations)) {
    if (dim_ == 0) throw error("valuation system needs dimension >= 1");
    if (valuations_.empty()) throw error("valuation system needs rank >= 1");
    for (const auto& w : valuations_)
        if (w.dim() != dim_) throw error("valuation dimension mismatch");
}

bool ValuationSystem::all_positive() const {
    return std::all_of(valuations_.begin(), valuations_.end(),
                       [](const WeightVector& w) { return w.all_positive(); });
}

Polynomial::Polynomial(size_t dim) : dim_(dim) {
    if (dim_ == 0) throw error("polynomial needs dimension >= 1");
}

Polynomial Polynomial::monomial(Exponents e, Rational c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != dim_) throw error("exponent dimension mismatch");
    for (Int k : e)
        if (k < 0) throw error("exponents must be nonnegative");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (dim_ != other.dim_) throw error("polynomial dimension mismatch");
    Polynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + other.scaled(-1);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (dim_ != other.dim_) throw error("polynomial dimension mismatch");
    Polynomial out(dim_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            Exponents e(dim_);
            for (size_t i = 0; i < dim_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(dim_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
    return out;
}

bool Polynomial::vanishes_at_origin() const {
    return terms_.find(Exponents(dim_, 0)) == terms_.end();
}

Int valuate_monomial(const WeightVector& w, const Exponents& e) {
    if (w.dim() != e.size()) throw error("dimension mismatch in valuation");
    Int v = 0;
    for (size_t i = 0; i < e.size(); ++i) v += w[i] * e[i];
    return v;
}

std::optional<Int> valuate_polynomial(const WeightVector& w, const Polynomial& p) {
    if (w.dim() != p.dim()) throw error("dimension mismatch in valuation");
    std::optional<Int> best;
    for (const auto& [e, c] : p.terms()) {
        Int v = valuate_monomial(w, e);
        if (!best || v < *best) best = v;
    }
    return best;
}

ValueTuple value_tuple(const ValuationSystem& sys, const Polynomial& p) {
    if (p.is_zero()) throw error("value tuple of the zero polynomial");
    ValueTuple out;
    out.reserve(sys.rank());
    for (const auto& w : sys.valuations()) out.push_back(*valuate_polynomial(w, p));
    return out;
}

} // namespace embfilt
