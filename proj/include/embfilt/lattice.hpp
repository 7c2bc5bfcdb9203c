#pragma once

#include "embfilt/numeric.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace embfilt {

// A lattice point in Z^d_{>=0}: the exponent vector of a monomial.
using Exponents = std::vector<Int>;
// A point of Z^r indexing the multi-index filtration.
using ValueTuple = std::vector<Int>;

// Nonnegative integer weights defining a monomial valuation
// nu(x^e) = <weights, e>. Never all zero.
class WeightVector {
public:
    explicit WeightVector(std::vector<Int> entries);

    size_t dim() const { return entries_.size(); }
    Int operator[](size_t i) const { return entries_[i]; }
    const std::vector<Int>& entries() const { return entries_; }

    bool all_positive() const;
    bool is_primitive() const;
    WeightVector primitive() const;

    auto operator<=>(const WeightVector&) const = default;

private:
    std::vector<Int> entries_;
};

// Ordered list nu_1..nu_r of monomial valuations on d variables.
class ValuationSystem {
public:
    ValuationSystem(size_t dim, std::vector<WeightVector> valuations);

    size_t dim() const { return dim_; }
    size_t rank() const { return valuations_.size(); }
    const WeightVector& valuation(size_t j) const { return valuations_[j]; }
    const std::vector<WeightVector>& valuations() const { return valuations_; }

    // Every valuation centred at the maximal ideal (all weights > 0).
    bool all_positive() const;

    auto operator<=>(const ValuationSystem&) const = default;

private:
    size_t dim_;
    std::vector<WeightVector> valuations_;
};

// Multivariate polynomial with exact rational coefficients. No zero
// coefficient is ever stored; the support is exactly the key set.
class Polynomial {
public:
    explicit Polynomial(size_t dim);
    static Polynomial monomial(Exponents e, Rational c = 1);

    size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& c) const;

    bool vanishes_at_origin() const;

    bool operator==(const Polynomial&) const = default;

private:
    size_t dim_;
    std::map<Exponents, Rational> terms_;
};

Int valuate_monomial(const WeightVector& w, const Exponents& e);

// Minimum of valuate_monomial over the support; nullopt (= infinity) for the
// zero polynomial.
std::optional<Int> valuate_polynomial(const WeightVector& w, const Polynomial& p);

// Componentwise valuate_polynomial; this is q when p is the germ h.
ValueTuple value_tuple(const ValuationSystem& sys, const Polynomial& p);

} // namespace embfilt
