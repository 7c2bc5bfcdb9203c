#pragma once

#include "embfilt/lattice.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace embfilt {

// Componentwise inclusive truncation bounds.
struct Box {
    std::vector<Int> bound;

    explicit Box(std::vector<Int> b);
    size_t rank() const { return bound.size(); }

    bool operator==(const Box&) const = default;
};

// scalar * prod (1 - t^m)^e over integer exponent tuples m and integer powers
// e; the canonical carrier of P_X, P_V and zeta. Tuples are nonzero with
// nonnegative entries, powers are nonzero, duplicates merged.
class FactoredSeries {
public:
    explicit FactoredSeries(size_t rank, Rational scalar = 1);
    static FactoredSeries one(size_t rank) { return FactoredSeries(rank); }

    size_t rank() const { return rank_; }
    const Rational& scalar() const { return scalar_; }
    const std::map<std::vector<Int>, Int>& factors() const { return factors_; }

    void multiply_factor(const std::vector<Int>& m, Int e);
    void multiply_scalar(const Rational& c);
    FactoredSeries operator*(const FactoredSeries& other) const;

    bool operator==(const FactoredSeries&) const = default;

private:
    size_t rank_;
    Rational scalar_;
    std::map<std::vector<Int>, Int> factors_;
};

// Exact coefficient table on a box; absent cells are zero by construction.
class TruncatedSeries {
public:
    explicit TruncatedSeries(Box box);

    size_t rank() const { return box_.rank(); }
    const Box& box() const { return box_; }
    size_t cell_count() const { return data_.size(); }

    const Rational& coefficient(const ValueTuple& v) const;
    void set_coefficient(const ValueTuple& v, Rational c);

    ValueTuple tuple_at(size_t index) const;
    const std::vector<Rational>& data() const { return data_; }
    std::vector<Rational>& data() { return data_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    size_t offset_of(const ValueTuple& v) const;

    Box box_;
    std::vector<Int> strides_;
    std::vector<Rational> data_;
};

// Exact coefficients of the product on the box.
TruncatedSeries expand(const FactoredSeries& f, const Box& box);

// P_X for X = C^d: prod over variables k of (1 - t^(column k of the weight
// matrix))^-1. Errors out when some variable is invisible to every valuation.
FactoredSeries ambient_closed_form(const ValuationSystem& sys);

// (1 - t^{nu(h)}) * ambient_closed_form(sys), normalized.
FactoredSeries embedded_closed_form(const ValuationSystem& sys, const Polynomial& h);

// t_j -> t^{n_j}: each factor tuple m becomes the scalar sum n.m (rank 1).
FactoredSeries substitute_powers(const FactoredSeries& f, const std::vector<Int>& n);

struct DominantFactor {
    ValueTuple q;
    FactoredSeries remainder;
};

// The unique numerator tuple strictly above every other factor tuple, with one
// copy removed from the remainder. Ties or a missing maximum are errors.
DominantFactor extract_dominant_factor(const FactoredSeries& f);

// Coefficient table of the series whose coefficient at v is
//   (-1)^(r+1) * sum over A subset {1..r} of (-1)^|A| codim(v - 1_A + 1).
TruncatedSeries poincare_from_codims(const std::function<Int(const ValueTuple&)>& codim,
                                     const Box& box, size_t rank);

// Canonical text form, numerator factors first, each group ordered by tuple:
// "(1-t1^18*t2^24)^1 * (1-t1^2*t2^4)^-1 * (1-t1^3*t2^3)^-1".
std::string render_factored(const FactoredSeries& f);

} // namespace embfilt
