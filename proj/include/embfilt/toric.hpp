#pragma once

#include "embfilt/lattice.hpp"
#include "embfilt/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace embfilt {

// x^alpha - x^beta in d+p variables.
struct Binomial {
    Exponents alpha, beta;
};

// Generators s_1..s_{d+p} of a pointed affine semigroup S in Z^d together with
// the p difference binomials presenting Spec C[S] as a complete intersection.
class SemigroupPresentation {
public:
    SemigroupPresentation(size_t d, size_t p, std::vector<std::vector<Int>> generators,
                          std::vector<Binomial> binomials);

    size_t lattice_dim() const { return d_; }
    size_t codim() const { return p_; }
    size_t variable_count() const { return d_ + p_; }
    const std::vector<std::vector<Int>>& generators() const { return generators_; }
    const std::vector<Binomial>& binomials() const { return binomials_; }

private:
    size_t d_, p_;
    std::vector<std::vector<Int>> generators_;
    std::vector<Binomial> binomials_;
};

struct PresentationDiagnostics {
    bool degrees_match = true;
    bool supports_disjoint = true;
    bool pointed = true;
    std::vector<std::string> issues;

    bool valid() const { return degrees_match && supports_disjoint && pointed; }
};

// Checks deg(x^alpha) = deg(x^beta) per binomial, support disjointness, and
// pointedness of the cone spanned by the generators.
PresentationDiagnostics validate_presentation(const SemigroupPresentation& sp);

// mu^k = <s_k, nu>; lands on the dual locus H* by construction.
std::vector<Int> theta(const SemigroupPresentation& sp, const std::vector<Int>& nu);

// Membership in H*: all p linear equations sum (alpha_k - beta_k) mu^k vanish.
bool on_dual_locus(const SemigroupPresentation& sp, const std::vector<Int>& mu);

// #{s in S : <s, nu_j> < w_j for some j}, S enumerated by generator sums.
Int semigroup_codim(const SemigroupPresentation& sp, const std::vector<std::vector<Int>>& nus,
                    const ValueTuple& w);

TruncatedSeries semigroup_series(const SemigroupPresentation& sp,
                                 const std::vector<std::vector<Int>>& nus, const Box& box);

struct ToricComparison {
    bool supported = false;
    std::string reason; // set when unsupported
    bool equal = false;
    std::optional<ValueTuple> first_mismatch;
};

// Semigroup-side series against the embedded filtration oracle on C^{d+p}
// with valuations theta(nu_j) and the binomial ideal; restricted to p = 1.
ToricComparison compare_toric(const SemigroupPresentation& sp,
                              const std::vector<std::vector<Int>>& nus, const Box& box);

} // namespace embfilt
