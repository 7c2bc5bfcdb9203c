#pragma once

#include "embfilt/lattice.hpp"
#include "embfilt/series.hpp"

#include <map>
#include <vector>

namespace embfilt {

// Dual graph of an embedded resolution: exceptional divisors with their
// intersection matrix and the strict-transform arrow counts. Validation order:
// shape, symmetry, connectivity, negative definiteness, unimodularity,
// positivity of the curvette matrix M = -I^{-1}.
class ResolutionGraph {
public:
    ResolutionGraph(std::vector<Int> vertex_ids, std::vector<std::vector<Int>> intersection,
                    std::map<Int, Int> arrows);

    size_t size() const { return ids_.size(); }
    const std::vector<Int>& ids() const { return ids_; }
    const std::vector<std::vector<Int>>& intersection_matrix() const { return intersection_; }
    Int arrows(size_t vertex) const { return arrows_[vertex]; }
    const std::vector<Int>& arrow_counts() const { return arrows_; }

    // Vertices whose divisor meets the strict transform (n > 0), ascending.
    std::vector<size_t> rees_set() const;
    size_t valence(size_t vertex) const;

private:
    std::vector<Int> ids_;
    std::vector<std::vector<Int>> intersection_;
    std::vector<Int> arrows_;
};

// M = -I^{-1}; entries are the curvette values m_{sigma,tau} = nu_tau(C_sigma).
std::vector<std::vector<Int>> curvette_matrix(const ResolutionGraph& g);

struct EulerNumbers {
    std::vector<Int> bullet; // chi of E_sigma minus other exceptional components
    std::vector<Int> circ;   // additionally minus the strict-transform points
};
EulerNumbers euler_numbers(const ResolutionGraph& g);

// P_X over the valuations indexed by `subset`:
// prod over all sigma of (1 - t^{(m_{sigma,j})_{j in subset}})^{-chi_bullet}.
FactoredSeries ambient_series_from_graph(const ResolutionGraph& g, const std::vector<size_t>& subset);

// q_i = sum_j n_j m_{i,j} for i in subset (defaults to the Rees set).
ValueTuple q_vector(const ResolutionGraph& g, const std::vector<size_t>& subset);
ValueTuple q_vector(const ResolutionGraph& g);

// (1 - t^q) * P_X over the Rees valuations.
FactoredSeries embedded_series_from_graph(const ResolutionGraph& g);

// prod over all sigma of (1 - t^{q_sigma})^{-chi_circ}, q_sigma = sum n_j m_{sigma,j}.
FactoredSeries acampo_zeta(const ResolutionGraph& g);

// zeta(t) = P_V(t^{n_1},..,t^{n_r}) * prod (1-t^{q_j})^{n_j} / (1-t^{sum n_j q_j}).
FactoredSeries zeta_from_embedded(const FactoredSeries& pv, const std::vector<Int>& n,
                                  const ValueTuple& q);

struct RecoveredData {
    ValueTuple q;
    std::vector<Int> n;
};

// Reads q off the dominant factor of P_V and solves q = M_R n over the Rees
// block; fails loudly on non-integral or negative solutions.
RecoveredData extract_and_recover(const FactoredSeries& pv, const ResolutionGraph& g);

} // namespace embfilt
