#pragma once

#include "embfilt/curve.hpp"
#include "embfilt/lattice.hpp"
#include "embfilt/newton.hpp"
#include "embfilt/series.hpp"
#include "embfilt/toric.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace embfilt {

struct ParsedPolynomial {
    Polynomial poly;
    std::vector<std::string> variables;
};

// Grammar: optional first line "vars: x, y, ..."; then a sum of terms
// "[+-] [coeff] var[^exp] ..." with rational coefficients ("3/2"), '*'
// optional, '^1' optional. Without the header the variables are the
// identifiers that occur, in alphabetical order. Syntax errors carry
// line and column.
ParsedPolynomial parse_polynomial(const std::string& text);

// "2,3;4,3" -> valuations (2,3) and (4,3).
std::vector<WeightVector> parse_weight_list(const std::string& text);
// "20,28" -> {20, 28}
std::vector<Int> parse_int_tuple(const std::string& text);

std::string render_polynomial(const Polynomial& p, const std::vector<std::string>& variables);
std::string render_tuple(const std::vector<Int>& v);
std::string render_polyhedron(const NewtonPolyhedron& np);

nlohmann::ordered_json polyhedron_to_json(const NewtonPolyhedron& np);
nlohmann::ordered_json series_to_json(const FactoredSeries& f);
FactoredSeries series_from_json(const nlohmann::json& j);
nlohmann::ordered_json truncated_to_json(const TruncatedSeries& s);
ResolutionGraph graph_from_json(const nlohmann::json& j);
nlohmann::ordered_json graph_to_json(const ResolutionGraph& g);
SemigroupPresentation presentation_from_json(const nlohmann::json& j);
nlohmann::ordered_json presentation_to_json(const SemigroupPresentation& sp);

} // namespace embfilt
