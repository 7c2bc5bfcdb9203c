#pragma once

#include "embfilt/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace embfilt {

using QMatrix = std::vector<std::vector<Rational>>;

size_t matrix_rank(QMatrix m);
Rational determinant(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);
// Solve a x = b for square a; nullopt when a is singular.
std::optional<std::vector<Rational>> solve_linear(QMatrix a, std::vector<Rational> b);

// Sparse integer row for filtration quotient computations; entries sorted by
// column, content-reduced between elimination steps.
struct SparseRow {
    std::vector<std::pair<int, BigInt>> entries;
};

void reduce_content(SparseRow& row);

// Rank of the rows as vectors; pivots on each row's least column, rows are
// consumed in the given order (deterministic output).
size_t sparse_rank(std::vector<SparseRow> rows);

// Rank of the rows projected onto the columns with keep[col] != 0.
size_t sparse_rank(const std::vector<SparseRow>& rows, const std::vector<char>& keep);

// Echelonize preferring pivots in kept columns. `inside` is an independent set
// of row-space vectors supported entirely outside the kept columns, i.e. a
// basis of rowspace ∩ span(dropped columns); kept_rank counts the other pivots.
struct SplitEchelon {
    size_t kept_rank = 0;
    std::vector<SparseRow> inside;
};
SplitEchelon split_echelon(const std::vector<SparseRow>& rows, const std::vector<char>& keep);

} // namespace embfilt
