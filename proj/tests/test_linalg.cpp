#include <doctest.h>

#include "embfilt/linalg.hpp"

#include <random>

using namespace embfilt;

namespace {

QMatrix qm(std::vector<std::vector<int>> rows) {
    QMatrix out;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (int x : r) row.emplace_back(x);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

TEST_CASE("dense rank, determinant, inverse, solve") {
    CHECK(matrix_rank(qm({{1, 2}, {2, 4}})) == 1);
    CHECK(matrix_rank(qm({{1, 0}, {0, 1}, {1, 1}})) == 2);
    CHECK(determinant(qm({{-3, 0, 1}, {0, -2, 1}, {1, 1, -1}})) == -1);

    auto inv = inverse(qm({{-2, 1}, {1, -1}}));
    REQUIRE(inv.has_value());
    CHECK((*inv)[0][0] == -1);
    CHECK((*inv)[0][1] == -1);
    CHECK((*inv)[1][0] == -1);
    CHECK((*inv)[1][1] == -2);
    CHECK_FALSE(inverse(qm({{1, 2}, {2, 4}})).has_value());

    auto x = solve_linear(qm({{2, 1}, {1, 3}}), {Rational(5), Rational(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 3);
}

TEST_CASE("sparse rank agrees with dense rank on random integer matrices") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<int> size(1, 8);
    for (int trial = 0; trial < 80; ++trial) {
        size_t rows = static_cast<size_t>(size(rng)), cols = static_cast<size_t>(size(rng));
        std::vector<SparseRow> sparse(rows);
        QMatrix dense(rows, std::vector<Rational>(cols, 0));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                int v = val(rng);
                if (v == 0) continue;
                dense[i][j] = v;
                sparse[i].entries.emplace_back(static_cast<int>(j), BigInt(v));
            }
        CHECK(sparse_rank(sparse) == matrix_rank(dense));

        // projection rank equals the rank of the column submatrix
        std::vector<char> keep(cols, 0);
        for (size_t j = 0; j < cols; ++j) keep[j] = static_cast<char>(val(rng) > 0);
        QMatrix projected(rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                if (keep[j]) projected[i].push_back(dense[i][j]);
        if (!projected[0].empty())
            CHECK(sparse_rank(sparse, keep) == matrix_rank(projected));
        else
            CHECK(sparse_rank(sparse, keep) == 0);
    }
}

TEST_CASE("split_echelon partitions the row space") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> val(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        size_t rows = 6, cols = 7;
        std::vector<SparseRow> sparse(rows);
        QMatrix dense(rows, std::vector<Rational>(cols, 0));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                int v = val(rng);
                if (v == 0) continue;
                dense[i][j] = v;
                sparse[i].entries.emplace_back(static_cast<int>(j), BigInt(v));
            }
        std::vector<char> keep(cols, 0);
        for (size_t j = 0; j < cols; ++j) keep[j] = static_cast<char>(val(rng) > 0);

        SplitEchelon split = split_echelon(sparse, keep);
        CHECK(split.kept_rank + split.inside.size() == matrix_rank(dense));
        // inside rows live entirely outside the kept columns and are independent
        for (const auto& row : split.inside)
            for (const auto& [c, v] : row.entries) CHECK_FALSE(static_cast<bool>(keep[c]));
        CHECK(sparse_rank(split.inside) == split.inside.size());
        // kept_rank is the rank of the projection
        CHECK(split.kept_rank == sparse_rank(sparse, keep));
    }
}
