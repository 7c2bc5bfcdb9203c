#include "embfilt/linalg.hpp"

#include <map>

namespace embfilt {

namespace {

// Column of the first nonzero entry at or after `col` in any row below `row`.
size_t find_pivot(const QMatrix& m, size_t row, size_t col) {
    for (size_t i = row; i < m.size(); ++i)
        if (m[i][col] != 0) return i;
    return m.size();
}

} // namespace

size_t matrix_rank(QMatrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t p = find_pivot(m, rank, col);
        if (p == rows) continue;
        std::swap(m[rank], m[p]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

Rational determinant(QMatrix m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw error("determinant of a non-square matrix");
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t p = find_pivot(m, col, col);
        if (p == n) return 0;
        if (p != col) {
            std::swap(m[col], m[p]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[col][col];
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    size_t n = m.size();
    QMatrix aug(n, std::vector<Rational>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw error("inverse of a non-square matrix");
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t p = find_pivot(aug, col, col);
        if (p == n) return std::nullopt;
        std::swap(aug[col], aug[p]);
        Rational inv = 1 / aug[col][col];
        for (auto& x : aug[col]) x *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (size_t j = col; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    QMatrix out(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

std::optional<std::vector<Rational>> solve_linear(QMatrix a, std::vector<Rational> b) {
    size_t n = a.size();
    if (b.size() != n) throw error("solve_linear size mismatch");
    for (size_t col = 0; col < n; ++col) {
        size_t p = find_pivot(a, col, col);
        if (p == n) return std::nullopt;
        std::swap(a[col], a[p]);
        std::swap(b[col], b[p]);
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    std::vector<Rational> x(n, 0);
    for (size_t i = n; i-- > 0;) {
        Rational s = b[i];
        for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

void reduce_content(SparseRow& row) {
    BigInt g = 0;
    for (const auto& [c, v] : row.entries) g = gcd(g, v);
    if (g == 0) return;
    if (row.entries.front().second < 0) g = -g;
    if (g == 1) return;
    for (auto& [c, v] : row.entries) v /= g;
}

namespace {

// r := r*pv - p*rv, where both rows currently start at the same column.
SparseRow combine(const SparseRow& r, const SparseRow& p) {
    const BigInt& rv = r.entries.front().second;
    const BigInt& pv = p.entries.front().second;
    SparseRow out;
    out.entries.reserve(r.entries.size() + p.entries.size());
    size_t i = 0, j = 0;
    while (i < r.entries.size() || j < p.entries.size()) {
        if (j == p.entries.size() ||
            (i < r.entries.size() && r.entries[i].first < p.entries[j].first)) {
            out.entries.emplace_back(r.entries[i].first, r.entries[i].second * pv);
            ++i;
        } else if (i == r.entries.size() || p.entries[j].first < r.entries[i].first) {
            out.entries.emplace_back(p.entries[j].first, -p.entries[j].second * rv);
            ++j;
        } else {
            BigInt v = r.entries[i].second * pv - p.entries[j].second * rv;
            if (v != 0) out.entries.emplace_back(r.entries[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    reduce_content(out);
    return out;
}

size_t eliminate(std::vector<SparseRow> rows, std::map<int, SparseRow>* pivots_out) {
    std::map<int, SparseRow> pivots;
    for (auto& row : rows) {
        reduce_content(row);
        while (!row.entries.empty()) {
            auto it = pivots.find(row.entries.front().first);
            if (it == pivots.end()) break;
            row = combine(row, it->second);
        }
        if (!row.entries.empty()) {
            int col = row.entries.front().first;
            pivots.emplace(col, std::move(row));
        }
    }
    size_t rank = pivots.size();
    if (pivots_out) *pivots_out = std::move(pivots);
    return rank;
}

} // namespace

size_t sparse_rank(std::vector<SparseRow> rows) {
    return eliminate(std::move(rows), nullptr);
}

size_t sparse_rank(const std::vector<SparseRow>& rows, const std::vector<char>& keep) {
    std::vector<SparseRow> projected;
    projected.reserve(rows.size());
    for (const auto& row : rows) {
        SparseRow pr;
        for (const auto& [c, v] : row.entries)
            if (keep[c]) pr.entries.emplace_back(c, v);
        if (!pr.entries.empty()) projected.push_back(std::move(pr));
    }
    return eliminate(std::move(projected), nullptr);
}

SplitEchelon split_echelon(const std::vector<SparseRow>& rows, const std::vector<char>& keep) {
    // Remap so kept columns sort before dropped ones; pivots then land in a
    // kept column whenever the row touches one.
    constexpr int kOffset = 1 << 24;
    std::vector<SparseRow> remapped;
    remapped.reserve(rows.size());
    for (const auto& row : rows) {
        SparseRow rr;
        rr.entries.reserve(row.entries.size());
        for (const auto& [c, v] : row.entries) {
            if (c >= kOffset) throw error("column index out of range");
            rr.entries.emplace_back(keep[c] ? c : c + kOffset, v);
        }
        std::sort(rr.entries.begin(), rr.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        remapped.push_back(std::move(rr));
    }
    std::map<int, SparseRow> pivots;
    eliminate(std::move(remapped), &pivots);
    SplitEchelon out;
    for (auto& [col, row] : pivots) {
        if (col < kOffset) {
            ++out.kept_rank;
        } else {
            for (auto& [c, v] : row.entries) c -= kOffset;
            out.inside.push_back(std::move(row));
        }
    }
    return out;
}

} // namespace embfilt
