#include "embfilt/ddcone.hpp"

#include <algorithm>

namespace embfilt {

namespace {

using Vec = std::vector<BigInt>;

BigInt dot(const Vec& a, const Vec& b) {
    BigInt s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void make_primitive(Vec& v) {
    BigInt g = 0;
    for (const BigInt& x : v) g = gcd(g, x);
    if (g > 1)
        for (BigInt& x : v) x /= g;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

using Mask = std::vector<uint64_t>;

bool subset(const Mask& a, const Mask& b) { // a ⊆ b
    for (size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

} // namespace

GeneratorDescription dual_description(const std::vector<std::vector<BigInt>>& rows, size_t n) {
    for (const auto& row : rows)
        if (row.size() != n) throw error("constraint dimension mismatch");

    std::vector<Vec> lineality;
    for (size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<Vec> rays;

    for (size_t step = 0; step < rows.size(); ++step) {
        const Vec& a = rows[step];

        size_t li = lineality.size();
        for (size_t j = 0; j < lineality.size(); ++j)
            if (dot(a, lineality[j]) != 0) {
                li = j;
                break;
            }

        if (li != lineality.size()) {
            // The constraint cuts the lineality space: one basis vector turns
            // into an extreme ray, everything else is projected into {a*y = 0}.
            Vec l = lineality[li];
            BigInt c = dot(a, l);
            if (c < 0) {
                for (BigInt& x : l) x = -x;
                c = -c;
            }
            std::vector<Vec> new_lineality;
            for (size_t j = 0; j < lineality.size(); ++j) {
                if (j == li) continue;
                BigInt s = dot(a, lineality[j]);
                Vec v(n);
                for (size_t k = 0; k < n; ++k) v[k] = lineality[j][k] * c - l[k] * s;
                make_primitive(v);
                new_lineality.push_back(std::move(v));
            }
            for (Vec& r : rays) {
                BigInt s = dot(a, r);
                if (s != 0) {
                    for (size_t k = 0; k < n; ++k) r[k] = r[k] * c - l[k] * s;
                    make_primitive(r);
                }
            }
            std::erase_if(rays, is_zero);
            rays.push_back(std::move(l));
            lineality = std::move(new_lineality);
            continue;
        }

        std::vector<BigInt> vals(rays.size());
        bool any_neg = false;
        for (size_t j = 0; j < rays.size(); ++j) {
            vals[j] = dot(a, rays[j]);
            if (vals[j] < 0) any_neg = true;
        }
        if (!any_neg) continue;

        // Tight-constraint masks over the steps processed so far; adjacency of
        // a positive/negative pair means no third ray is tight on their common
        // tight set.
        size_t words = step / 64 + 1;
        std::vector<Mask> masks(rays.size(), Mask(words, 0));
        for (size_t j = 0; j < rays.size(); ++j)
            for (size_t i = 0; i < step; ++i)
                if (dot(rows[i], rays[j]) == 0) masks[j][i / 64] |= uint64_t(1) << (i % 64);

        std::vector<Vec> next;
        for (size_t j = 0; j < rays.size(); ++j)
            if (vals[j] >= 0) next.push_back(rays[j]);

        for (size_t p = 0; p < rays.size(); ++p) {
            if (vals[p] <= 0) continue;
            for (size_t m = 0; m < rays.size(); ++m) {
                if (vals[m] >= 0) continue;
                Mask common(words);
                for (size_t w = 0; w < words; ++w) common[w] = masks[p][w] & masks[m][w];
                bool adjacent = true;
                for (size_t q = 0; q < rays.size(); ++q) {
                    if (q == p || q == m) continue;
                    if (subset(common, masks[q])) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Vec comb(n);
                for (size_t k = 0; k < n; ++k)
                    comb[k] = rays[p][k] * (-vals[m]) + rays[m][k] * vals[p];
                if (is_zero(comb)) continue;
                make_primitive(comb);
                next.push_back(std::move(comb));
            }
        }
        rays = std::move(next);
    }

    return {std::move(rays), std::move(lineality)};
}

} // namespace embfilt
