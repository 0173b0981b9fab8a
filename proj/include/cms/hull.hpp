#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "cms/errors.hpp"
#include "cms/exponent.hpp"
#include "cms/rational.hpp"

namespace cms {

/// Phase-one simplex with Bland's rule: decides whether `target` is a convex
/// combination of `generators`. Exact rational arithmetic throughout.
inline bool in_convex_hull(const std::vector<Exponent>& generators, const Exponent& target) {
    if (generators.empty()) return false;
    const int d = target.size();
    const std::size_t rows = d + 1;
    const std::size_t nvars = generators.size();
    const std::size_t cols = nvars + rows;  // structural + artificial
    // Tableau rows: [coefficients | rhs].
    std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < nvars; ++c)
            tab[r][c] = r < static_cast<std::size_t>(d) ? generators[c][static_cast<int>(r)] : 1;
        tab[r][cols] = r < static_cast<std::size_t>(d) ? target[static_cast<int>(r)] : 1;
        if (tab[r][cols] < 0)
            for (std::size_t c = 0; c <= cols; ++c) tab[r][c] = -tab[r][c];
        tab[r][nvars + r] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = nvars + r;
    // Reduced costs of the phase-one objective sum(artificials).
    std::vector<Rational> cost(cols + 1);
    for (std::size_t c = 0; c < nvars; ++c)
        for (std::size_t r = 0; r < rows; ++r) cost[c] -= tab[r][c];
    for (std::size_t r = 0; r < rows; ++r) cost[cols] -= tab[r][cols];

    Rational t;
    while (true) {
        std::size_t enter = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (cost[c] < 0) {
                enter = c;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (tab[r][enter] <= 0) continue;
            Rational ratio = tab[r][cols] / tab[r][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded direction; cannot happen for phase one
        const Rational inv = 1 / tab[leave][enter];
        for (auto& x : tab[leave]) x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            const Rational f = tab[r][enter];
            for (std::size_t c = 0; c <= cols; ++c)
                if (tab[leave][c] != 0) {
                    t = f * tab[leave][c];
                    tab[r][c] -= t;
                }
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t c = 0; c <= cols; ++c)
                if (tab[leave][c] != 0) {
                    t = f * tab[leave][c];
                    cost[c] -= t;
                }
        }
        basis[leave] = enter;
    }
    return cost[cols] == 0;
}

/// Drops generators that are convex combinations of the others.
inline std::vector<Exponent> extreme_points(std::vector<Exponent> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Exponent> kept = points;
    for (std::size_t t = 0; t < kept.size();) {
        std::vector<Exponent> others;
        others.reserve(kept.size() - 1);
        for (std::size_t s = 0; s < kept.size(); ++s)
            if (s != t) others.push_back(kept[s]);
        if (!others.empty() && in_convex_hull(others, kept[t]))
            kept.erase(kept.begin() + static_cast<long>(t));
        else
            ++t;
    }
    return kept;
}

/// All integer points of the convex hull of `points`, sorted. Candidates are
/// drawn from the bounding box restricted to the range of total degrees.
inline std::vector<Exponent> hull_lattice_points(const std::vector<Exponent>& points) {
    if (points.empty()) throw InvalidArgument("hull_lattice_points: empty input");
    const int d = points.front().size();
    for (const auto& p : points)
        if (p.size() != d) throw InvalidArgument("hull_lattice_points: inconsistent lengths");
    std::set<Exponent> input(points.begin(), points.end());
    std::vector<Exponent> gens = extreme_points(points);
    Exponent lo = points.front(), hi = points.front();
    long dmin = points.front().total_degree(), dmax = dmin;
    for (const auto& p : points) {
        for (int t = 0; t < d; ++t) {
            lo[t] = std::min(lo[t], p[t]);
            hi[t] = std::max(hi[t], p[t]);
        }
        dmin = std::min(dmin, p.total_degree());
        dmax = std::max(dmax, p.total_degree());
    }
    std::vector<Exponent> out;
    if (d == 0) return {points.front()};
    Exponent cur = lo;
    while (true) {
        const long deg = cur.total_degree();
        if (deg >= dmin && deg <= dmax && (input.count(cur) || in_convex_hull(gens, cur))) out.push_back(cur);
        int t = d - 1;
        while (t >= 0 && cur[t] == hi[t]) {
            cur[t] = lo[t];
            --t;
        }
        if (t < 0) break;
        ++cur[t];
    }
    return out;
}

}  // namespace cms
