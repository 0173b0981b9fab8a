#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cms/hull.hpp"
#include "cms/laurent.hpp"
#include "cms/matrix.hpp"
#include "cms/operators.hpp"

namespace cms {

/// lambda_1 >= ... >= lambda_n and lambda_{n+1} >= ... >= lambda_{n+m}.
inline bool is_dominant(const Exponent& e, Shape shape) {
    for (int t = 0; t + 1 < shape.n; ++t)
        if (e[t] < e[t + 1]) return false;
    for (int t = shape.n; t + 1 < shape.vars(); ++t)
        if (e[t] < e[t + 1]) return false;
    return true;
}

/// The dominant representative of the S_n x S_m orbit of e.
inline Exponent dominant_representative(Exponent e, Shape shape) {
    std::sort(e.begin(), e.begin() + shape.n, std::greater<>());
    std::sort(e.begin() + shape.n, e.end(), std::greater<>());
    return e;
}

/// All distinct S_n x S_m images of e, sorted.
inline std::vector<Exponent> weyl_orbit(const Exponent& e, Shape shape) {
    Exponent base = e;
    std::sort(base.begin(), base.begin() + shape.n);
    std::sort(base.begin() + shape.n, base.end());
    std::vector<Exponent> out;
    Exponent x = base;
    do {
        Exponent y = x;
        do {
            out.push_back(y);
        } while (std::next_permutation(y.begin() + shape.n, y.end()));
    } while (std::next_permutation(x.begin(), x.begin() + shape.n));
    std::sort(out.begin(), out.end());
    return out;
}

/// Monomial symmetric function: the orbit sum of x^e.
inline LaurentPoly orbit_sum(const Exponent& e, Shape shape) {
    std::vector<Term> terms;
    for (const auto& x : weyl_orbit(e, shape)) terms.push_back({x, 1});
    return LaurentPoly::from_terms(shape, std::move(terms));
}

/// Result of a quasi-invariance test. On failure exactly one witness is set:
/// a violated adjacent transposition (variables t, t+1) or a violated
/// hyperplane pair (x-index i, y-index j), all 0-based.
struct QuasiInvarianceReport {
    bool ok = true;
    std::optional<std::pair<int, int>> transposition;
    std::optional<std::pair<int, int>> hyperplane;

    explicit operator bool() const noexcept { return ok; }
};

/// The polynomial (x_i d/dx_i - k y_j d/dy_j) f restricted to x_i = y_j.
inline LaurentPoly quasi_invariance_defect(const LaurentPoly& f, int i, int j, const DeformedParams& params) {
    const int y = params.n + j;
    return substitute_equal(f.euler(i) - params.k * f.euler(y), i, y);
}

inline QuasiInvarianceReport is_quasi_invariant(const LaurentPoly& f, const DeformedParams& params) {
    params.validate();
    if (f.shape() != params.shape()) throw InvalidArgument("is_quasi_invariant: shape mismatch");
    QuasiInvarianceReport rep;
    const Shape s = params.shape();
    for (int t = 0; t + 1 < s.vars(); ++t) {
        if (t + 1 == s.n) continue;  // x/y boundary is not a symmetry
        if (f.swapped(t, t + 1) != f) {
            rep.ok = false;
            rep.transposition = {t, t + 1};
            return rep;
        }
    }
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.m; ++j)
            if (!quasi_invariance_defect(f, i, j, params).is_zero()) {
                rep.ok = false;
                rep.hyperplane = {i, j};
                return rep;
            }
    return rep;
}

/// Exponents of f that are maximal for the dominance order.
inline std::vector<Exponent> max_exponents(const LaurentPoly& f) {
    if (f.is_zero()) throw InvalidArgument("max_exponents of the zero polynomial");
    std::vector<Exponent> out;
    const auto exps = f.exponents();
    for (const auto& e : exps) {
        bool maximal = true;
        for (const auto& o : exps)
            if (o != e && dominance_leq(e, o)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(e);
    }
    return out;
}

namespace detail {

/// Alternant det(x_a^{exps_b}) over the variables `vars` of `shape`.
inline LaurentPoly alternant(Shape shape, const std::vector<int>& vars, const std::vector<int>& exps) {
    const int r = static_cast<int>(vars.size());
    std::vector<int> perm(r);
    for (int t = 0; t < r; ++t) perm[t] = t;
    std::vector<Term> terms;
    do {
        int inversions = 0;
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b)
                if (perm[a] > perm[b]) ++inversions;
        Exponent e(shape.vars());
        for (int a = 0; a < r; ++a) e[vars[a]] += exps[perm[a]];
        terms.push_back({e, inversions % 2 ? -1 : 1});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return LaurentPoly::from_terms(shape, std::move(terms));
}

/// Schur Laurent polynomial s_mu in the variables `vars` via the bialternant.
inline LaurentPoly schur_laurent(Shape shape, const std::vector<int>& vars, const std::vector<int>& mu) {
    const int r = static_cast<int>(vars.size());
    if (r == 0) return LaurentPoly::constant(shape, 1);
    std::vector<int> shifted(r);
    for (int a = 0; a < r; ++a) shifted[a] = mu[a] + r - 1 - a;
    LaurentPoly num = alternant(shape, vars, shifted);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            auto q = divide_by_difference(num, vars[a], vars[b]);
            if (!q) throw Error("InternalError", "alternant not divisible by Vandermonde factor");
            num = std::move(*q);
        }
    return num;
}

}  // namespace detail

/// s_mu(x) s_nu(y) prod_{i,j} (1 - y_j/x_i)^2 for a dominant weight
/// lambda = (mu | nu). Quasi-invariant for every k with unique top term x^lambda.
inline LaurentPoly schur_generator(const Exponent& lambda, const DeformedParams& params) {
    params.validate();
    const Shape s = params.shape();
    if (lambda.size() != s.vars()) throw InvalidArgument("schur_generator: weight length mismatch");
    if (!is_dominant(lambda, s)) throw InvalidArgument("schur_generator: weight " + lambda.to_string() + " is not dominant");
    std::vector<int> xs, ys, mu, nu;
    for (int t = 0; t < s.n; ++t) {
        xs.push_back(t);
        mu.push_back(lambda[t]);
    }
    for (int t = s.n; t < s.vars(); ++t) {
        ys.push_back(t);
        nu.push_back(lambda[t]);
    }
    LaurentPoly g = detail::schur_laurent(s, xs, mu) * detail::schur_laurent(s, ys, nu);
    for (int i = 0; i < s.n; ++i)
        for (int j = s.n; j < s.vars(); ++j) {
            Exponent e(s.vars());
            e[j] = 1;
            e[i] = -1;
            LaurentPoly factor = LaurentPoly::constant(s, 1) - LaurentPoly::monomial(s, e);
            g = g * factor * factor;
        }
    return g;
}

/// Finite-dimensional space V = {g in A_{n,m} : S(g) inside `support`}.
///
/// `reps` lists the dominant weights of the support in the canonical column
/// order (decreasing along a linear extension of dominance). Each row of
/// `coords` gives an element in orbit-sum coordinates over `reps`; the rows
/// are in reduced echelon form, `pivot[e]` being the column of element e's
/// leading (dominance-maximal) rep, normalized to coefficient 1. Elements are
/// ordered by their leading exponent, lexicographically.
struct SubspaceBasis {
    DeformedParams params;
    std::vector<Exponent> support;
    std::vector<Exponent> reps;
    std::vector<LaurentPoly> elements;
    std::vector<Vector> coords;
    std::vector<std::size_t> pivot;

    std::size_t dim() const noexcept { return elements.size(); }
    const Exponent& leading(std::size_t e) const { return reps[pivot[e]]; }
};

/// Closes the seed under S_n x S_m and the hull, then solves the
/// quasi-invariance conditions on orbit-sum coefficients exactly.
inline SubspaceBasis invariant_subspace_basis(const std::vector<Exponent>& seed, const DeformedParams& params) {
    params.validate();
    if (seed.empty()) throw InvalidArgument("invariant_subspace_basis: empty seed");
    const Shape s = params.shape();
    std::set<Exponent> closed;
    for (const auto& e : seed) {
        if (e.size() != s.vars()) throw InvalidArgument("seed exponent length mismatch");
        for (const auto& x : weyl_orbit(e, s)) closed.insert(x);
    }
    SubspaceBasis basis;
    basis.params = params;
    basis.support = hull_lattice_points(std::vector<Exponent>(closed.begin(), closed.end()));
    for (const auto& e : basis.support)
        if (is_dominant(e, s)) basis.reps.push_back(e);
    std::sort(basis.reps.begin(), basis.reps.end(),
              [](const Exponent& a, const Exponent& b) { return dominance_linear_less(b, a); });
    const std::size_t nreps = basis.reps.size();

    std::vector<LaurentPoly> orbit(nreps);
    for (std::size_t c = 0; c < nreps; ++c) orbit[c] = orbit_sum(basis.reps[c], s);

    // One equation per (hyperplane pair, restricted monomial).
    std::map<std::pair<int, Exponent>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> entries;
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.m; ++j) {
            const int pair_id = i * s.m + j;
            for (std::size_t c = 0; c < nreps; ++c) {
                LaurentPoly defect = quasi_invariance_defect(orbit[c], i, j, params);
                for (const auto& t : defect.terms()) {
                    auto key = std::make_pair(pair_id, t.exp);
                    auto it = row_of.find(key);
                    if (it == row_of.end()) {
                        it = row_of.emplace(key, entries.size()).first;
                        entries.emplace_back();
                    }
                    entries[it->second].push_back({c, t.coef});
                }
            }
        }
    ExactMatrix system(entries.size(), nreps);
    for (std::size_t r = 0; r < entries.size(); ++r)
        for (const auto& [c, v] : entries[r]) system(r, c) += v;
    std::vector<Vector> kernel = nullspace(system);
    if (kernel.empty()) return basis;

    EchelonForm ech = rref(ExactMatrix::from_rows(nreps, kernel));
    std::vector<std::size_t> order(ech.pivots.size());
    for (std::size_t e = 0; e < order.size(); ++e) order[e] = e;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return basis.reps[ech.pivots[a]] < basis.reps[ech.pivots[b]];
    });
    for (std::size_t e : order) {
        Vector v = ech.reduced.row(e);
        LaurentPoly g(s);
        for (std::size_t c = 0; c < nreps; ++c)
            if (v[c] != 0) g += v[c] * orbit[c];
        basis.elements.push_back(std::move(g));
        basis.coords.push_back(std::move(v));
        basis.pivot.push_back(ech.pivots[e]);
    }
    return basis;
}

inline SubspaceBasis invariant_subspace_basis(const LaurentPoly& f, const DeformedParams& params) {
    return invariant_subspace_basis(f.exponents(), params);
}

/// Orbit-sum coordinates of a symmetric g over `reps`, or nullopt when g is
/// not a combination of those orbit sums.
inline std::optional<Vector> orbit_coordinates(const LaurentPoly& g, const SubspaceBasis& basis) {
    const Shape s = basis.params.shape();
    Vector c(basis.reps.size());
    std::map<Exponent, std::size_t> col;
    for (std::size_t t = 0; t < basis.reps.size(); ++t) col.emplace(basis.reps[t], t);
    for (const auto& t : g.terms()) {
        auto it = col.find(dominant_representative(t.exp, s));
        if (it == col.end()) return std::nullopt;
        if (t.exp == it->first) c[it->second] = t.coef;
    }
    LaurentPoly rebuilt(s);
    for (std::size_t t = 0; t < c.size(); ++t)
        if (c[t] != 0) rebuilt += c[t] * orbit_sum(basis.reps[t], s);
    if (rebuilt != g) return std::nullopt;
    return c;
}

/// Expansion of g over the basis elements; nullopt if g leaves the span.
inline std::optional<Vector> expand_in_basis(const LaurentPoly& g, const SubspaceBasis& basis) {
    auto c = orbit_coordinates(g, basis);
    if (!c) return std::nullopt;
    Vector a(basis.dim());
    Vector residual = *c;
    for (std::size_t e = 0; e < basis.dim(); ++e) {
        a[e] = residual[basis.pivot[e]];
        if (a[e] == 0) continue;
        for (std::size_t t = 0; t < residual.size(); ++t)
            if (basis.coords[e][t] != 0) residual[t] -= a[e] * basis.coords[e][t];
    }
    for (const auto& r : residual)
        if (r != 0) return std::nullopt;
    return a;
}

}  // namespace cms
