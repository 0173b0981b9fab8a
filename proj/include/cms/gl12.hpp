#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cms/laurent.hpp"
#include "cms/localized.hpp"
#include "cms/operators.hpp"
#include "cms/quasi_invariants.hpp"
#include "cms/spectral.hpp"

namespace cms::gl12 {

/// One x and one y variable at k = -1/2.
inline DeformedParams params() { return DeformedParams(1, 1, make_rational(-1, 2)); }
inline Shape shape() { return {1, 1}; }

inline LaurentPoly mono(int i, int j, const Rational& c = 1) { return LaurentPoly::monomial(shape(), {i, j}, c); }

/// x^i y^j - (2i+j)/(2i+j-1) x^{i-1} y^{j+1}, defined for 2i + j != 1.
inline LaurentPoly phi(int i, int j) {
    const int s = 2 * i + j;
    if (s == 1) throw InvalidArgument("phi(i, j) needs 2i + j != 1");
    return mono(i, j) - mono(i - 1, j + 1, make_rational(s, s - 1));
}

/// x^i y^{-2i}.
inline LaurentPoly phi_diag(int i) { return mono(i, -2 * i); }

/// x^{i+1} y^{-1-2i} + x^{i-1} y^{1-2i}.
inline LaurentPoly psi(int i) { return mono(i + 1, -1 - 2 * i) + mono(i - 1, 1 - 2 * i); }

inline Rational lambda(int i, int j) { return Rational(i * (i - 1)) - make_rational(j * (j + 1), 2); }

inline Rational mu(int i, int j) {
    const Rational I = i, J = j;
    return I * I * I + J * J * J / 4 - Rational(3, 2) * (I * I - J * J / 4) + Rational(3, 4) * (I + J / 2);
}

/// d^3_x + 1/4 d^3_y - 3/2 (x+y)/(x-y) (d^2_x - 1/4 d^2_y)
///   + 3/4 (x^2+4xy+y^2)/(x-y)^2 (d_x + 1/2 d_y), d the Euler derivatives.
/// Everything is put over (x-y)^2 and divided back exactly twice.
inline LaurentPoly l3_explicit(const LaurentPoly& f) {
    if (f.shape() != shape()) throw InvalidArgument("l3_explicit acts on (n, m) = (1, 1)");
    const LaurentPoly fx = f.euler(0), fy = f.euler(1);
    const LaurentPoly fxx = fx.euler(0), fyy = fy.euler(1);
    const LaurentPoly t1 = fxx.euler(0) + Rational(1, 4) * fyy.euler(1);
    const LaurentPoly t2 = fxx - Rational(1, 4) * fyy;
    const LaurentPoly t3 = fx + Rational(1, 2) * fy;
    const LaurentPoly x = mono(1, 0), y = mono(0, 1);
    const LaurentPoly diff = x - y;
    LaurentPoly num = diff * diff * t1 - Rational(3, 2) * ((x + y) * diff * t2) +
                      Rational(3, 4) * ((x * x + Rational(4) * x * y + y * y) * t3);
    for (int stage = 0; stage < 2; ++stage) {
        auto q = divide_by_difference(num, 0, 1);
        if (!q) throw DivisionObstruction(0, 1, 3);
        num = std::move(*q);
    }
    return num;
}

inline LocalizedFn l3_explicit(const LocalizedFn& f) {
    if (f.shape() != shape()) throw InvalidArgument("l3_explicit acts on (n, m) = (1, 1)");
    const LocalizedFn fx = f.euler(0), fy = f.euler(1);
    const LocalizedFn fxx = fx.euler(0), fyy = fy.euler(1);
    const LocalizedFn t1 = fxx.euler(0) + Rational(1, 4) * fyy.euler(1);
    const LocalizedFn t2 = fxx - Rational(1, 4) * fyy;
    const LocalizedFn t3 = fx + Rational(1, 2) * fy;
    const LaurentPoly x = mono(1, 0), y = mono(0, 1);
    return t1 - Rational(3, 2) * (t2 * (x + y)).divided_by_difference(0, 1) +
           Rational(3, 4) * (t3 * (x * x + Rational(4) * x * y + y * y)).divided_by_difference(0, 1, 2);
}

/// Leading-term image of the explicit third-order operator: every rational
/// coefficient tends to 1 in the dominance direction (y/x -> 0).
inline HCPolynomial l3_explicit_image() {
    return radial_image({{1, {0, 0, 0}},
                         {Rational(1, 4), {1, 1, 1}},
                         {Rational(-3, 2), {0, 0}},
                         {Rational(3, 8), {1, 1}},
                         {Rational(3, 4), {0}},
                         {Rational(3, 8), {1}}},
                        2);
}

struct RelationCheck {
    std::string relation;  // e.g. "L2 psi_i = -i^2 psi_i - phi_i"
    int i = 0, j = 0;
    bool ok = true;
    std::string expected, actual;
};

struct TableReport {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<RelationCheck> failures;  // in evaluation order

    const RelationCheck* first_failure() const { return failures.empty() ? nullptr : &failures.front(); }
};

struct TableOptions {
    bool corrupt_phi = false;  // flip the sign of the lower coefficient of phi(i, j)
};

/// Checks every relation of the action table on |i|, |j| <= R.
inline TableReport verify_jordan_table(int R, const TableOptions& opt = {}) {
    if (R < 1) throw InvalidArgument("range bound must be >= 1");
    const DeformedParams p = params();
    TableReport rep;
    auto record = [&](std::string rel, int i, int j, const std::function<LaurentPoly()>& lhs, const LaurentPoly& rhs) {
        ++rep.checked;
        std::string actual;
        try {
            const LaurentPoly got = lhs();
            if (got == rhs) return;
            actual = got.to_string();
        } catch (const DivisionObstruction& e) {
            // A corrupted input leaves the algebra; that is a failed relation too.
            actual = std::string("DivisionObstruction: ") + e.what();
        }
        rep.ok = false;
        rep.failures.push_back({std::move(rel), i, j, false, rhs.to_string(), std::move(actual)});
    };
    auto phi_used = [&](int i, int j) {
        if (!opt.corrupt_phi) return phi(i, j);
        const int s = 2 * i + j;
        return mono(i, j) + mono(i - 1, j + 1, make_rational(s, s - 1));
    };
    auto integral = [&](int q, const LaurentPoly& f) { return [&p, q, f] { return apply_integral(q, f, p); }; };
    auto third = [](const LaurentPoly& f) { return [f] { return l3_explicit(f); }; };
    for (int i = -R; i <= R; ++i)
        for (int j = -R; j <= R; ++j) {
            if (2 * i + j == 1) continue;
            const LaurentPoly f = phi_used(i, j);
            record("L1 phi_ij = (i+j) phi_ij", i, j, integral(1, f), Rational(i + j) * f);
            record("L2 phi_ij = lambda_ij phi_ij", i, j, integral(2, f), lambda(i, j) * f);
            record("L3 phi_ij = mu_ij phi_ij", i, j, third(f), mu(i, j) * f);
        }
    for (int i = -R; i <= R; ++i) {
        const LaurentPoly s = psi(i), ph = phi_diag(i);
        const Rational I = i;
        record("L1 psi_i = -i psi_i", i, 0, integral(1, s), (-I) * s);
        record("L1 phi_i = -i phi_i", i, 0, integral(1, ph), (-I) * ph);
        record("L2 psi_i = -i^2 psi_i - phi_i", i, 0, integral(2, s), (-I * I) * s - ph);
        record("L2 phi_i = -i^2 phi_i", i, 0, integral(2, ph), (-I * I) * ph);
        record("L3 psi_i = -i^3 psi_i - 3 phi_i", i, 0, third(s), (-I * I * I) * s - Rational(3) * ph);
        record("L3 phi_i = -i^3 phi_i", i, 0, third(ph), (-I * I * I) * ph);
    }
    return rep;
}

struct DemoBlock {
    std::vector<Exponent> reps;
    std::size_t dim = 0;
    int nilpotency_l2 = 0;
    bool matches = false;  // agrees with the predicted block
};

struct DemoDegree {
    long degree = 0;
    std::size_t dim = 0;
    std::vector<DemoBlock> blocks;
    bool ok = true;
    std::string note;
};

struct DemoReport {
    bool ok = true;
    std::vector<DemoDegree> degrees;
};

namespace detail {

// Whether g is a nonzero multiple of h.
inline bool proportional(const LaurentPoly& g, const LaurentPoly& h) {
    if (g.is_zero() || h.is_zero() || g.size() != h.size()) return false;
    const Rational r = g.terms().front().coef / h.terms().front().coef;
    return g == r * h;
}

inline LaurentPoly element_of(const SubspaceBasis& basis, const Vector& v) {
    LaurentPoly g(basis.params.shape());
    for (std::size_t e = 0; e < v.size(); ++e)
        if (v[e] != 0) g += v[e] * basis.elements[e];
    return g;
}

}  // namespace detail

/// Support of degree d used by the demo: the segment x^i y^{d-i} for
/// i in [-|d| - 3, |d| + 3], which contains the diagonal pair of degree d.
inline std::vector<Exponent> demo_support(long d) {
    std::vector<Exponent> seed;
    const int w = static_cast<int>(d < 0 ? -d : d) + 3;
    seed.push_back({-w, static_cast<int>(d) + w});
    seed.push_back({w, static_cast<int>(d) - w});
    return seed;
}

/// Decomposes the degree slices lo..hi and compares them with the predicted
/// structure: one-dimensional eigenspaces <phi_ij> for 2i+j not in {0, 1},
/// and a two-dimensional Jordan block <phi_i, psi_i> for each diagonal i.
inline DemoReport spectral_demo(long lo, long hi) {
    if (lo > hi) throw InvalidArgument("empty degree window");
    const DeformedParams p = params();
    DemoReport rep;
    for (long d = lo; d <= hi; ++d) {
        DemoDegree dd;
        dd.degree = d;
        SubspaceBasis basis = invariant_subspace_basis(demo_support(d), p);
        dd.dim = basis.dim();
        DecomposeOptions opt;
        opt.degree = d;
        auto blocks = decompose(basis, opt);
        const auto mats = action_matrices(basis, 2);
        std::size_t pairs = 0;
        for (const auto& b : blocks) {
            DemoBlock db;
            db.reps = b.reps;
            db.dim = b.dim();
            db.nilpotency_l2 = b.nilpotency[1];
            if (b.dim() == 1) {
                const auto& r = b.reps.front();
                const int s = 2 * r[0] + r[1];
                db.matches = s != 0 && s != 1 && b.nilpotency[1] == 1 &&
                             detail::proportional(detail::element_of(basis, b.basis[0]), phi(r[0], r[1]));
            } else if (b.dim() == 2) {
                ++pairs;
                const int i = b.reps.front()[0];
                const Exponent diag{i, -2 * i}, top{i + 1, -2 * i - 1};
                // (L2 + i^2)^2 vanishes on the block, (L2 + i^2) does not.
                const ExactMatrix shift = mats[1].minus_scalar(Rational(-i * i));
                const ExactMatrix cols = ExactMatrix::from_columns(basis.dim(), b.basis);
                const bool jordan = !(shift * cols).is_zero() && (shift * (shift * cols)).is_zero();
                // The block is spanned by phi_i and psi_i.
                auto in_span = [&](const LaurentPoly& g) {
                    auto c = expand_in_basis(g, basis);
                    if (!c) return false;
                    std::vector<Vector> rows = b.basis;
                    rows.push_back(*c);
                    return rank(ExactMatrix::from_rows(basis.dim(), rows)) == 2;
                };
                db.matches = b.reps == std::vector<Exponent>{diag, top} && b.nilpotency[1] == 2 && jordan &&
                             in_span(phi_diag(i)) && in_span(psi(i));
            }
            if (!db.matches) dd.ok = false;
            dd.blocks.push_back(std::move(db));
        }
        if (pairs != 1) {
            dd.ok = false;
            dd.note = "expected exactly one two-dimensional block";
        }
        if (!dd.ok) rep.ok = false;
        rep.degrees.push_back(std::move(dd));
    }
    return rep;
}

}  // namespace cms::gl12
