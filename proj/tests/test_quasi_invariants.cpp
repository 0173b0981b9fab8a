#include <catch_amalgamated.hpp>

#include <random>

#include "cms/gl12.hpp"
#include "cms/hull.hpp"
#include "cms/matrix.hpp"
#include "cms/quasi_invariants.hpp"
#include "cms/spectral.hpp"

using namespace cms;

namespace {

const DeformedParams kP11(1, 1, make_rational(-1, 2));

Exponent random_dominant(std::mt19937_64& rng, Shape s, int r) {
    std::uniform_int_distribution<int> ex(-r, r);
    Exponent e(s.vars());
    for (auto& x : e) x = ex(rng);
    return dominant_representative(e, s);
}

// Dimension of the quasi-invariants on `support`, solved over plain monomials
// with the symmetry written as equations (no orbit sums).
std::size_t brute_force_dim(const std::vector<Exponent>& support, const DeformedParams& p) {
    const Shape s = p.shape();
    std::vector<LaurentPoly> monos;
    for (const auto& e : support) monos.push_back(LaurentPoly::monomial(s, e));
    std::vector<std::vector<LaurentPoly>> conditions(monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c) {
        for (int t = 0; t + 1 < s.vars(); ++t)
            if (t + 1 != s.n) conditions[c].push_back(monos[c].swapped(t, t + 1) - monos[c]);
        for (int i = 0; i < s.n; ++i)
            for (int j = 0; j < s.m; ++j) conditions[c].push_back(quasi_invariance_defect(monos[c], i, j, p));
    }
    std::map<std::pair<std::size_t, Exponent>, std::size_t> row;
    for (std::size_t c = 0; c < monos.size(); ++c)
        for (std::size_t q = 0; q < conditions[c].size(); ++q)
            for (const auto& t : conditions[c][q].terms()) row.emplace(std::pair{q, t.exp}, row.size());
    ExactMatrix m(std::max<std::size_t>(row.size(), 1), monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c)
        for (std::size_t q = 0; q < conditions[c].size(); ++q)
            for (const auto& t : conditions[c][q].terms()) m(row.at({q, t.exp}), c) += t.coef;
    return monos.size() - rank(m);
}

}  // namespace

TEST_CASE("quasi-invariance membership") {
    const Shape s = kP11.shape();
    CHECK(is_quasi_invariant(LaurentPoly::constant(s, 1), kP11));
    const LaurentPoly phi20 = gl12::mono(2, 0) - gl12::mono(1, 1, make_rational(4, 3));
    CHECK(phi20 == gl12::phi(2, 0));
    CHECK(is_quasi_invariant(phi20, kP11));

    const auto rep = is_quasi_invariant(LaurentPoly::variable(s, 0), kP11);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.hyperplane);
    CHECK(*rep.hyperplane == std::pair{0, 0});

    const DeformedParams p21(2, 1, make_rational(-1, 2));
    const auto asym = is_quasi_invariant(LaurentPoly::variable(p21.shape(), 0), p21);
    REQUIRE(asym.transposition);
    CHECK(*asym.transposition == std::pair{0, 1});
    CHECK_THROWS_AS(is_quasi_invariant(LaurentPoly::constant(p21.shape(), 1), kP11), InvalidArgument);
}

TEST_CASE("gl(1,2) basis functions are quasi-invariant") {
    for (int i = -4; i <= 4; ++i) {
        for (int j = -4; j <= 4; ++j)
            if (2 * i + j != 1) CHECK(is_quasi_invariant(gl12::phi(i, j), kP11));
        CHECK(is_quasi_invariant(gl12::psi(i), kP11));
        CHECK(is_quasi_invariant(gl12::phi_diag(i), kP11));
    }
    // The excluded index is genuinely outside: x^i y^j with 2i + j = 1 alone fails.
    CHECK_FALSE(is_quasi_invariant(gl12::mono(0, 1), kP11));
    CHECK_THROWS_AS(gl12::phi(0, 1), InvalidArgument);
}

TEST_CASE("max_exponents") {
    const Shape s = kP11.shape();
    CHECK(max_exponents(gl12::mono(2, 1) + gl12::mono(0, 3)) == std::vector<Exponent>{{2, 1}});
    CHECK(max_exponents(gl12::mono(1, 0) + gl12::mono(0, 1)) == std::vector<Exponent>{{1, 0}});
    CHECK(max_exponents(gl12::psi(0)) == std::vector<Exponent>{{1, -1}});
    // (2,0) and (0,3) are incomparable.
    CHECK(max_exponents(gl12::mono(2, 0) + gl12::mono(0, 3)).size() == 2);
    CHECK_THROWS_AS(max_exponents(LaurentPoly(s)), InvalidArgument);
}

TEST_CASE("schur generators") {
    const Shape s = kP11.shape();
    const LaurentPoly one = LaurentPoly::constant(s, 1);
    const LaurentPoly ratio = gl12::mono(-1, 1);
    CHECK(schur_generator({0, 0}, kP11) == (one - ratio) * (one - ratio));
    CHECK(schur_generator({2, 1}, kP11) == gl12::mono(2, 1) - gl12::mono(1, 2, 2) + gl12::mono(0, 3));
    CHECK_THROWS_AS(schur_generator({0, 1, 0}, DeformedParams(2, 1, make_rational(-1, 2))), InvalidArgument);

    // s_(1,0)(x1,x2) = x1 + x2.
    const DeformedParams p20(2, 0, make_rational(-1, 2));
    CHECK(schur_generator({1, 0}, p20) == LaurentPoly::variable(p20.shape(), 0) + LaurentPoly::variable(p20.shape(), 1));

    std::mt19937_64 rng(7);
    const std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}};
    for (auto [n, m] : shapes)
        for (int trial = 0; trial < 4; ++trial) {
            const Exponent lam = random_dominant(rng, {n, m}, 2);
            for (const Rational& k : {make_rational(-1, 2), make_rational(2, 5), make_rational(-9, 4), make_rational(7)}) {
                const DeformedParams p(n, m, k);
                const LaurentPoly g = schur_generator(lam, p);
                CHECK(is_quasi_invariant(g, p));
                CHECK(max_exponents(g) == std::vector<Exponent>{lam});
                CHECK(g.coefficient(lam) == 1);
            }
        }
}

TEST_CASE("invariant subspaces: examples") {
    const Shape s = kP11.shape();
    const auto triv = invariant_subspace_basis(std::vector<Exponent>{{0, 0}}, kP11);
    REQUIRE(triv.dim() == 1);
    CHECK(triv.elements[0] == LaurentPoly::constant(s, 1));

    // Support {(1,-1),(0,0),(-1,1)}: a x/y + b + c y/x is quasi-invariant iff a = c.
    const auto v = invariant_subspace_basis(gl12::psi(0), kP11);
    CHECK(v.support.size() == 3);
    CHECK(v.dim() == 2);
    CHECK(expand_in_basis(gl12::psi(0), v).has_value());
    CHECK(expand_in_basis(LaurentPoly::constant(s, 1), v).has_value());
    CHECK_FALSE(expand_in_basis(gl12::mono(1, -1), v).has_value());

    // phi_{1,-2} = x y^-2 appears (up to scale) in the subspace of its generator.
    const auto w = invariant_subspace_basis(schur_generator({1, -2}, kP11), kP11);
    bool found = false;
    for (const auto& g : w.elements)
        if (g.size() == 1 && g.terms()[0].exp == Exponent{1, -2}) found = true;
    CHECK(found);
    CHECK_THROWS_AS(invariant_subspace_basis(std::vector<Exponent>{}, kP11), InvalidArgument);
}

TEST_CASE("invariant subspaces: structural properties against a monomial solve") {
    std::mt19937_64 rng(11);
    const std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {1, 2}};
    for (auto [n, m] : shapes)
        for (const Rational& k : {make_rational(-1, 2), make_rational(3, 5)}) {
            const DeformedParams p(n, m, k);
            for (int trial = 0; trial < 3; ++trial) {
                const Exponent lam = random_dominant(rng, p.shape(), 2);
                const auto basis = invariant_subspace_basis(schur_generator(lam, p), p);
                CHECK(basis.support == hull_lattice_points(basis.support));
                CHECK(basis.dim() == brute_force_dim(basis.support, p));
                for (const auto& g : basis.elements) {
                    CHECK(is_quasi_invariant(g, p));
                    for (const auto& t : g.terms())
                        CHECK(std::binary_search(basis.support.begin(), basis.support.end(), t.exp));
                }
                // Linear independence and canonical order.
                ExactMatrix c(basis.dim(), basis.reps.size());
                for (std::size_t r = 0; r < basis.dim(); ++r)
                    for (std::size_t col = 0; col < basis.reps.size(); ++col) c(r, col) = basis.coords[r][col];
                CHECK(rank(c) == basis.dim());
                for (std::size_t e = 1; e < basis.dim(); ++e) CHECK(basis.leading(e - 1) < basis.leading(e));
                // Closure under the integrals.
                CHECK_NOTHROW(action_matrices(basis, 3));
                // The generator itself lies in its subspace.
                CHECK(expand_in_basis(schur_generator(lam, p), basis).has_value());
            }
        }
}

TEST_CASE("orbits") {
    const Shape s{2, 1};
    CHECK(weyl_orbit({1, 0, 2}, s).size() == 2);
    CHECK(weyl_orbit({1, 1, 2}, s).size() == 1);
    CHECK(dominant_representative({0, 3, -1}, s) == Exponent{3, 0, -1});
    CHECK(is_dominant({3, 0, -1}, s));
    CHECK_FALSE(is_dominant({0, 3, -1}, s));
    CHECK(orbit_sum({1, 0, 2}, s) == LaurentPoly::monomial(s, {1, 0, 2}) + LaurentPoly::monomial(s, {0, 1, 2}));
}
