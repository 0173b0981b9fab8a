#include <catch_amalgamated.hpp>

#include <random>

#include "cms/gl12.hpp"
#include "cms/harish_chandra.hpp"
#include "cms/quasi_invariants.hpp"

using namespace cms;

namespace {

const Rational kHalf = make_rational(-1, 2);
const DeformedParams kP11(1, 1, kHalf);

HCPolynomial xi(int vars, int t) { return HCPolynomial::variable(vars, t); }

}  // namespace

TEST_CASE("partial images") {
    const Rational k = make_rational(5, 3);
    const DeformedParams p(1, 1, k);
    CHECK(hc_partial(0, 1, p) == xi(2, 0));
    CHECK(hc_partial(1, 1, p) == k * xi(2, 1));
    CHECK(hc_partial(1, 2, p) == (k * k) * xi(2, 1) * xi(2, 1));
    CHECK(hc_partial(0, 2, p) == xi(2, 0) * xi(2, 0) - xi(2, 0) + k * xi(2, 1));
    CHECK(hc_integral(2, p) == xi(2, 0) * xi(2, 0) - xi(2, 0) + k * xi(2, 1) + k * xi(2, 1) * xi(2, 1));
    CHECK_THROWS_AS(hc_partial(2, 1, p), InvalidArgument);
    CHECK_THROWS_AS(hc_integral(0, p), InvalidArgument);

    for (auto [n, m] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{3, 0}}) {
        const DeformedParams q(n, m, k);
        HCPolynomial sum(n + m);
        for (int t = 0; t < n + m; ++t) sum = sum + xi(n + m, t);
        CHECK(hc_integral(1, q) == sum);
    }
}

TEST_CASE("characters") {
    CHECK(chi_eval({0, 0}, 1, kP11) == 0);
    CHECK(chi_eval({1, -2}, 2, kP11) == -1);
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j) {
            const Rational I = i, J = j;
            CHECK(chi_eval({i, j}, 1, kP11) == i + j);
            CHECK(chi_eval({i, j}, 2, kP11) == gl12::lambda(i, j));
            const Rational third = I * I * I - 2 * I * I + I - I * J / 2 + J / 2 + J * J / 4 + J * J * J / 4;
            CHECK(chi_eval({i, j}, 3, kP11) == third);
        }
    const DeformedParams p(2, 2, make_rational(3, 7));
    const auto c = character({3, 1, 0, -2}, 4, p);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == 2);
    for (int q = 1; q <= 4; ++q) CHECK(c[q - 1] == chi_eval({3, 1, 0, -2}, q, p));
}

TEST_CASE("deformed Weyl vector") {
    CHECK(rho_k(kP11) == std::vector<Rational>{kHalf, make_rational(1, 2)});
    CHECK(rho_k(DeformedParams(2, 0, Rational(1))) == std::vector<Rational>{make_rational(-1, 2), make_rational(1, 2)});
    CHECK(rho_k(DeformedParams(1, 2, kHalf)) == std::vector<Rational>{Rational(-1), make_rational(3, 2), kHalf});
    CHECK(form_weight(0, kP11) == 1);
    CHECK(form_weight(1, kP11) == kHalf);
}

TEST_CASE("image membership") {
    CHECK(check_image_membership(hc_integral(1, kP11), kP11));
    const auto bad = check_image_membership(xi(2, 0), kP11);
    CHECK_FALSE(bad.ok);
    CHECK(bad.hyperplane_witness.has_value());
    CHECK_FALSE(bad.symmetry_witness.has_value());

    // xi_1 at (2,0) fails the shifted symmetry.
    const DeformedParams p20(2, 0, kHalf);
    const auto asym = check_image_membership(xi(2, 0), p20);
    CHECK_FALSE(asym.ok);
    CHECK(asym.symmetry_witness.has_value());

    std::mt19937_64 rng(5);
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}})
        for (const Rational& k : {kHalf, make_rational(4, 9)}) {
            const DeformedParams p(n, m, k);
            for (int q = 1; q <= 4; ++q) {
                const auto rep = check_image_membership(hc_integral(q, p), p, 20, rng());
                CHECK(rep.ok);
                CHECK(rep.samples_checked >= static_cast<std::size_t>(20 * n * m));
            }
            // A single partial image is not symmetric once there are two x's.
            if (n == 2) CHECK_FALSE(check_image_membership(hc_partial(0, 2, p), p).ok);
        }
}

TEST_CASE("operator identities through the image") {
    const DeformedParams p(2, 1, make_rational(2, 3));
    CHECK(certify_operator_identity({{1, {1, 2}}}, {{1, {2, 1}}}, p));
    CHECK_FALSE(certify_operator_identity({{1, {2}}}, {{1, {1, 1}}}, p));
    CHECK(certify_operator_identity({{2, {3}}, {-1, {3}}}, {{1, {3}}}, p));
    CHECK(hc_image({{1, {}}}, p) == HCPolynomial::constant(3, 1));
}

TEST_CASE("third-order operator of the (1,1) example") {
    const HCPolynomial img = gl12::l3_explicit_image();
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) CHECK(img.evaluate({Rational(i), Rational(j)}) == gl12::mu(i, j));
    CHECK(certify_operator_identity(img, {{1, {3}}, {make_rational(1, 4), {2}}, {make_rational(1, 4), {1, 1}}}, kP11));

    const auto fit = fit_operator_combination(img, {{1, 1, 1}, {3}, {1, 2}, {2}, {1, 1}, {1}, {}}, kP11);
    REQUIRE(fit);
    CHECK(*fit == Vector{0, 1, 0, make_rational(1, 4), make_rational(1, 4), 0, 0});
    CHECK_FALSE(fit_operator_combination(xi(2, 0), {{1}, {2}}, kP11).has_value());

    // Independent of the image: the two operators agree on actual quasi-invariants.
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> ex(-3, 3);
    for (int t = 0; t < 6; ++t) {
        const Exponent lam{ex(rng), ex(rng)};
        const auto basis = invariant_subspace_basis(schur_generator(lam, kP11), kP11);
        for (const auto& g : basis.elements) {
            const auto L = apply_integrals_upto(3, g, kP11);
            CHECK(gl12::l3_explicit(g) == L[2] + make_rational(1, 4) * L[1] + make_rational(1, 4) * L[0].euler(0) +
                                              make_rational(1, 4) * L[0].euler(1));
        }
    }
}
