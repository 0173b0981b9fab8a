#include <catch_amalgamated.hpp>

#include <random>

#include "cms/hull.hpp"
#include "cms/laurent.hpp"
#include "cms/localized.hpp"
#include "cms/matrix.hpp"

using namespace cms;

namespace {

const Shape kS21{2, 1};

LaurentPoly random_poly(std::mt19937_64& rng, Shape s, int terms, int lo, int hi) {
    std::uniform_int_distribution<int> ex(lo, hi), co(-5, 5);
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
        Exponent e(s.vars());
        for (auto& x : e) x = ex(rng);
        ts.push_back({e, make_rational(co(rng), 1 + (t % 3))});
    }
    return LaurentPoly::from_terms(s, ts);
}

// Value of f at an integer point with nonzero coordinates.
Rational evaluate(const LaurentPoly& f, const std::vector<Rational>& pt) {
    Rational v = 0;
    for (const auto& t : f.terms()) {
        Rational m = t.coef;
        for (int i = 0; i < f.shape().vars(); ++i) m *= pow(pt[i], t.exp[i]);
        v += m;
    }
    return v;
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("-1/2") == make_rational(-1, 2));
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(to_string(make_rational(4, -6)) == "-2/3");
    CHECK(to_string(Rational(5)) == "5/1");
    CHECK(to_display(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
    CHECK(pow(make_rational(-1, 2), -3) == -8);
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Exponent{1, 1, 0}, Exponent{2, 0, 0}));
    CHECK_FALSE(dominance_leq(Exponent{2, 0, 0}, Exponent{1, 1, 0}));
    CHECK_FALSE(dominance_leq(Exponent{2, 0, -1}, Exponent{1, 2, 0}));
    CHECK_FALSE(dominance_leq(Exponent{1, 2, 0}, Exponent{2, 0, -1}));
    CHECK_THROWS_AS(dominance_leq(Exponent{1}, Exponent{1, 0}), InvalidArgument);
    // The linear extension refines the partial order.
    std::vector<Exponent> pts;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) pts.push_back({a, b, c});
    for (const auto& p : pts)
        for (const auto& q : pts)
            if (p != q && dominance_leq(p, q)) REQUIRE(dominance_linear_less(p, q));
}

TEST_CASE("laurent arithmetic") {
    const LaurentPoly x1 = LaurentPoly::variable(kS21, 0), x2 = LaurentPoly::variable(kS21, 1);
    const LaurentPoly one = LaurentPoly::constant(kS21, 1);
    CHECK((x1 + x2) - x2 == x1);
    CHECK((x1 - x1).is_zero());
    CHECK((x1 + one) * (x1 - one) == x1 * x1 - one);
    CHECK(x1.euler(0) == x1);
    CHECK(x1.euler(1).is_zero());
    CHECK(LaurentPoly::monomial(kS21, {-2, 0, 1}, 3).euler(0) == LaurentPoly::monomial(kS21, {-2, 0, 1}, -6));
    CHECK(x1.swapped(0, 1) == x2);
    CHECK_THROWS_AS(x1 + LaurentPoly::variable(Shape{1, 1}, 0), InvalidArgument);
}

TEST_CASE("division by a variable difference") {
    const LaurentPoly x1 = LaurentPoly::variable(kS21, 0), x2 = LaurentPoly::variable(kS21, 1);
    SECTION("non-divisible sum") { CHECK_FALSE(divide_by_difference(x1 + x2, 0, 1).has_value()); }
    SECTION("difference of squares") {
        auto q = divide_by_difference(x1 * x1 - x2 * x2, 0, 1);
        REQUIRE(q);
        CHECK(*q == x1 + x2);
    }
    SECTION("laurent exact division") {
        // (x1/x2 - x2/x1) = (x1 - x2)(x1 + x2)/(x1 x2)
        LaurentPoly f = LaurentPoly::monomial(kS21, {1, -1, 0}) - LaurentPoly::monomial(kS21, {-1, 1, 0});
        auto q = divide_by_difference(f, 0, 1);
        REQUIRE(q);
        CHECK(multiply_by_difference(*q, 0, 1) == f);
    }
    SECTION("random round trips") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            LaurentPoly g = random_poly(rng, kS21, 6, -3, 3);
            const int i = trial % 3, j = (trial + 1 + trial / 3 % 2) % 3;
            if (i == j) continue;
            auto q = divide_by_difference(multiply_by_difference(g, i, j), i, j);
            REQUIRE(q);
            CHECK(*q == g);
            // x_i/(x_i - x_j) times (x_i - x_j) gives x_i back.
            auto r = laurent_divide_exact(multiply_by_difference(g, i, j), i, j);
            REQUIRE(r);
            CHECK(*r == g.shifted(unit_exponent(kS21, i)));
        }
    }
    SECTION("substitution is evaluation on the diagonal") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            LaurentPoly g = random_poly(rng, kS21, 5, -2, 2);
            LaurentPoly h = substitute_equal(g, 0, 2);
            std::vector<Rational> pt{3, -2, 3};
            CHECK(evaluate(g, pt) == evaluate(h, pt));
            for (const auto& t : h.terms()) CHECK(t.exp[2] == 0);
        }
        CHECK_THROWS_AS(substitute_equal(x1, 1, 1), InvalidArgument);
    }
}

TEST_CASE("localized functions") {
    const LaurentPoly x1 = LaurentPoly::variable(kS21, 0), x2 = LaurentPoly::variable(kS21, 1);
    LocalizedFn f = LocalizedFn(x1 * x1 - x2 * x2).divided_by_difference(0, 1);
    CHECK(f.is_polynomial());
    CHECK(f.as_polynomial() == x1 + x2);
    LocalizedFn r = LocalizedFn(x1).divided_by_difference(0, 1);
    CHECK_FALSE(r.is_polynomial());
    CHECK(r == LocalizedFn(-x1).divided_by_difference(1, 0));
    // x1/(x1-x2) - x2/(x1-x2) = 1
    LocalizedFn one = LocalizedFn(x1).divided_by_difference(0, 1) - LocalizedFn(x2).divided_by_difference(0, 1);
    CHECK(one == LocalizedFn(LaurentPoly::constant(kS21, 1)));
    // d/dx1 log-derivative: x1 d/dx1 (1/(x1-x2)) = -x1/(x1-x2)^2
    LocalizedFn inv = LocalizedFn(LaurentPoly::constant(kS21, 1)).divided_by_difference(0, 1);
    CHECK(inv.euler(0) == LocalizedFn(-x1).divided_by_difference(0, 1, 2));
    CHECK(inv.euler(1) == LocalizedFn(x2).divided_by_difference(0, 1, 2));
    CHECK(inv.euler(2).is_zero());
    // Euler operators obey the product rule.
    LocalizedFn a = LocalizedFn(x1 * x2 + x2).divided_by_difference(1, 2);
    LocalizedFn b = inv * LocalizedFn(x1 + LaurentPoly::variable(kS21, 2));
    CHECK((a * b).euler(1) == a.euler(1) * b + a * b.euler(1));
}

TEST_CASE("exact linear algebra") {
    ExactMatrix h(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) h(r, c) = make_rational(1, r + c + 1);
    CHECK(rank(h) == 3);
    CHECK(nullspace(h).empty());
    ExactMatrix m = ExactMatrix::from_rows(3, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == Vector{1, 1, -1});
    CHECK((m * ExactMatrix::from_columns(3, ns)).is_zero());
    CHECK(primitive({make_rational(-2, 3), make_rational(4, 9), 0}) == Vector{3, -2, 0});
    auto e = rref(m);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("lattice points of a convex hull") {
    // The triangle with vertices (0,0),(2,0),(0,2) contains six lattice points.
    CHECK(hull_lattice_points({{0, 0}, {2, 0}, {0, 2}}).size() == 6);
    CHECK(in_convex_hull({{0, 0}, {2, 0}, {0, 2}}, Exponent{1, 1}));
    CHECK_FALSE(in_convex_hull({{0, 0}, {2, 0}, {0, 2}}, Exponent{2, 1}));
    // Orbit of (1,0,0) under S_3 spans the degree-1 simplex: exactly its vertices.
    auto pts = hull_lattice_points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(pts.size() == 3);
    auto seg = hull_lattice_points({{2, -2}, {-2, 2}});
    CHECK(seg.size() == 5);
    auto ext = extreme_points({{0, 0}, {1, 1}, {2, 2}, {0, 2}});
    CHECK(ext.size() == 3);
    CHECK_THROWS_AS(hull_lattice_points({}), InvalidArgument);
}
