#include <catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <set>

#include "cms/weights.hpp"

using namespace cms;

namespace {

const SuperShape k11{1, 1};

// All dominant admissible weights with free coordinates in [lo, hi].
std::vector<Weight> dominant_grid(SuperShape sh, int lo, int hi) {
    std::vector<Weight> out;
    Weight cur(sh.length());
    std::function<void(int)> rec = [&](int t) {
        if (t == sh.n + sh.m) {
            out.push_back(cur);
            return;
        }
        const bool x = t < sh.n;
        const int pos = x ? t : sh.n + 2 * (t - sh.n);
        int top = hi;
        if (x && t > 0) top = std::min(top, cur[t - 1]);
        if (!x && t > sh.n) top = std::min(top, cur[pos - 1]);
        for (int v = top; v >= lo; --v) {
            if (x && v % 2) continue;
            cur[pos] = v;
            if (!x) cur[pos + 1] = v;
            rec(t + 1);
        }
    };
    rec(0);
    return out;
}

bool disjoint(const ABPair& p) {
    for (int a : p.A)
        if (std::count(p.B.begin(), p.B.end(), a)) return false;
    return true;
}

}  // namespace

TEST_CASE("sharp") {
    CHECK(sharp({0, 0, 0}, k11) == Exponent{0, 0});
    CHECK(sharp({4, -3, -3}, k11) == Exponent{2, -3});
    CHECK(sharp_inverse({2, -3}, k11) == Weight{4, -3, -3});
    CHECK_THROWS_AS(sharp({1, 0, 0}, k11), NonAdmissible);
    CHECK_THROWS_AS(sharp({0, 1, 0}, k11), NonAdmissible);
    CHECK_THROWS_AS(sharp({0, 0}, k11), NonAdmissible);
    for (auto sh : {SuperShape{1, 1}, SuperShape{2, 1}, SuperShape{1, 2}, SuperShape{2, 2}})
        for (const auto& w : dominant_grid(sh, -6, 6)) {
            REQUIRE(is_dominant_admissible(w, sh));
            CHECK(sharp_inverse(sharp(w, sh), sh) == w);
        }
}

TEST_CASE("(A, B) coordinates") {
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) {
            const ABPair p = to_ab({2 * i, j, j}, k11);
            CHECK(p.A == std::vector<int>{2 * i});
            CHECK(p.B == std::vector<int>{1 - j});
        }
    CHECK(to_ab({0, 0, 0}, k11) == ABPair{{0}, {1}});
    CHECK(to_ab({0, 0, 0}, k11).to_string() == "({0}, {1})");
    std::size_t checked = 0;
    for (auto sh : {SuperShape{1, 1}, SuperShape{2, 1}, SuperShape{1, 2}, SuperShape{2, 2}, SuperShape{3, 1}, SuperShape{1, 3}})
        for (const auto& w : dominant_grid(sh, -6, 6)) {
            const ABPair p = to_ab(w, sh);
            CHECK(in_T(p, sh));
            CHECK(from_ab(p, sh) == w);
            ++checked;
        }
    CHECK(checked > 1000);
    CHECK_FALSE(in_T({{0, 2}, {5}}, SuperShape{2, 1}));  // even gap in A
    CHECK_FALSE(in_T({{1}, {3}}, k11));                  // odd max A
    CHECK_FALSE(in_T({{0}, {2, 3}}, SuperShape{1, 2}));  // B meets B - 1
    CHECK_THROWS_AS(from_ab({{1}, {3}}, k11), NonAdmissible);
}

TEST_CASE("equivalence") {
    const ABPair p{{0}, {2}};
    CHECK(equivalent(p, p));
    for (int a = -6; a <= 6; a += 2) CHECK(equivalent({{a}, {a}}, {{a - 2}, {a - 1}}));
    CHECK_FALSE(equivalent({{0}, {2}}, {{2}, {2}}));

    // Reflexive, symmetric, transitive on a sample.
    const SuperShape sh{2, 1};
    const auto grid = dominant_grid(sh, -3, 3);
    std::vector<ABPair> pairs;
    for (const auto& w : grid) pairs.push_back(to_ab(w, sh));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    for (int t = 0; t < 3000; ++t) {
        const auto &a = pairs[pick(rng)], &b = pairs[pick(rng)], &c = pairs[pick(rng)];
        CHECK(equivalent(a, a));
        CHECK(equivalent(a, b) == equivalent(b, a));
        if (equivalent(a, b) && equivalent(b, c)) CHECK(equivalent(a, c));
    }
}

TEST_CASE("atypicality degree") {
    CHECK(atypicality_degree({{0}, {2}}) == 0);
    CHECK(atypicality_degree({{1}, {2}}) == 1);
    CHECK_THROWS_AS(atypicality_degree({{2}, {2}}), NotReduced);
    for (int i = -3; i <= 3; ++i) {
        const ABPair a = to_ab({2 * i, -2 * i, -2 * i}, k11);
        CHECK(atypicality_degree(a) == 1);
    }
}

TEST_CASE("class enumeration") {
    CHECK(enumerate_class({{0}, {2}}, k11) == std::vector<ABPair>{{{0}, {2}}});
    CHECK(enumerate_class({{-2}, {-1}}, k11) == std::vector<ABPair>{{{-2}, {-1}}, {{0}, {0}}});
    CHECK_THROWS_AS(enumerate_class({{0}, {0}}, k11), InfiniteClass);
    CHECK(reduce_to_least({{0}, {0}}, k11) == ABPair{{-2}, {-1}});
    CHECK(split_move({{-2}, {-1}}, {-2, -1}, -2) == ABPair{{0}, {0}});

    // An s = 2 instance at (2,2), cross-checked by search.
    const SuperShape sh{2, 2};
    std::size_t found = 0;
    for (const auto& w : dominant_grid(sh, -3, 3)) {
        const ABPair p = to_ab(w, sh);
        if (!disjoint(p) || atypicality_degree(p) != 2) continue;
        ++found;
        const auto cls = enumerate_class(p, sh);
        CHECK(cls.size() == 4);
        std::set<Weight> from_enum, from_search;
        for (const auto& q : cls) from_enum.insert(from_ab(q, sh));
        for (const auto& v : class_by_search(w, sh, 6)) from_search.insert(v);
        CHECK(from_enum == from_search);
        if (found >= 3) break;
    }
    CHECK(found > 0);
}

TEST_CASE("class enumeration agrees with the search oracle") {
    std::mt19937_64 rng(2024);
    const std::vector<std::pair<SuperShape, int>> cases{{{1, 1}, 6}, {{2, 1}, 6}, {{1, 2}, 6}, {{2, 2}, 5}, {{3, 1}, 4}, {{1, 3}, 4}};
    std::size_t tested = 0;
    for (const auto& [sh, radius] : cases) {
        auto grid = dominant_grid(sh, -3, 3);
        std::shuffle(grid.begin(), grid.end(), rng);
        std::size_t here = 0;
        for (const auto& w : grid) {
            const ABPair p = to_ab(w, sh);
            if (!disjoint(p)) continue;
            const auto cls = enumerate_class(p, sh);
            const int s = atypicality_degree(p);
            CHECK(cls.size() == (std::size_t{1} << s));
            CHECK(cls.front() == p);
            std::set<Weight> from_enum;
            for (const auto& q : cls) {
                CHECK(in_T(q, sh));
                CHECK(equivalent(q, p));
                from_enum.insert(from_ab(q, sh));
            }
            const auto found = class_by_search(w, sh, radius);
            CHECK(std::set<Weight>(found.begin(), found.end()) == from_enum);
            CHECK(found.front() == w);
            if (++here == 10) break;
        }
        tested += here;
    }
    CHECK(tested >= 50);

    CHECK(class_by_search({0, 0, 0}, k11, 4).size() == 2);
    CHECK(class_by_search({2, 0, 0}, k11, 4) == std::vector<Weight>{{2, 0, 0}});
    // A non-reduced weight has a smaller equivalent member in the box.
    const Weight w{0, 1, 1};
    REQUIRE_FALSE(disjoint(to_ab(w, k11)));
    const auto found = class_by_search(w, k11, 4);
    CHECK(found.front() != w);
    CHECK(std::count(found.begin(), found.end(), from_ab(reduce_to_least(to_ab(w, k11), k11), k11)) == 1);
}

TEST_CASE("spherical typicality") {
    CHECK(is_spherically_typical({0, 0, 0}, k11));
    CHECK_FALSE(is_spherically_typical({0, 1, 1}, k11));
    CHECK(typicality_invariant_form({0, 0, 0}, k11));
    CHECK_FALSE(typicality_invariant_form({0, 1, 1}, k11));
    CHECK(typicality_invariant_form({2, 0, 0}, k11) == is_spherically_typical({2, 0, 0}, k11));
    // At (1,1) the product is a - b.
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) {
            const Weight w{2 * i, j, j};
            CHECK(spherical_typicality_product(w, k11) == Rational(2 * i - (1 - j)));
        }
    for (auto sh : {SuperShape{1, 1}, SuperShape{2, 1}, SuperShape{1, 2}, SuperShape{2, 2}})
        for (const auto& w : dominant_grid(sh, -6, 6)) {
            const bool t = is_spherically_typical(w, sh);
            CHECK(t == disjoint(to_ab(w, sh)));
            CHECK(t == typicality_invariant_form(w, sh));
        }
}

TEST_CASE("Kac flags") {
    CHECK(kac_flag({2, 0, 0}, k11) == std::vector<Weight>{{2, 0, 0}});
    // (a-2, a-1) at a = 0 is ({-2}, {-1}).
    const Weight w = from_ab({{-2}, {-1}}, k11);
    const auto flag = kac_flag(w, k11);
    CHECK(flag.size() == 2);
    CHECK(flag.front() == w);
    CHECK(flag.back() == from_ab({{0}, {0}}, k11));
    CHECK_THROWS_AS(kac_flag({0, 1, 1}, k11), NotTypical);

    const SuperShape sh{2, 2};
    for (const auto& v : dominant_grid(sh, -3, 3)) {
        const ABPair p = to_ab(v, sh);
        if (disjoint(p) && atypicality_degree(p) == 2) {
            CHECK(kac_flag(v, sh).size() == 4);
            break;
        }
    }
}

TEST_CASE("odd reflections") {
    auto [b, a] = odd_reflection_F({3, 2, 5}, {3, 1, 2, 4});
    CHECK(b == std::vector<int>{4, 1, 3, 5});
    CHECK(a == std::vector<int>{5, 3, 5});
    CHECK(odd_reflection_F({4}, {7}) == std::pair{std::vector<int>{7}, std::vector<int>{4}});
    CHECK(odd_reflection_F({1}, {1}) == std::pair{std::vector<int>{2}, std::vector<int>{2}});
    CHECK(odd_reflection_F({}, {1, 2}).first == std::vector<int>{1, 2});
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Exponent{2, 1}, Exponent{2, 1}));
    CHECK(dominance_leq(Exponent{0, 3}, Exponent{2, 1}));
    CHECK_FALSE(dominance_leq(Exponent{3, 0}, Exponent{2, 1}));
}
