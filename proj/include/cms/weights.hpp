#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cms/errors.hpp"
#include "cms/exponent.hpp"
#include "cms/rational.hpp"

namespace cms {

/// Sizes of gl(n, 2m); admissible weights have length n + 2m.
struct SuperShape {
    int n = 1;
    int m = 1;

    void validate() const {
        if (n < 0 || m < 0 || n + m < 1) throw InvalidArgument("need n, m >= 0 and n + m >= 1");
        if (n + m > kMaxVars) throw InvalidArgument("n + m exceeds " + std::to_string(kMaxVars));
    }
    int length() const noexcept { return n + 2 * m; }
};

using Weight = std::vector<int>;

inline std::string weight_to_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t t = 0; t < w.size(); ++t) s += (t ? "," : "") + std::to_string(w[t]);
    return s + ")";
}

/// Even first block and lambda_{n+2j-1} = lambda_{n+2j}.
inline bool is_admissible(const Weight& w, SuperShape sh) {
    if (static_cast<int>(w.size()) != sh.length()) return false;
    for (int i = 0; i < sh.n; ++i)
        if (w[i] % 2) return false;
    for (int j = 0; j < sh.m; ++j)
        if (w[sh.n + 2 * j] != w[sh.n + 2 * j + 1]) return false;
    return true;
}

inline bool is_dominant_admissible(const Weight& w, SuperShape sh) {
    if (!is_admissible(w, sh)) return false;
    for (int i = 0; i + 1 < sh.n; ++i)
        if (w[i] < w[i + 1]) return false;
    for (int t = sh.n; t + 1 < sh.length(); ++t)
        if (w[t] < w[t + 1]) return false;
    return true;
}

inline void require_admissible(const Weight& w, SuperShape sh, bool dominant) {
    sh.validate();
    if (dominant ? !is_dominant_admissible(w, sh) : !is_admissible(w, sh))
        throw NonAdmissible("weight " + weight_to_string(w) + " is not " + (dominant ? "dominant " : "") +
                            "admissible for n=" + std::to_string(sh.n) + ", m=" + std::to_string(sh.m));
}

/// (2l_1..2l_n, u_1,u_1..u_m,u_m) -> (l_1..l_n, u_1..u_m).
inline Exponent sharp(const Weight& w, SuperShape sh) {
    require_admissible(w, sh, false);
    Exponent e(sh.n + sh.m);
    for (int i = 0; i < sh.n; ++i) e[i] = w[i] / 2;
    for (int j = 0; j < sh.m; ++j) e[sh.n + j] = w[sh.n + 2 * j];
    return e;
}

inline Weight sharp_inverse(const Exponent& e, SuperShape sh) {
    sh.validate();
    if (e.size() != sh.n + sh.m) throw InvalidArgument("sharp_inverse: length mismatch");
    Weight w;
    for (int i = 0; i < sh.n; ++i) w.push_back(2 * e[i]);
    for (int j = 0; j < sh.m; ++j) {
        w.push_back(e[sh.n + j]);
        w.push_back(e[sh.n + j]);
    }
    return w;
}

/// A and B as sets, each stored sorted ascending.
struct ABPair {
    std::vector<int> A;
    std::vector<int> B;

    friend bool operator==(const ABPair&, const ABPair&) = default;
    friend auto operator<=>(const ABPair&, const ABPair&) = default;

    std::string to_string() const {
        auto set = [](const std::vector<int>& v) {
            std::string s = "{";
            for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
            return s + "}";
        };
        return "(" + set(A) + ", " + set(B) + ")";
    }
};

namespace detail {

inline std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool contains(const std::vector<int>& sorted, int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

inline std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> shifted(std::vector<int> v, int by) {
    for (auto& x : v) x += by;
    return v;
}

}  // namespace detail

/// C = B u (B - 1).
inline std::vector<int> cover_set(const ABPair& p) {
    std::vector<int> c = p.B;
    for (int b : p.B) c.push_back(b - 1);
    return detail::sorted_unique(std::move(c));
}

/// Membership in T: |A| = n, |B| = m, max A even, neighbours in A differ by
/// an odd number, and B, B - 1 disjoint.
inline bool in_T(const ABPair& p, SuperShape sh) {
    if (static_cast<int>(p.A.size()) != sh.n || static_cast<int>(p.B.size()) != sh.m) return false;
    if (!std::is_sorted(p.A.begin(), p.A.end()) || !std::is_sorted(p.B.begin(), p.B.end())) return false;
    for (std::size_t t = 0; t + 1 < p.A.size(); ++t)
        if ((p.A[t + 1] - p.A[t]) % 2 == 0) return false;
    if (!p.A.empty() && p.A.back() % 2 != 0) return false;
    for (std::size_t t = 0; t + 1 < p.B.size(); ++t)
        if (p.B[t + 1] - p.B[t] < 2) return false;
    return true;
}

/// a_i = lambda_i + 1 - i, b_j = -lambda_{n+2j} - n + 2j.
inline ABPair to_ab(const Weight& w, SuperShape sh) {
    require_admissible(w, sh, true);
    ABPair p;
    for (int i = 1; i <= sh.n; ++i) p.A.push_back(w[i - 1] + 1 - i);
    for (int j = 1; j <= sh.m; ++j) p.B.push_back(-w[sh.n + 2 * j - 1] - sh.n + 2 * j);
    std::sort(p.A.begin(), p.A.end());
    std::sort(p.B.begin(), p.B.end());
    if (!in_T(p, sh)) throw NonAdmissible("pair " + p.to_string() + " violates the T conditions");
    return p;
}

inline Weight from_ab(const ABPair& p, SuperShape sh) {
    if (!in_T(p, sh)) throw NonAdmissible("pair " + p.to_string() + " is not in T");
    Weight w(sh.length());
    // a_i decreases with i, b_j increases with j.
    for (int i = 1; i <= sh.n; ++i) w[i - 1] = p.A[sh.n - i] - 1 + i;
    for (int j = 1; j <= sh.m; ++j) {
        const int v = -p.B[j - 1] - sh.n + 2 * j;
        w[sh.n + 2 * j - 2] = v;
        w[sh.n + 2 * j - 1] = v;
    }
    return w;
}

inline bool equivalent(const ABPair& p, const ABPair& q) {
    const auto cp = cover_set(p), cq = cover_set(q);
    return detail::set_minus(p.A, cp) == detail::set_minus(q.A, cq) &&
           detail::set_minus(cp, p.A) == detail::set_minus(cq, q.A);
}

inline bool is_reduced(const ABPair& p) { return detail::set_intersection(p.A, p.B).empty(); }

/// s = |A n (B - 1)| for a reduced pair.
inline int atypicality_degree(const ABPair& p) {
    if (!is_reduced(p)) throw NotReduced("pair " + p.to_string() + " has A n B nonempty");
    return static_cast<int>(detail::set_intersection(p.A, detail::sorted_unique(detail::shifted(p.B, -1))).size());
}

/// Maximal integer segments [first, second] of a sorted set.
inline std::vector<std::pair<int, int>> segments(const std::vector<int>& sorted) {
    std::vector<std::pair<int, int>> out;
    for (int x : sorted) {
        if (!out.empty() && out.back().second + 1 == x) out.back().second = x;
        else out.push_back({x, x});
    }
    return out;
}

/// B from a cover set: the upper element of each consecutive pair of every segment.
inline std::vector<int> b_from_cover(const std::vector<int>& cover) {
    std::vector<int> b;
    for (auto [c, d] : segments(cover)) {
        if ((d - c + 1) % 2) throw Error("InternalError", "cover segment of odd length");
        for (int x = c + 1; x <= d; x += 2) b.push_back(x);
    }
    return b;
}

/// Segments of B u (B - 1) that contain an element of A n (B - 1), with that element.
inline std::vector<std::pair<std::pair<int, int>, int>> atypical_segments(const ABPair& p) {
    std::vector<std::pair<std::pair<int, int>, int>> out;
    const auto bm1 = detail::sorted_unique(detail::shifted(p.B, -1));
    for (auto seg : segments(cover_set(p)))
        for (int a : p.A)
            if (a >= seg.first && a <= seg.second && detail::contains(bm1, a)) out.push_back({seg, a});
    return out;
}

/// Moves a reduced pair along one split: [c,d] -> [c,a-1] u [a+1,d+1], a -> d+1.
inline ABPair split_move(const ABPair& p, std::pair<int, int> seg, int a) {
    auto cover = cover_set(p);
    std::vector<int> next;
    for (int x : cover)
        if (x != a) next.push_back(x);
    next.push_back(seg.second + 1);
    next = detail::sorted_unique(std::move(next));
    ABPair q;
    q.B = b_from_cover(next);
    q.A = p.A;
    std::replace(q.A.begin(), q.A.end(), a, seg.second + 1);
    std::sort(q.A.begin(), q.A.end());
    return q;
}

/// Canonical order on equivalent pairs: dominance of the weights, linearly extended.
inline bool weight_linear_less(const Weight& a, const Weight& b) {
    return dominance_linear_less(std::span<const int>(a), std::span<const int>(b));
}

/// All 2^s members of the finite class of a reduced pair, least first.
inline std::vector<ABPair> enumerate_class(const ABPair& p, SuperShape sh) {
    if (!in_T(p, sh)) throw NonAdmissible("pair " + p.to_string() + " is not in T");
    if (!is_reduced(p)) throw InfiniteClass("pair " + p.to_string() + " is not reduced; enumerate its least member");
    const auto moves = atypical_segments(p);
    const int s = static_cast<int>(moves.size());
    if (s != atypicality_degree(p)) throw EnumerationInvalid("segment count differs from |A n (B-1)|");
    std::set<ABPair> members;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        // Cover and A after applying every chosen split at once.
        auto cover = cover_set(p);
        std::vector<int> a = p.A;
        for (int t = 0; t < s; ++t) {
            if (!(mask >> t & 1u)) continue;
            const auto [seg, x] = moves[t];
            cover.erase(std::find(cover.begin(), cover.end(), x));
            cover.push_back(seg.second + 1);
            std::replace(a.begin(), a.end(), x, seg.second + 1);
        }
        cover = detail::sorted_unique(std::move(cover));
        std::sort(a.begin(), a.end());
        ABPair q;
        try {
            q.B = b_from_cover(cover);
        } catch (const Error&) {
            throw EnumerationInvalid("split produced an odd segment from " + p.to_string());
        }
        q.A = a;
        if (!in_T(q, sh)) throw EnumerationInvalid("member " + q.to_string() + " of " + p.to_string() + " is not in T");
        if (!equivalent(p, q)) throw EnumerationInvalid("member " + q.to_string() + " is not equivalent to " + p.to_string());
        members.insert(q);
    }
    if (members.size() != (1u << s)) throw EnumerationInvalid("class of " + p.to_string() + " has coincident members");
    std::vector<ABPair> out(members.begin(), members.end());
    std::sort(out.begin(), out.end(), [&](const ABPair& x, const ABPair& y) {
        return weight_linear_less(from_ab(x, sh), from_ab(y, sh));
    });
    return out;
}

/// One reduction step for A n B nonempty: a in A n B whose segment [c,d]
/// holds no smaller element of A moves to c - 1, the segment becoming
/// [c-1,a-1] u [a+1,d]. Throws InfiniteClass when no such a exists.
inline ABPair reduction_step(const ABPair& p) {
    const auto cover = cover_set(p);
    for (auto [c, d] : segments(cover)) {
        std::vector<int> inside;
        for (int a : p.A)
            if (a >= c && a <= d) inside.push_back(a);
        if (inside.empty()) continue;
        const int a = inside.front();
        if (!detail::contains(p.B, a)) continue;
        std::vector<int> next;
        for (int x : cover)
            if (x != a) next.push_back(x);
        next.push_back(c - 1);
        next = detail::sorted_unique(std::move(next));
        ABPair q;
        q.B = b_from_cover(next);
        q.A = p.A;
        std::replace(q.A.begin(), q.A.end(), a, c - 1);
        std::sort(q.A.begin(), q.A.end());
        return q;
    }
    throw InfiniteClass("pair " + p.to_string() + " lies in an infinite class");
}

/// The least member of a finite class; InfiniteClass otherwise.
inline ABPair reduce_to_least(ABPair p, SuperShape sh) {
    if (!in_T(p, sh)) throw NonAdmissible("pair " + p.to_string() + " is not in T");
    while (!is_reduced(p)) {
        ABPair q = reduction_step(p);
        if (!in_T(q, sh) || !equivalent(p, q))
            throw EnumerationInvalid("reduction of " + p.to_string() + " left the class");
        p = std::move(q);
    }
    return p;
}

/// The class of any pair in a finite class.
inline std::vector<ABPair> class_of(const ABPair& p, SuperShape sh) { return enumerate_class(reduce_to_least(p, sh), sh); }

/// Every dominant admissible weight with all coordinates within `radius` of
/// w's and the same central character (by the set criterion), sorted by the
/// linear dominance extension.
inline std::vector<Weight> class_by_search(const Weight& w, SuperShape sh, int radius) {
    require_admissible(w, sh, true);
    if (radius < 0) throw InvalidArgument("radius must be >= 0");
    const ABPair p = to_ab(w, sh);
    std::vector<Weight> out;
    Weight cur(sh.length());
    // Free coordinates: x entries (even) and one per y pair; enumerated in
    // non-increasing order within each block.
    std::function<void(int)> rec = [&](int t) {
        if (t == sh.n + sh.m) {
            ABPair q = to_ab(cur, sh);
            if (equivalent(p, q)) out.push_back(cur);
            return;
        }
        const bool x = t < sh.n;
        const int pos = x ? t : sh.n + 2 * (t - sh.n);
        int lo = w[pos] - radius, hi = w[pos] + radius;
        if (x && t > 0) hi = std::min(hi, cur[t - 1]);
        if (!x && t > sh.n) hi = std::min(hi, cur[pos - 1]);
        for (int v = hi; v >= lo; --v) {
            if (x && v % 2) continue;
            cur[pos] = v;
            if (!x) cur[pos + 1] = v;
            rec(t + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), weight_linear_less);
    return out;
}

/// rho for gl(n, 2m) in the epsilon coordinates.
inline std::vector<Rational> super_rho(SuperShape sh) {
    std::vector<Rational> rho;
    for (int i = 1; i <= sh.n; ++i) rho.push_back(make_rational(sh.n - 2 * sh.m - 2 * i + 1, 2));
    for (int j = 1; j <= 2 * sh.m; ++j) rho.push_back(make_rational(2 * sh.m + sh.n - 2 * j + 1, 2));
    return rho;
}

/// prod_{i,j} (lambda + rho, eps_i - delta_{2j}) under (eps,eps) = 1, (delta,delta) = -1.
inline Rational spherical_typicality_product(const Weight& w, SuperShape sh) {
    require_admissible(w, sh, true);
    const auto rho = super_rho(sh);
    Rational prod = 1;
    for (int i = 0; i < sh.n; ++i)
        for (int j = 1; j <= sh.m; ++j) {
            const int d = sh.n + 2 * j - 1;
            prod *= (w[i] + rho[i]) + (w[d] + rho[d]);
        }
    return prod;
}

inline bool is_spherically_typical(const Weight& w, SuperShape sh) { return spherical_typicality_product(w, sh) != 0; }

/// prod over restricted positive roots of [(lambda# + rho(k), alpha) - (alpha, alpha)/2]
/// at k = -1/2, with (e_i,e_i) = 1 on x and k on y coordinates.
inline Rational invariant_typicality_product(const Weight& w, SuperShape sh) {
    require_admissible(w, sh, true);
    const Rational k = make_rational(-1, 2);
    const Exponent ls = sharp(w, sh);
    const int n = sh.n, m = sh.m;
    std::vector<Rational> v(n + m);
    for (int i = 1; i <= n; ++i) v[i - 1] = ls[i - 1] + Rational(k * (2 * i - n - 1) - m) / 2;
    for (int j = 1; j <= m; ++j) v[n + j - 1] = ls[n + j - 1] + Rational((2 * j - m - 1) / k + n) / 2;
    auto g = [&](int t) { return t < n ? Rational(1) : k; };
    Rational prod = 1;
    for (int a = 0; a < n + m; ++a)
        for (int b = a + 1; b < n + m; ++b) {
            // alpha = e_a - e_b
            Rational pair = g(a) * v[a] - g(b) * v[b];
            Rational norm = g(a) + g(b);
            prod *= pair - norm / 2;
        }
    return prod;
}

inline bool typicality_invariant_form(const Weight& w, SuperShape sh) { return invariant_typicality_product(w, sh) != 0; }

/// The Kac flag quotients of a spherically typical weight: its class, least first.
inline std::vector<Weight> kac_flag(const Weight& w, SuperShape sh) {
    if (!is_spherically_typical(w, sh)) throw NotTypical("weight " + weight_to_string(w) + " is not spherically typical");
    std::vector<Weight> out;
    for (const auto& q : enumerate_class(to_ab(w, sh), sh)) out.push_back(from_ab(q, sh));
    return out;
}

/// Odd reflection: moves a_n, ..., a_1 in turn to the right through B;
/// passing b leaves (b, a) if a != b and gives (b + 1, a + 1) if a = b.
/// Returns (B~, A~) with A~ in the original order of A.
inline std::pair<std::vector<int>, std::vector<int>> odd_reflection_F(const std::vector<int>& a_seq,
                                                                      const std::vector<int>& b_seq) {
    std::vector<int> b = b_seq, a = a_seq;
    for (int t = static_cast<int>(a.size()) - 1; t >= 0; --t)
        for (auto& x : b)
            if (a[t] == x) {
                ++a[t];
                ++x;
            }
    return {b, a};
}

}  // namespace cms
