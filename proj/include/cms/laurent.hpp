#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cms/errors.hpp"
#include "cms/exponent.hpp"
#include "cms/rational.hpp"

namespace cms {

/// Variable layout: n x-variables followed by m y-variables (x_{n+j} = y_j).
struct Shape {
    int n = 0;
    int m = 0;

    constexpr int vars() const noexcept { return n + m; }
    constexpr bool is_odd(int t) const noexcept { return t >= n; }
    friend constexpr bool operator==(const Shape&, const Shape&) = default;
};

struct Term {
    Exponent exp;
    Rational coef;
};

/// Sparse Laurent polynomial with exact rational coefficients. Terms are kept
/// sorted by exponent (lexicographically) with no zero coefficients, so two
/// polynomials are equal iff their term lists are equal.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Shape shape) : shape_(check(shape)) {}

    static LaurentPoly constant(Shape shape, const Rational& c) {
        return monomial(shape, Exponent(shape.vars()), c);
    }

    static LaurentPoly monomial(Shape shape, const Exponent& exp, const Rational& c = 1) {
        LaurentPoly p(shape);
        if (exp.size() != shape.vars()) throw InvalidArgument("monomial: exponent length mismatch");
        if (c != 0) p.terms_.push_back({exp, c});
        return p;
    }

    /// The variable x_t (0-based, y_j is t = n + j).
    static LaurentPoly variable(Shape shape, int t) {
        Exponent e(shape.vars());
        e[t] = 1;
        return monomial(shape, e);
    }

    /// Builds a polynomial from an unsorted term list, merging duplicate
    /// exponents and dropping zeros.
    static LaurentPoly from_terms(Shape shape, std::vector<Term> terms) {
        LaurentPoly p(shape);
        for (const auto& t : terms)
            if (t.exp.size() != shape.vars()) throw InvalidArgument("term exponent length mismatch");
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.exp < b.exp; });
        p.terms_.reserve(terms.size());
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
                p.terms_.back().coef += t.coef;
            } else {
                if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
                p.terms_.push_back(std::move(t));
            }
        }
        if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
        return p;
    }

    Shape shape() const noexcept { return shape_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Exponent& e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Exponent& x) { return t.exp < x; });
        if (it != terms_.end() && it->exp == e) return it->coef;
        return 0;
    }

    std::vector<Exponent> exponents() const {
        std::vector<Exponent> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.push_back(t.exp);
        return out;
    }

    std::vector<long> total_degrees() const {
        std::vector<long> ds;
        for (const auto& t : terms_) ds.push_back(t.exp.total_degree());
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        return ds;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.shape_ != b.shape_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t t = 0; t < a.terms_.size(); ++t)
            if (a.terms_[t].exp != b.terms_[t].exp || a.terms_[t].coef != b.terms_[t].coef)
                return false;
        return true;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, 1); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, -1); }

    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = merge(*this, b, 1); }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = merge(*this, b, -1); }

    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
        if (c == 0) return LaurentPoly(p.shape_);
        LaurentPoly r = p;
        for (auto& t : r.terms_) t.coef *= c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& p, const Rational& c) { return c * p; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        same_shape(a, b);
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) prod.push_back({s.exp + t.exp, s.coef * t.coef});
        return from_terms(a.shape_, std::move(prod));
    }

    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    /// Multiplication by the monomial x^e.
    LaurentPoly shifted(const Exponent& e) const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.exp = t.exp + e;
        return r;
    }

    /// Euler operator x_t d/dx_t.
    LaurentPoly euler(int t) const {
        check_index(t);
        LaurentPoly r(shape_);
        r.terms_.reserve(terms_.size());
        for (const auto& term : terms_)
            if (term.exp[t] != 0) r.terms_.push_back({term.exp, term.coef * term.exp[t]});
        return r;
    }

    /// Renames variable t to perm[t].
    LaurentPoly permuted(std::span<const int> perm) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& term : terms_) {
            Exponent e(shape_.vars());
            for (int t = 0; t < shape_.vars(); ++t) e[perm[t]] = term.exp[t];
            out.push_back({e, term.coef});
        }
        return from_terms(shape_, std::move(out));
    }

    /// Swaps variables a and b.
    LaurentPoly swapped(int a, int b) const {
        std::vector<int> perm(shape_.vars());
        for (int t = 0; t < shape_.vars(); ++t) perm[t] = t;
        std::swap(perm[a], perm[b]);
        return permuted(perm);
    }

    std::string to_string() const;

    void check_index(int t) const {
        if (t < 0 || t >= shape_.vars())
            throw InvalidArgument("variable index " + std::to_string(t) + " out of range");
    }

    static void same_shape(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.shape_ != b.shape_) throw InvalidArgument("polynomial shape mismatch");
    }

private:
    static Shape check(Shape s) {
        if (s.n < 0 || s.m < 0 || s.vars() > kMaxVars)
            throw InvalidArgument("invalid polynomial shape (" + std::to_string(s.n) + "," +
                                  std::to_string(s.m) + ")");
        return s;
    }

    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, int sign) {
        same_shape(a, b);
        LaurentPoly r(a.shape_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
                r.terms_.push_back({b.terms_[j].exp, sign > 0 ? b.terms_[j].coef : Rational(-b.terms_[j].coef)});
                ++j;
            } else {
                Rational c = sign > 0 ? Rational(a.terms_[i].coef + b.terms_[j].coef)
                                      : Rational(a.terms_[i].coef - b.terms_[j].coef);
                if (c != 0) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Shape shape_{};
    std::vector<Term> terms_;
};

inline std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    const int nv = shape_.vars();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->coef;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        Rational a = abs(c);
        bool unit_monomial = true;
        std::string mono;
        for (int t = 0; t < nv; ++t) {
            int e = it->exp[t];
            if (e == 0) continue;
            unit_monomial = false;
            if (!mono.empty()) mono += "*";
            mono += t < shape_.n ? "x" + std::to_string(t + 1) : "y" + std::to_string(t - shape_.n + 1);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (unit_monomial) s += to_display(a);
        else if (a == 1) s += mono;
        else s += to_display(a) + "*" + mono;
    }
    return s;
}

/// Unit exponent vector e_t.
inline Exponent unit_exponent(Shape shape, int t) {
    Exponent e(shape.vars());
    e[t] = 1;
    return e;
}

/// f * (x_i - x_j).
inline LaurentPoly multiply_by_difference(const LaurentPoly& f, int i, int j) {
    return f.shifted(unit_exponent(f.shape(), i)) - f.shifted(unit_exponent(f.shape(), j));
}

/// Exact quotient f / (x_i - x_j) when it is a Laurent polynomial.
///
/// Terms are grouped by the exponents of the other variables and by
/// e_i + e_j; inside one group f is x_j^s * c(t) with t = x_i / x_j and the
/// quotient exists iff c(1) = 0. The quotient coefficients are negated prefix
/// sums of the group coefficients ordered by e_i.
inline std::optional<LaurentPoly> divide_by_difference(const LaurentPoly& f, int i, int j) {
    f.check_index(i);
    f.check_index(j);
    if (i == j) throw InvalidArgument("divide_by_difference: i == j");
    struct Keyed {
        Exponent key;
        int a;
        const Rational* coef;
    };
    std::vector<Keyed> items;
    items.reserve(f.size());
    for (const auto& t : f.terms()) {
        Exponent key = t.exp;
        key[i] = t.exp[i] + t.exp[j];
        key[j] = 0;
        items.push_back({key, t.exp[i], &t.coef});
    }
    std::sort(items.begin(), items.end(), [](const Keyed& x, const Keyed& y) {
        if (x.key != y.key) return x.key < y.key;
        return x.a < y.a;
    });
    std::vector<Term> out;
    std::size_t g = 0;
    while (g < items.size()) {
        std::size_t h = g;
        while (h < items.size() && items[h].key == items[g].key) ++h;
        const Exponent& key = items[g].key;
        const int s = key[i];
        Rational running = 0;
        for (std::size_t t = g; t < h; ++t) {
            running -= *items[t].coef;
            const int a = items[t].a;
            const int next_a = t + 1 < h ? items[t + 1].a : a;
            if (t + 1 == h) break;
            if (running == 0) continue;
            for (int b = a; b < next_a; ++b) {
                Exponent e = key;
                e[i] = b;
                e[j] = s - 1 - b;
                out.push_back({e, running});
            }
        }
        if (running != 0) return std::nullopt;
        g = h;
    }
    return LaurentPoly::from_terms(f.shape(), std::move(out));
}

/// Returns g with f * x_i = g * (x_i - x_j), i.e. g = f / (1 - x_j/x_i),
/// when such a Laurent polynomial exists.
inline std::optional<LaurentPoly> laurent_divide_exact(const LaurentPoly& f, int i, int j) {
    return divide_by_difference(f.shifted(unit_exponent(f.shape(), i)), i, j);
}

/// Restriction to the hyperplane x_i = x_j: the exponent of variable j is
/// folded into variable i, leaving variable j inactive (exponent 0).
inline LaurentPoly substitute_equal(const LaurentPoly& f, int i, int j) {
    f.check_index(i);
    f.check_index(j);
    if (i == j) throw InvalidArgument("substitute_equal: i == j");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Exponent e = t.exp;
        e[i] += e[j];
        e[j] = 0;
        out.push_back({e, t.coef});
    }
    return LaurentPoly::from_terms(f.shape(), std::move(out));
}

}  // namespace cms
