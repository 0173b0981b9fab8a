#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cms/laurent.hpp"
#include "cms/matrix.hpp"
#include "cms/operators.hpp"

namespace cms {

/// Polynomial in xi_1..xi_{n+m} with rational coefficients (k substituted).
class HCPolynomial {
public:
    HCPolynomial() = default;
    explicit HCPolynomial(int vars) : poly_(Shape{vars, 0}) {}

    static HCPolynomial constant(int vars, const Rational& c) {
        HCPolynomial p(vars);
        p.poly_ = LaurentPoly::constant(Shape{vars, 0}, c);
        return p;
    }

    /// xi_t (0-based).
    static HCPolynomial variable(int vars, int t) {
        HCPolynomial p(vars);
        p.poly_ = LaurentPoly::variable(Shape{vars, 0}, t);
        return p;
    }

    static HCPolynomial from_terms(int vars, std::vector<Term> terms) {
        for (const auto& t : terms)
            for (int e : t.exp)
                if (e < 0) throw InvalidArgument("HCPolynomial: negative exponent");
        HCPolynomial p(vars);
        p.poly_ = LaurentPoly::from_terms(Shape{vars, 0}, std::move(terms));
        return p;
    }

    int vars() const noexcept { return poly_.shape().n; }
    const std::vector<Term>& terms() const noexcept { return poly_.terms(); }
    bool is_zero() const noexcept { return poly_.is_zero(); }

    int degree() const {
        int d = 0;
        for (const auto& t : terms()) d = std::max<int>(d, static_cast<int>(t.exp.total_degree()));
        return d;
    }

    Rational evaluate(const std::vector<Rational>& xi) const {
        if (static_cast<int>(xi.size()) != vars()) throw InvalidArgument("HCPolynomial: point dimension mismatch");
        Rational v = 0;
        for (const auto& t : terms()) {
            Rational mono = t.coef;
            for (int s = 0; s < vars(); ++s)
                if (t.exp[s]) mono *= pow(xi[s], t.exp[s]);
            v += mono;
        }
        return v;
    }

    /// xi -> f(xi + c).
    HCPolynomial translated(const std::vector<Rational>& c) const {
        if (static_cast<int>(c.size()) != vars()) throw InvalidArgument("HCPolynomial: shift dimension mismatch");
        HCPolynomial out(vars());
        std::map<std::pair<int, int>, HCPolynomial> powers;  // (variable, e) -> (xi_t + c_t)^e
        auto power = [&](int t, int e) -> const HCPolynomial& {
            auto it = powers.find({t, e});
            if (it != powers.end()) return it->second;
            HCPolynomial base = variable(vars(), t) + constant(vars(), c[t]);
            HCPolynomial r = constant(vars(), 1);
            for (int q = 0; q < e; ++q) r = r * base;
            return powers.emplace(std::make_pair(t, e), std::move(r)).first->second;
        };
        for (const auto& term : terms()) {
            HCPolynomial piece = constant(vars(), term.coef);
            for (int t = 0; t < vars(); ++t)
                if (term.exp[t]) piece = piece * power(t, term.exp[t]);
            out = out + piece;
        }
        return out;
    }

    /// xi -> f(s xi), s the transposition of coordinates a and b.
    HCPolynomial swapped(int a, int b) const {
        HCPolynomial r(vars());
        r.poly_ = poly_.swapped(a, b);
        return r;
    }

    friend bool operator==(const HCPolynomial& a, const HCPolynomial& b) { return a.poly_ == b.poly_; }
    friend HCPolynomial operator+(const HCPolynomial& a, const HCPolynomial& b) { return wrap(a.poly_ + b.poly_); }
    friend HCPolynomial operator-(const HCPolynomial& a, const HCPolynomial& b) { return wrap(a.poly_ - b.poly_); }
    friend HCPolynomial operator*(const HCPolynomial& a, const HCPolynomial& b) { return wrap(a.poly_ * b.poly_); }
    friend HCPolynomial operator*(const Rational& c, const HCPolynomial& a) { return wrap(c * a.poly_); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (auto it = terms().rbegin(); it != terms().rend(); ++it) {
            const Rational& c = it->coef;
            if (!s.empty()) s += c < 0 ? " - " : " + ";
            else if (c < 0) s += "-";
            Rational a = abs(c);
            std::string mono;
            for (int t = 0; t < vars(); ++t) {
                if (!it->exp[t]) continue;
                if (!mono.empty()) mono += "*";
                mono += "xi" + std::to_string(t + 1);
                if (it->exp[t] != 1) mono += "^" + std::to_string(it->exp[t]);
            }
            if (mono.empty()) s += to_display(a);
            else if (a == 1) s += mono;
            else s += to_display(a) + "*" + mono;
        }
        return s;
    }

private:
    static HCPolynomial wrap(LaurentPoly p) {
        HCPolynomial r(p.shape().n);
        r.poly_ = std::move(p);
        return r;
    }

    LaurentPoly poly_;
};

/// d_t^{(q)} for every variable t and q = 1..order; table[q-1][t].
inline std::vector<std::vector<HCPolynomial>> hc_partial_table(int order, const DeformedParams& params) {
    params.validate();
    if (order < 1) throw InvalidArgument("order must be >= 1");
    const int v = params.vars();
    std::vector<std::vector<HCPolynomial>> d(order, std::vector<HCPolynomial>(v, HCPolynomial(v)));
    for (int t = 0; t < v; ++t) d[0][t] = params.k_parity_power(t, 1) * HCPolynomial::variable(v, t);
    for (int q = 1; q < order; ++q)
        for (int i = 0; i < v; ++i) {
            HCPolynomial acc = d[0][i] * d[q - 1][i];
            for (int j = i + 1; j < v; ++j) acc = acc - params.k_coupling(j) * (d[q - 1][i] - d[q - 1][j]);
            d[q][i] = std::move(acc);
        }
    return d;
}

/// d_i^{(p)}, i 0-based.
inline HCPolynomial hc_partial(int i, int order, const DeformedParams& params) {
    if (i < 0 || i >= params.vars()) throw InvalidArgument("hc_partial: index out of range");
    return hc_partial_table(order, params)[order - 1][i];
}

/// Image of L_p: sum_i k^{-p(i)} d_i^{(p)}.
inline HCPolynomial hc_integral(int order, const DeformedParams& params) {
    auto d = hc_partial_table(order, params);
    HCPolynomial acc(params.vars());
    for (int t = 0; t < params.vars(); ++t) acc = acc + params.k_parity_power(t, -1) * d[order - 1][t];
    return acc;
}

inline Rational chi_eval(const Exponent& lambda, int order, const DeformedParams& params) {
    if (lambda.size() != params.vars()) throw InvalidArgument("chi_eval: weight length mismatch");
    std::vector<Rational> pt(lambda.begin(), lambda.end());
    return hc_integral(order, params).evaluate(pt);
}

/// Characters chi_lambda(L_p) for p = 1..pmax from a single recursion table.
inline std::vector<Rational> character(const Exponent& lambda, int pmax, const DeformedParams& params) {
    auto d = hc_partial_table(pmax, params);
    std::vector<Rational> pt(lambda.begin(), lambda.end());
    std::vector<Rational> out;
    for (int p = 1; p <= pmax; ++p) {
        Rational acc = 0;
        for (int t = 0; t < params.vars(); ++t) acc += params.k_parity_power(t, -1) * d[p - 1][t].evaluate(pt);
        out.push_back(acc);
    }
    return out;
}

/// Deformed Weyl vector.
inline std::vector<Rational> rho_k(const DeformedParams& params) {
    params.validate();
    const int n = params.n, m = params.m;
    std::vector<Rational> rho;
    for (int i = 1; i <= n; ++i) rho.push_back(Rational(params.k * (2 * i - n - 1) - m) / 2);
    for (int j = 1; j <= m; ++j) rho.push_back(Rational((2 * j - m - 1) / params.k + n) / 2);
    return rho;
}

/// (e_t, e_t): 1 on x-coordinates, k on y-coordinates.
inline Rational form_weight(int t, const DeformedParams& params) { return params.parity(t) ? params.k : Rational(1); }

struct ImageReport {
    bool ok = true;
    std::optional<std::pair<int, int>> symmetry_witness;   // transposition that fails
    std::optional<std::pair<int, int>> hyperplane_witness;  // (x index, y index) that fails
    std::vector<Rational> point;                             // failing sample
    std::size_t samples_checked = 0;

    explicit operator bool() const noexcept { return ok; }
};

namespace detail {

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
    return make_rational(num(rng), den(rng));
}

}  // namespace detail

/// Exact test of the two image conditions: shifted S_n x S_m symmetry as a
/// polynomial identity, and the translation condition at `samples` random
/// rational points of each hyperplane.
inline ImageReport check_image_membership(const HCPolynomial& f, const DeformedParams& params, int samples = 20,
                                          std::uint64_t seed = 20240601) {
    params.validate();
    const int v = params.vars();
    if (f.vars() != v) throw InvalidArgument("check_image_membership: variable count mismatch");
    ImageReport rep;
    const auto rho = rho_k(params);
    // f(s(xi + rho) - rho) = f(xi) for adjacent transpositions s.
    for (int t = 0; t + 1 < v; ++t) {
        if (t + 1 == params.n) continue;
        std::vector<Rational> c(v);
        c[t] = rho[t + 1] - rho[t];
        c[t + 1] = rho[t] - rho[t + 1];
        if (f.translated(c).swapped(t, t + 1) != f) {
            rep.ok = false;
            rep.symmetry_witness = {t, t + 1};
            return rep;
        }
    }
    const Rational target = (1 + params.k) / 2;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < params.n; ++i)
        for (int j = 0; j < params.m; ++j) {
            const int y = params.n + j;
            for (int s = 0; s < samples; ++s) {
                std::vector<Rational> xi(v);
                for (auto& c : xi) c = detail::random_rational(rng);
                // (xi + rho, e_i - e_y) = xi_i + rho_i - k (xi_y + rho_y)
                xi[i] = target - rho[i] + params.k * (xi[y] + rho[y]);
                std::vector<Rational> moved = xi;
                moved[i] -= 1;
                moved[y] += 1;
                ++rep.samples_checked;
                if (f.evaluate(moved) != f.evaluate(xi)) {
                    rep.ok = false;
                    rep.hyperplane_witness = {i, j};
                    rep.point = xi;
                    return rep;
                }
            }
        }
    return rep;
}

/// c * L_{p_1} ... L_{p_r}; an empty word is the identity.
struct OperatorMonomial {
    Rational coef;
    std::vector<int> orders;
};

inline HCPolynomial hc_image(const std::vector<OperatorMonomial>& combo, const DeformedParams& params) {
    int top = 1;
    for (const auto& t : combo)
        for (int p : t.orders) {
            if (p < 1) throw InvalidArgument("operator order must be >= 1");
            top = std::max(top, p);
        }
    const int v = params.vars();
    std::vector<HCPolynomial> images;
    {
        auto d = hc_partial_table(top, params);
        for (int p = 1; p <= top; ++p) {
            HCPolynomial acc(v);
            for (int t = 0; t < v; ++t) acc = acc + params.k_parity_power(t, -1) * d[p - 1][t];
            images.push_back(std::move(acc));
        }
    }
    HCPolynomial out(v);
    for (const auto& t : combo) {
        HCPolynomial prod = HCPolynomial::constant(v, t.coef);
        for (int p : t.orders) prod = prod * images[p - 1];
        out = out + prod;
    }
    return out;
}

/// Injectivity of the Harish-Chandra map turns operator equality into
/// equality of images.
inline bool certify_operator_identity(const std::vector<OperatorMonomial>& lhs, const std::vector<OperatorMonomial>& rhs,
                                      const DeformedParams& params) {
    return hc_image(lhs, params) == hc_image(rhs, params);
}

inline bool certify_operator_identity(const HCPolynomial& lhs_image, const std::vector<OperatorMonomial>& rhs,
                                      const DeformedParams& params) {
    return lhs_image == hc_image(rhs, params);
}

/// Exact coefficients c with target = sum_w c_w * image(word_w), or nullopt
/// when target is outside their span. Free coefficients are set to 0.
inline std::optional<Vector> fit_operator_combination(const HCPolynomial& target,
                                                      const std::vector<std::vector<int>>& words,
                                                      const DeformedParams& params) {
    std::vector<HCPolynomial> cols;
    for (const auto& w : words) cols.push_back(hc_image({{Rational(1), w}}, params));
    std::map<Exponent, std::size_t> row_of;
    auto row = [&](const Exponent& e) {
        auto it = row_of.find(e);
        if (it == row_of.end()) it = row_of.emplace(e, row_of.size()).first;
        return it->second;
    };
    for (const auto& c : cols)
        for (const auto& t : c.terms()) row(t.exp);
    for (const auto& t : target.terms()) row(t.exp);
    ExactMatrix aug(row_of.size(), cols.size() + 1);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& t : cols[c].terms()) aug(row_of.at(t.exp), c) = t.coef;
    for (const auto& t : target.terms()) aug(row_of.at(t.exp), cols.size()) = t.coef;
    EchelonForm e = rref(aug);
    Vector sol(cols.size());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == cols.size()) return std::nullopt;
        sol[e.pivots[r]] = e.reduced(r, cols.size());
    }
    return sol;
}

/// Image of a radial operator sum_w c_w(x) * D_w under the leading-term rule:
/// each coefficient c_w is a rational function whose expansion in the
/// dominance direction starts with `leading`, and D_w is a word in the Euler
/// operators x_t d/dx_t (given as variable indices).
struct RadialTerm {
    Rational leading;
    std::vector<int> euler_word;
};

inline HCPolynomial radial_image(const std::vector<RadialTerm>& terms, int vars) {
    HCPolynomial out(vars);
    for (const auto& t : terms) {
        HCPolynomial prod = HCPolynomial::constant(vars, t.leading);
        for (int v : t.euler_word) prod = prod * HCPolynomial::variable(vars, v);
        out = out + prod;
    }
    return out;
}

}  // namespace cms
