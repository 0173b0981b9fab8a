#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cms/errors.hpp"
#include "cms/laurent.hpp"
#include "cms/localized.hpp"
#include "cms/rational.hpp"

namespace cms {

/// n x-variables, m y-variables and the deformation parameter k.
/// Variable t has parity 0 for t < n and parity 1 otherwise.
struct DeformedParams {
    int n = 1;
    int m = 1;
    Rational k = make_rational(-1, 2);

    DeformedParams() = default;
    DeformedParams(int n_, int m_, Rational k_) : n(n_), m(m_), k(std::move(k_)) { validate(); }

    void validate() const {
        if (n < 0 || m < 0 || n + m < 1) throw InvalidArgument("need n, m >= 0 and n + m >= 1");
        if (n + m > kMaxVars) throw InvalidArgument("n + m exceeds " + std::to_string(kMaxVars));
        if (k == 0) throw InvalidArgument("deformation parameter k must be nonzero");
    }

    Shape shape() const noexcept { return {n, m}; }
    int vars() const noexcept { return n + m; }
    int parity(int t) const noexcept { return t < n ? 0 : 1; }

    /// k^{e * parity(t)}.
    Rational k_parity_power(int t, int e) const { return parity(t) ? pow(k, e) : Rational(1); }

    /// k^{1 - parity(t)}.
    Rational k_coupling(int t) const { return parity(t) ? Rational(1) : k; }
};

enum class Mode { strict, localized };

namespace detail {

// Arithmetic the recursion needs, specialised for the two value rings.
struct StrictRing {
    using Value = LaurentPoly;
    static Value euler(const Value& f, int t) { return f.euler(t); }
    static Value ratio_term(const Value& h, int i, int j, int order) {
        if (h.is_zero()) return h;
        auto g = laurent_divide_exact(h, i, j);
        if (!g) throw DivisionObstruction(i, j, order);
        return std::move(*g);
    }
};

struct LocalizedRing {
    using Value = LocalizedFn;
    static Value euler(const Value& f, int t) { return f.euler(t); }
    static Value ratio_term(const Value& h, int i, int j, int) { return h.times_ratio(i, j); }
};

/// Table of partial operators d_i^{(q)} f for q = 1..order and all i. Every
/// entry is computed once and reused by all indices at the next level.
template <class Ring>
std::vector<std::vector<typename Ring::Value>> partial_table(const typename Ring::Value& f, int order,
                                                             const DeformedParams& params) {
    using Value = typename Ring::Value;
    const int nv = params.vars();
    std::vector<std::vector<Value>> table(order + 1);
    table[1].reserve(nv);
    for (int i = 0; i < nv; ++i) table[1].push_back(params.k_parity_power(i, 1) * Ring::euler(f, i));
    for (int q = 2; q <= order; ++q) {
        table[q].reserve(nv);
        for (int i = 0; i < nv; ++i) {
            const Value& prev = table[q - 1][i];
            Value acc = params.k_parity_power(i, 1) * Ring::euler(prev, i);
            for (int j = 0; j < nv; ++j) {
                if (j == i) continue;
                Value h = prev - table[q - 1][j];
                if (h.is_zero()) continue;
                acc = acc - params.k_coupling(j) * Ring::ratio_term(h, i, j, q);
            }
            table[q].push_back(std::move(acc));
        }
    }
    return table;
}

inline void check_apply(int order, Shape shape, const DeformedParams& params) {
    params.validate();
    if (order < 1) throw InvalidArgument("operator order must be >= 1");
    if (shape != params.shape()) throw InvalidArgument("input shape does not match (n, m)");
}

template <class Ring>
typename Ring::Value integral_from_table(const std::vector<std::vector<typename Ring::Value>>& table, int order,
                                         const DeformedParams& params) {
    typename Ring::Value acc(params.shape());
    for (int i = 0; i < params.vars(); ++i) acc = acc + params.k_parity_power(i, -1) * table[order][i];
    return acc;
}

}  // namespace detail

/// d_i^{(p)} f, strict: every term x_i/(x_i - x_j) h must divide exactly.
/// Throws DivisionObstruction otherwise. `i` is 0-based.
inline LaurentPoly apply_partial(int i, int order, const LaurentPoly& f, const DeformedParams& params) {
    detail::check_apply(order, f.shape(), params);
    f.check_index(i);
    return detail::partial_table<detail::StrictRing>(f, order, params)[order][i];
}

inline LocalizedFn apply_partial_localized(int i, int order, const LocalizedFn& f, const DeformedParams& params) {
    detail::check_apply(order, f.shape(), params);
    f.numerator().check_index(i);
    return detail::partial_table<detail::LocalizedRing>(f, order, params)[order][i];
}

/// L_p f = sum_i k^{-parity(i)} d_i^{(p)} f in the strict ring.
inline LaurentPoly apply_integral(int order, const LaurentPoly& f, const DeformedParams& params) {
    detail::check_apply(order, f.shape(), params);
    auto table = detail::partial_table<detail::StrictRing>(f, order, params);
    return detail::integral_from_table<detail::StrictRing>(table, order, params);
}

/// L_p f in the localized ring; defined for every Laurent input.
inline LocalizedFn apply_integral_localized(int order, const LocalizedFn& f, const DeformedParams& params) {
    detail::check_apply(order, f.shape(), params);
    auto table = detail::partial_table<detail::LocalizedRing>(f, order, params);
    return detail::integral_from_table<detail::LocalizedRing>(table, order, params);
}

/// L_1 f, ..., L_pmax f from one shared recursion table (strict ring).
inline std::vector<LaurentPoly> apply_integrals_upto(int pmax, const LaurentPoly& f, const DeformedParams& params) {
    detail::check_apply(pmax, f.shape(), params);
    auto table = detail::partial_table<detail::StrictRing>(f, pmax, params);
    std::vector<LaurentPoly> out;
    for (int p = 1; p <= pmax; ++p) out.push_back(detail::integral_from_table<detail::StrictRing>(table, p, params));
    return out;
}

using OperatorValue = std::variant<LaurentPoly, LocalizedFn>;

/// Mode-dispatching entry point used by the command line.
inline OperatorValue apply_integral(int order, const LaurentPoly& f, const DeformedParams& params, Mode mode) {
    if (mode == Mode::strict) return apply_integral(order, f, params);
    return apply_integral_localized(order, LocalizedFn(f), params);
}

/// Applies a product L_{p_1} ... L_{p_r} (rightmost first) in the strict ring.
inline LaurentPoly apply_word(const std::vector<int>& orders, const LaurentPoly& f, const DeformedParams& params) {
    LaurentPoly g = f;
    for (auto it = orders.rbegin(); it != orders.rend(); ++it) g = apply_integral(*it, g, params);
    return g;
}

}  // namespace cms
