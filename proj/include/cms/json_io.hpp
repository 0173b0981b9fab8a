#pragma once

// JSON encodings shared by the command line and the tests. Rationals are
// always strings "p/q"; polynomial terms are sorted by exponent.

#include <json.hpp>

#include "cms/harish_chandra.hpp"
#include "cms/localized.hpp"
#include "cms/quasi_invariants.hpp"
#include "cms/spectral.hpp"
#include "cms/weights.hpp"

namespace cms::io {

using json = nlohmann::json;

inline json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw InvalidArgument("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

inline json exponent_to_json(const Exponent& e) { return e.to_vector(); }

inline Exponent exponent_from_json(const json& j) {
    if (!j.is_array()) throw InvalidArgument("expected an integer array, got " + j.dump());
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InvalidArgument("exponent entries must be integers");
        v.push_back(x.get<int>());
    }
    return Exponent(std::span<const int>(v));
}

inline json poly_to_json(const LaurentPoly& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) terms.push_back({{"exp", exponent_to_json(t.exp)}, {"coef", rational_to_json(t.coef)}});
    return {{"n", f.shape().n}, {"m", f.shape().m}, {"terms", terms}};
}

inline LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("terms"))
        throw InvalidArgument("polynomial JSON needs keys n, m, terms");
    const Shape s{j.at("n").get<int>(), j.at("m").get<int>()};
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        Exponent e = exponent_from_json(t.at("exp"));
        if (e.size() != s.vars()) throw InvalidArgument("term exponent length does not match n + m");
        terms.push_back({e, rational_from_json(t.at("coef"))});
    }
    return LaurentPoly::from_terms(s, std::move(terms));
}

inline json localized_to_json(const LocalizedFn& f) {
    json den = json::array();
    const int v = f.shape().vars();
    for (int p = 0; p < static_cast<int>(f.denominator().size()); ++p)
        if (f.denominator()[p]) {
            auto [i, j] = LocalizedFn::pair_of(v, p);
            den.push_back({{"pair", {i, j}}, {"exp", f.denominator()[p]}});
        }
    return {{"num", poly_to_json(f.numerator())}, {"den", den}};
}

inline json params_to_json(const DeformedParams& p) { return {{"n", p.n}, {"m", p.m}, {"k", rational_to_json(p.k)}}; }

inline DeformedParams params_from_json(const json& j) {
    DeformedParams p;
    if (j.contains("n")) p.n = j.at("n").get<int>();
    if (j.contains("m")) p.m = j.at("m").get<int>();
    if (j.contains("k")) p.k = rational_from_json(j.at("k"));
    p.validate();
    return p;
}

inline json hc_to_json(const HCPolynomial& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) terms.push_back({{"exp", exponent_to_json(t.exp)}, {"coef", rational_to_json(t.coef)}});
    return {{"vars", f.vars()}, {"terms", terms}};
}

inline json vector_to_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_to_json(x));
    return a;
}

inline json basis_to_json(const SubspaceBasis& b) {
    json support = json::array(), elems = json::array();
    for (const auto& e : b.support) support.push_back(exponent_to_json(e));
    for (const auto& g : b.elements) elems.push_back(poly_to_json(g));
    return {{"params", params_to_json(b.params)}, {"support", support}, {"basis", elems}};
}

inline json blocks_to_json(const std::vector<SpectralBlock>& blocks) {
    json out = json::array();
    for (const auto& b : blocks) {
        json chi = json::object(), nil = json::object(), reps = json::array(), basis = json::array();
        for (std::size_t p = 0; p < b.character.size(); ++p) chi[std::to_string(p + 1)] = rational_to_json(b.character[p]);
        for (std::size_t p = 0; p < b.nilpotency.size(); ++p) nil[std::to_string(p + 1)] = b.nilpotency[p];
        for (const auto& r : b.reps) reps.push_back(exponent_to_json(r));
        for (const auto& v : b.basis) basis.push_back(vector_to_json(v));
        out.push_back({{"character", chi},
                       {"reps", reps},
                       {"dim", b.dim()},
                       {"nilpotency", nil},
                       {"eigen_dim", b.eigen_dim},
                       {"basis", basis}});
    }
    return out;
}

inline json ab_to_json(const ABPair& p) { return {{"A", p.A}, {"B", p.B}}; }

inline Weight weight_from_json(const json& j) {
    if (!j.is_array()) throw InvalidArgument("expected an integer array, got " + j.dump());
    Weight w;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InvalidArgument("weight entries must be integers");
        w.push_back(x.get<int>());
    }
    return w;
}

}  // namespace cms::io
