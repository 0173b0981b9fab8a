#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cms/harish_chandra.hpp"
#include "cms/matrix.hpp"
#include "cms/operators.hpp"
#include "cms/quasi_invariants.hpp"
#include "cms/weights.hpp"

namespace cms {

/// Matrices of L_1..L_pmax on the basis (index p - 1); column e holds the
/// expansion of L_p applied to element e.
inline std::vector<ExactMatrix> action_matrices(const SubspaceBasis& basis, int pmax) {
    if (pmax < 1) throw InvalidArgument("pmax must be >= 1");
    const std::size_t d = basis.dim();
    std::vector<ExactMatrix> mats(pmax, ExactMatrix(d, d));
    for (std::size_t e = 0; e < d; ++e) {
        const auto images = apply_integrals_upto(pmax, basis.elements[e], basis.params);
        for (int p = 1; p <= pmax; ++p) {
            auto c = expand_in_basis(images[p - 1], basis);
            if (!c)
                throw ClosureViolation("L_" + std::to_string(p) + " maps basis element " + std::to_string(e) +
                                       " outside the span");
            for (std::size_t r = 0; r < d; ++r) mats[p - 1](r, e) = (*c)[r];
        }
    }
    return mats;
}

inline ExactMatrix action_matrix(const SubspaceBasis& basis, int p) {
    if (p < 1) throw InvalidArgument("operator order must be >= 1");
    return action_matrices(basis, p).back();
}

inline ExactMatrix commutator_on_subspace(int p, int q, const SubspaceBasis& basis) {
    const auto mats = action_matrices(basis, std::max(p, q));
    const auto& a = mats[p - 1];
    const auto& b = mats[q - 1];
    return a * b - b * a;
}

struct SpectralBlock {
    std::vector<Rational> character;  // chi(L_p), p = 1..pmax
    std::vector<Exponent> reps;       // leading weights of the block
    std::vector<Vector> basis;        // reduced echelon rows over the ambient basis
    std::vector<int> nilpotency;      // smallest N with (A_p - chi_p)^N = 0 on the block
    std::size_t eigen_dim = 0;        // dimension of the joint eigenspace inside the block

    std::size_t dim() const noexcept { return basis.size(); }
};

struct DecomposeOptions {
    int pmax = 0;                        // 0: 2(n+m)
    std::optional<long> degree;          // restrict to one degree slice
    bool combinatorial_check = true;     // only meaningful at k = -1/2
};

namespace detail {

/// Kernel of M^N once its dimension stops growing; also returns M^N.
inline std::pair<std::vector<Vector>, ExactMatrix> stable_kernel(const ExactMatrix& m) {
    ExactMatrix power = m;
    std::size_t last = nullspace(power).size();
    for (std::size_t step = 1; step < m.rows(); ++step) {
        ExactMatrix next = power * m;
        const std::size_t dim = nullspace(next).size();
        if (dim == last) break;
        power = std::move(next);
        last = dim;
    }
    return {nullspace(power), power};
}

inline ExactMatrix submatrix(const ExactMatrix& m, const std::vector<std::size_t>& idx) {
    ExactMatrix s(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) s(r, c) = m(idx[r], idx[c]);
    return s;
}

inline bool half_k(const DeformedParams& params) { return params.k == make_rational(-1, 2); }

}  // namespace detail

/// Whether two dominant weights have one central character according to the
/// set criterion on the associated (A, B) pairs.
inline bool combinatorially_equivalent(const Exponent& a, const Exponent& b, const DeformedParams& params) {
    const SuperShape sh{params.n, params.m};
    return equivalent(to_ab(sharp_inverse(a, sh), sh), to_ab(sharp_inverse(b, sh), sh));
}

/// Joint generalised eigenspaces of L_1..L_pmax on the basis.
inline std::vector<SpectralBlock> decompose(const SubspaceBasis& basis, const DecomposeOptions& opt = {}) {
    const DeformedParams& params = basis.params;
    const int pmax = opt.pmax > 0 ? opt.pmax : 2 * params.vars();
    if (pmax < 1) throw InvalidArgument("pmax must be >= 1");

    // Homogeneous basis elements; the integrals preserve degree.
    std::map<long, std::vector<std::size_t>> slices;
    for (std::size_t e = 0; e < basis.dim(); ++e) {
        const long deg = basis.leading(e).total_degree();
        for (const auto& t : basis.elements[e].terms())
            if (t.exp.total_degree() != deg) throw InvalidArgument("decompose: basis element is not homogeneous");
        if (!opt.degree || *opt.degree == deg) slices[deg].push_back(e);
    }

    std::vector<SpectralBlock> blocks;
    for (const auto& [deg, idx] : slices) {
        SubspaceBasis slice;
        slice.params = params;
        slice.support = basis.support;
        slice.reps = basis.reps;
        for (std::size_t e : idx) {
            slice.elements.push_back(basis.elements[e]);
            slice.coords.push_back(basis.coords[e]);
            slice.pivot.push_back(basis.pivot[e]);
        }
        const std::size_t d = idx.size();
        const auto mats = action_matrices(slice, pmax);

        // Group leading weights by their characters.
        auto rational_vec_less = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
        };
        std::vector<std::pair<std::vector<Rational>, std::vector<std::size_t>>> ordered;
        for (std::size_t t = 0; t < d; ++t) {
            auto chi = character(slice.leading(t), pmax, params);
            auto it = std::find_if(ordered.begin(), ordered.end(), [&](const auto& g) { return g.first == chi; });
            if (it == ordered.end()) ordered.push_back({chi, {t}});
            else it->second.push_back(t);
        }
        std::sort(ordered.begin(), ordered.end(),
                  [&](const auto& a, const auto& b) { return rational_vec_less(a.first, b.first); });

        if (opt.combinatorial_check && detail::half_k(params)) {
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t t = s + 1; t < d; ++t) {
                    bool numeric = false;
                    for (const auto& g : ordered)
                        if (std::count(g.second.begin(), g.second.end(), s) &&
                            std::count(g.second.begin(), g.second.end(), t))
                            numeric = true;
                    const bool comb = combinatorially_equivalent(slice.leading(s), slice.leading(t), params);
                    if (numeric != comb)
                        throw GroupingMismatch("weights " + slice.leading(s).to_string() + " and " +
                                               slice.leading(t).to_string() + (numeric ? " share" : " differ in") +
                                               " characters but the set criterion disagrees");
                }
        }

        std::vector<Vector> all_vectors;
        std::vector<SpectralBlock> local;
        for (const auto& [chi, members] : ordered) {
            SpectralBlock blk;
            blk.character = chi;
            for (std::size_t t : members) blk.reps.push_back(slice.leading(t));
            std::sort(blk.reps.begin(), blk.reps.end());
            // Intersection of the stable kernels of (A_p - chi_p).
            std::vector<ExactMatrix> conditions;
            std::vector<ExactMatrix> shifted;
            for (int p = 1; p <= pmax; ++p) {
                ExactMatrix m = mats[p - 1].minus_scalar(chi[p - 1]);
                conditions.push_back(detail::stable_kernel(m).second);
                shifted.push_back(std::move(m));
            }
            auto kernel = nullspace(ExactMatrix::stack(conditions));
            if (!kernel.empty()) {
                EchelonForm ech = rref(ExactMatrix::from_rows(d, kernel));
                for (std::size_t r = 0; r < ech.pivots.size(); ++r) blk.basis.push_back(ech.reduced.row(r));
            }
            // Nilpotency orders on the block.
            const ExactMatrix cols = ExactMatrix::from_columns(d, blk.basis);
            for (int p = 1; p <= pmax; ++p) {
                int order = 0;
                ExactMatrix cur = cols;
                while (!cur.is_zero() && order <= static_cast<int>(d)) {
                    cur = shifted[p - 1] * cur;
                    ++order;
                }
                blk.nilpotency.push_back(order);
            }
            blk.eigen_dim = nullspace(ExactMatrix::stack(shifted)).size();
            for (const auto& v : blk.basis) all_vectors.push_back(v);
            local.push_back(std::move(blk));
        }
        if (all_vectors.size() != d || (d > 0 && rank(ExactMatrix::from_rows(d, all_vectors)) != d))
            throw DecompositionGap("blocks span " + std::to_string(all_vectors.size()) + " of " + std::to_string(d) +
                                   " dimensions in degree " + std::to_string(deg));
        // Embed slice coordinates into the ambient basis.
        for (auto& blk : local) {
            for (auto& v : blk.basis) {
                Vector full(basis.dim());
                for (std::size_t t = 0; t < d; ++t) full[idx[t]] = v[t];
                v = std::move(full);
            }
            blocks.push_back(std::move(blk));
        }
    }
    return blocks;
}

/// Size of the class of lambda (a weight of X+_{n,m}) at k = -1/2.
inline std::size_t predicted_block_dimension(const Exponent& lambda, const DeformedParams& params) {
    params.validate();
    if (!detail::half_k(params)) throw InvalidArgument("the class prediction holds at k = -1/2 only");
    if (!is_dominant(lambda, params.shape())) throw InvalidArgument("weight is not dominant");
    const SuperShape sh{params.n, params.m};
    return class_of(to_ab(sharp_inverse(lambda, sh), sh), sh).size();
}

/// Leading weights of the class of lambda, as weights of X+_{n,m}.
inline std::vector<Exponent> class_members(const Exponent& lambda, const DeformedParams& params) {
    const SuperShape sh{params.n, params.m};
    std::vector<Exponent> out;
    for (const auto& q : class_of(to_ab(sharp_inverse(lambda, sh), sh), sh)) out.push_back(sharp(from_ab(q, sh), sh));
    return out;
}

}  // namespace cms
