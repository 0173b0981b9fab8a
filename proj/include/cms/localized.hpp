#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cms/laurent.hpp"

namespace cms {

/// Element of the Laurent ring localized at the differences (x_i - x_j):
/// num / prod_{i<j} (x_i - x_j)^{den(i,j)}. Always stored reduced, so no
/// factor with positive exponent divides the numerator; the representation is
/// then unique and equality is structural.
class LocalizedFn {
public:
    LocalizedFn() = default;

    explicit LocalizedFn(Shape shape) : num_(shape), den_(pair_count(shape.vars()), 0) {}

    LocalizedFn(LaurentPoly num)  // NOLINT(google-explicit-constructor)
        : num_(std::move(num)), den_(pair_count(num_.shape().vars()), 0) {}

    /// num / prod (x_i - x_j)^{den}; `den` is indexed by `pair_index`.
    static LocalizedFn from_parts(LaurentPoly num, std::vector<int> den) {
        LocalizedFn f(std::move(num));
        if (den.size() != f.den_.size()) throw InvalidArgument("LocalizedFn: denominator size mismatch");
        for (int e : den)
            if (e < 0) throw InvalidArgument("LocalizedFn: negative denominator exponent");
        f.den_ = std::move(den);
        f.reduce();
        return f;
    }

    static int pair_count(int vars) { return vars * (vars - 1) / 2; }

    /// Index of the unordered pair {i, j}, i < j, in the denominator vector.
    static int pair_index(int vars, int i, int j) {
        if (i > j) std::swap(i, j);
        return i * vars - i * (i + 1) / 2 + (j - i - 1);
    }

    static std::pair<int, int> pair_of(int vars, int index) {
        for (int i = 0; i < vars; ++i)
            for (int j = i + 1; j < vars; ++j)
                if (pair_index(vars, i, j) == index) return {i, j};
        throw InvalidArgument("pair index out of range");
    }

    Shape shape() const noexcept { return num_.shape(); }
    const LaurentPoly& numerator() const noexcept { return num_; }
    const std::vector<int>& denominator() const noexcept { return den_; }

    int den_exponent(int i, int j) const { return den_[pair_index(shape().vars(), i, j)]; }

    bool is_polynomial() const noexcept {
        for (int e : den_)
            if (e) return false;
        return true;
    }

    bool is_zero() const noexcept { return num_.is_zero(); }

    const LaurentPoly& as_polynomial() const {
        if (!is_polynomial()) throw InvalidArgument("LocalizedFn is not a Laurent polynomial");
        return num_;
    }

    friend bool operator==(const LocalizedFn& a, const LocalizedFn& b) {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }

    LocalizedFn operator-() const {
        LocalizedFn r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend LocalizedFn operator*(const Rational& c, const LocalizedFn& f) {
        if (c == 0) return LocalizedFn(f.shape());
        LocalizedFn r = f;
        r.num_ = c * r.num_;
        return r;
    }

    friend LocalizedFn operator+(const LocalizedFn& a, const LocalizedFn& b) { return combine(a, b, false); }
    friend LocalizedFn operator-(const LocalizedFn& a, const LocalizedFn& b) { return combine(a, b, true); }

    friend LocalizedFn operator*(const LocalizedFn& a, const LaurentPoly& p) {
        LocalizedFn r = a;
        r.num_ = r.num_ * p;
        r.reduce();
        return r;
    }

    friend LocalizedFn operator*(const LocalizedFn& a, const LocalizedFn& b) {
        LocalizedFn r = a;
        r.num_ = r.num_ * b.num_;
        for (std::size_t t = 0; t < r.den_.size(); ++t) r.den_[t] += b.den_[t];
        r.reduce();
        return r;
    }

    /// Multiplication by x^e.
    LocalizedFn shifted(const Exponent& e) const {
        LocalizedFn r = *this;
        r.num_ = r.num_.shifted(e);
        return r;
    }

    /// Division by (x_i - x_j)^times.
    LocalizedFn divided_by_difference(int i, int j, int times = 1) const {
        LocalizedFn r = *this;
        if (i > j) {
            std::swap(i, j);
            if (times % 2) r.num_ = -r.num_;
        }
        r.den_[pair_index(shape().vars(), i, j)] += times;
        r.reduce_pair(i, j);
        return r;
    }

    /// Multiplication by x_i / (x_i - x_j).
    LocalizedFn times_ratio(int i, int j) const {
        return shifted(unit_exponent(shape(), i)).divided_by_difference(i, j);
    }

    /// Euler operator x_t d/dx_t by the quotient rule.
    LocalizedFn euler(int t) const {
        num_.check_index(t);
        const int nv = shape().vars();
        std::vector<int> involved;
        for (int p = 0; p < static_cast<int>(den_.size()); ++p) {
            if (!den_[p]) continue;
            auto [a, b] = pair_of(nv, p);
            if (a == t || b == t) involved.push_back(p);
        }
        if (involved.empty()) {
            LocalizedFn r = *this;
            r.num_ = num_.euler(t);
            return r;
        }
        // d(N/D) = (dN * P - N * sum_q e_q * d(l_q) * P/l_q) / (D * P), with
        // P the product of the linear factors l_q involving x_t.
        std::vector<LaurentPoly> factors;
        for (int p : involved) {
            auto [a, b] = pair_of(nv, p);
            factors.push_back(LaurentPoly::variable(shape(), a) - LaurentPoly::variable(shape(), b));
        }
        LaurentPoly all = LaurentPoly::constant(shape(), 1);
        for (const auto& l : factors) all = all * l;
        LaurentPoly numer = num_.euler(t) * all;
        for (std::size_t q = 0; q < involved.size(); ++q) {
            auto [a, b] = pair_of(nv, involved[q]);
            LaurentPoly dl = a == t ? LaurentPoly::variable(shape(), a) : -LaurentPoly::variable(shape(), b);
            LaurentPoly rest = LaurentPoly::constant(shape(), den_[involved[q]]);
            for (std::size_t r = 0; r < involved.size(); ++r)
                if (r != q) rest = rest * factors[r];
            numer -= num_ * dl * rest;
        }
        std::vector<int> den = den_;
        for (int p : involved) ++den[p];
        return from_parts(std::move(numer), std::move(den));
    }

    std::string to_string() const {
        std::string s = "(" + num_.to_string() + ")";
        const int nv = shape().vars();
        std::string d;
        for (int p = 0; p < static_cast<int>(den_.size()); ++p) {
            if (!den_[p]) continue;
            auto [a, b] = pair_of(nv, p);
            if (!d.empty()) d += "*";
            d += "(v" + std::to_string(a + 1) + "-v" + std::to_string(b + 1) + ")";
            if (den_[p] != 1) d += "^" + std::to_string(den_[p]);
        }
        if (!d.empty()) s += " / " + d;
        return s;
    }

private:
    static LocalizedFn combine(const LocalizedFn& a, const LocalizedFn& b, bool subtract) {
        if (a.shape() != b.shape()) throw InvalidArgument("LocalizedFn shape mismatch");
        if (a.den_ == b.den_) {
            LocalizedFn r = a;
            r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
            r.reduce();
            return r;
        }
        const int nv = a.shape().vars();
        std::vector<int> den(a.den_.size());
        LaurentPoly na = a.num_, nb = b.num_;
        for (std::size_t p = 0; p < den.size(); ++p) {
            den[p] = std::max(a.den_[p], b.den_[p]);
            auto [i, j] = pair_of(nv, static_cast<int>(p));
            for (int t = a.den_[p]; t < den[p]; ++t) na = multiply_by_difference(na, i, j);
            for (int t = b.den_[p]; t < den[p]; ++t) nb = multiply_by_difference(nb, i, j);
        }
        LocalizedFn r(a.shape());
        r.num_ = subtract ? na - nb : na + nb;
        r.den_ = std::move(den);
        r.reduce();
        return r;
    }

    void reduce_pair(int i, int j) {
        int& e = den_[pair_index(shape().vars(), i, j)];
        while (e > 0) {
            if (num_.is_zero()) {
                e = 0;
                break;
            }
            auto q = divide_by_difference(num_, i, j);
            if (!q) break;
            num_ = std::move(*q);
            --e;
        }
    }

    void reduce() {
        if (num_.is_zero()) {
            std::fill(den_.begin(), den_.end(), 0);
            return;
        }
        const int nv = shape().vars();
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) reduce_pair(i, j);
    }

    LaurentPoly num_;
    std::vector<int> den_;
};

}  // namespace cms
