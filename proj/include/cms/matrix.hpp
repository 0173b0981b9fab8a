#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cms/errors.hpp"
#include "cms/rational.hpp"

namespace cms {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static ExactMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns) {
        ExactMatrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw InvalidArgument("from_columns: length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
        }
        return m;
    }

    static ExactMatrix from_rows(std::size_t cols, const std::vector<Vector>& rows) {
        ExactMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw InvalidArgument("from_rows: length mismatch");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    Vector row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
        ExactMatrix c(a.rows_, b.cols_);
        Rational t;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == 0) continue;
                    t = aik * b(k, j);
                    c(i, j) += t;
                }
            }
        return c;
    }

    friend Vector operator*(const ExactMatrix& a, const Vector& v) {
        if (a.cols_ != v.size()) throw InvalidArgument("matrix-vector dimension mismatch");
        Vector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
        return out;
    }

    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix difference dimension mismatch");
        ExactMatrix c = a;
        for (std::size_t t = 0; t < c.data_.size(); ++t) c.data_[t] -= b.data_[t];
        return c;
    }

    /// this - s * I.
    ExactMatrix minus_scalar(const Rational& s) const {
        if (rows_ != cols_) throw InvalidArgument("minus_scalar on non-square matrix");
        ExactMatrix c = *this;
        for (std::size_t i = 0; i < rows_; ++i) c(i, i) -= s;
        return c;
    }

    ExactMatrix transposed() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Vertical concatenation.
    static ExactMatrix stack(const std::vector<ExactMatrix>& blocks) {
        if (blocks.empty()) return {};
        std::size_t rows = 0;
        for (const auto& b : blocks) {
            if (b.cols_ != blocks.front().cols_) throw InvalidArgument("stack: column mismatch");
            rows += b.rows_;
        }
        ExactMatrix m(rows, blocks.front().cols_);
        std::size_t r0 = 0;
        for (const auto& b : blocks) {
            std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + r0 * m.cols_);
            r0 += b.rows_;
        }
        return m;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < rows_; ++r) {
            s += "[";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) s += ", ";
                s += to_display((*this)(r, c));
            }
            s += "]\n";
        }
        return s;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

struct EchelonForm {
    ExactMatrix reduced;             // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each remaining row
};

/// Gauss-Jordan elimination to reduced row echelon form.
inline EchelonForm rref(ExactMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    Rational t;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
        const Rational inv = 1 / m(r, c);
        for (std::size_t k = c; k < cols; ++k) m(r, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (m(r, k) == 0) continue;
                t = f * m(r, k);
                m(i, k) -= t;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    ExactMatrix reduced(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < cols; ++k) reduced(i, k) = m(i, k);
    return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

/// Scales a nonzero vector to coprime integers with a positive first nonzero entry.
inline Vector primitive(Vector v) {
    Integer den = 1, g = 0;
    for (const auto& x : v)
        if (x != 0) den = lcm(den, x.get_den());
    for (auto& x : v) {
        x *= den;
        if (x != 0) g = gcd(g, x.get_num());
    }
    if (g == 0) return v;
    int sign = 1;
    for (const auto& x : v)
        if (x != 0) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    for (auto& x : v) x = x / g * sign;
    return v;
}

/// Exact basis of {v : M v = 0}: one vector per free column of the reduced
/// echelon form (in increasing column order), each made primitive.
inline std::vector<Vector> nullspace(const ExactMatrix& m) {
    const std::size_t cols = m.cols();
    EchelonForm e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(primitive(std::move(v)));
    }
    return basis;
}

}  // namespace cms
