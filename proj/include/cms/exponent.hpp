#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cms/errors.hpp"

namespace cms {

/// Maximum number of variables n + m supported by the fixed-width exponent.
inline constexpr int kMaxVars = 8;

/// Integer exponent vector of a Laurent monomial; entries may be negative.
/// The first n entries belong to the x-variables, the remaining m to y.
class Exponent {
public:
    Exponent() = default;

    explicit Exponent(int size) : size_(check_size(size)) {}

    Exponent(std::initializer_list<int> entries) : size_(check_size(static_cast<int>(entries.size()))) {
        std::copy(entries.begin(), entries.end(), data_.begin());
    }

    explicit Exponent(std::span<const int> entries) : size_(check_size(static_cast<int>(entries.size()))) {
        std::copy(entries.begin(), entries.end(), data_.begin());
    }

    int size() const noexcept { return size_; }
    int operator[](int t) const noexcept { return data_[t]; }
    int& operator[](int t) noexcept { return data_[t]; }

    const int* begin() const noexcept { return data_.data(); }
    const int* end() const noexcept { return data_.data() + size_; }
    int* begin() noexcept { return data_.data(); }
    int* end() noexcept { return data_.data() + size_; }

    long total_degree() const noexcept {
        long s = 0;
        for (int t = 0; t < size_; ++t) s += data_[t];
        return s;
    }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    Exponent operator+(const Exponent& other) const noexcept {
        Exponent r = *this;
        for (int t = 0; t < size_; ++t) r.data_[t] += other.data_[t];
        return r;
    }

    Exponent operator-(const Exponent& other) const noexcept {
        Exponent r = *this;
        for (int t = 0; t < size_; ++t) r.data_[t] -= other.data_[t];
        return r;
    }

    friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
        if (a.size_ != b.size_) return false;
        return std::equal(a.begin(), a.end(), b.begin());
    }

    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) noexcept {
        if (a.size_ != b.size_) return a.size_ <=> b.size_;
        for (int t = 0; t < a.size_; ++t)
            if (a.data_[t] != b.data_[t]) return a.data_[t] <=> b.data_[t];
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        std::string s = "(";
        for (int t = 0; t < size_; ++t) {
            if (t) s += ",";
            s += std::to_string(data_[t]);
        }
        return s + ")";
    }

private:
    static int check_size(int size) {
        if (size < 0 || size > kMaxVars)
            throw InvalidArgument("exponent length " + std::to_string(size) + " exceeds " +
                                  std::to_string(kMaxVars));
        return size;
    }

    std::array<int, kMaxVars> data_{};
    int size_ = 0;
};

/// Dominance order on integer weights: mu <= lambda iff every prefix sum of
/// mu is at most the corresponding prefix sum of lambda.
inline bool dominance_leq(std::span<const int> mu, std::span<const int> lambda) {
    if (mu.size() != lambda.size()) throw InvalidArgument("dominance_leq: length mismatch");
    long sm = 0, sl = 0;
    for (std::size_t t = 0; t < mu.size(); ++t) {
        sm += mu[t];
        sl += lambda[t];
        if (sm > sl) return false;
    }
    return true;
}

inline bool dominance_leq(const Exponent& mu, const Exponent& lambda) {
    return dominance_leq(std::span<const int>(mu.begin(), mu.end()),
                         std::span<const int>(lambda.begin(), lambda.end()));
}

/// Strict total order extending dominance: compares prefix-sum vectors
/// lexicographically. If mu < lambda in dominance then mu precedes lambda.
inline bool dominance_linear_less(std::span<const int> a, std::span<const int> b) {
    long sa = 0, sb = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        sa += a[t];
        sb += b[t];
        if (sa != sb) return sa < sb;
    }
    return false;
}

inline bool dominance_linear_less(const Exponent& a, const Exponent& b) {
    return dominance_linear_less(std::span<const int>(a.begin(), a.end()),
                                 std::span<const int>(b.begin(), b.end()));
}

}  // namespace cms
