#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "plinear/errors.hpp"

namespace plinear {

/// Exponent vector of a Laurent monomial, stored inline (at most kMaxVars
/// variables). Ordered lexicographically; vectors of different length
/// never meet inside one polynomial.
class ExpVec {
public:
    static constexpr std::size_t kMaxVars = 8;

    ExpVec() = default;

    explicit ExpVec(std::size_t n) : n_(static_cast<std::uint8_t>(n))
    {
        if (n == 0 || n > kMaxVars)
            throw Error("ExpVec: variable count must be in [1, 8]");
    }

    ExpVec(std::initializer_list<std::int64_t> comps) : ExpVec(comps.size())
    {
        std::size_t i = 0;
        for (auto c : comps)
            c_[i++] = c;
    }

    explicit ExpVec(const std::vector<std::int64_t>& comps) : ExpVec(comps.size())
    {
        std::copy(comps.begin(), comps.end(), c_.begin());
    }

    std::size_t size() const noexcept { return n_; }

    std::int64_t operator[](std::size_t i) const noexcept { return c_[i]; }
    std::int64_t& operator[](std::size_t i) noexcept { return c_[i]; }

    const std::int64_t* begin() const noexcept { return c_.data(); }
    const std::int64_t* end() const noexcept { return c_.data() + n_; }

    bool is_zero() const noexcept
    {
        return std::all_of(begin(), end(), [](std::int64_t v) { return v == 0; });
    }

    ExpVec& operator+=(const ExpVec& o) noexcept
    {
        for (std::size_t i = 0; i < n_; ++i)
            c_[i] += o.c_[i];
        return *this;
    }

    ExpVec& operator-=(const ExpVec& o) noexcept
    {
        for (std::size_t i = 0; i < n_; ++i)
            c_[i] -= o.c_[i];
        return *this;
    }

    friend ExpVec operator+(ExpVec a, const ExpVec& b) noexcept { return a += b; }
    friend ExpVec operator-(ExpVec a, const ExpVec& b) noexcept { return a -= b; }

    ExpVec operator-() const noexcept
    {
        ExpVec r = *this;
        for (std::size_t i = 0; i < n_; ++i)
            r.c_[i] = -r.c_[i];
        return r;
    }

    ExpVec scaled(std::int64_t k) const noexcept
    {
        ExpVec r = *this;
        for (std::size_t i = 0; i < n_; ++i)
            r.c_[i] *= k;
        return r;
    }

    /// True iff every component is divisible by p.
    bool divisible_by(std::int64_t p) const noexcept
    {
        return std::all_of(begin(), end(), [p](std::int64_t v) { return v % p == 0; });
    }

    /// Componentwise exact division; only valid when divisible_by(p).
    ExpVec divided(std::int64_t p) const noexcept
    {
        ExpVec r = *this;
        for (std::size_t i = 0; i < n_; ++i)
            r.c_[i] /= p;
        return r;
    }

    bool non_negative() const noexcept
    {
        return std::all_of(begin(), end(), [](std::int64_t v) { return v >= 0; });
    }

    std::vector<std::int64_t> to_vector() const { return {begin(), end()}; }

    friend bool operator==(const ExpVec& a, const ExpVec& b) noexcept
    {
        return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
    }

    friend std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b) noexcept
    {
        if (a.n_ != b.n_)
            return a.n_ <=> b.n_;
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < n_; ++i) {
            if (i)
                s += ",";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

private:
    std::array<std::int64_t, kMaxVars> c_{};
    std::uint8_t n_ = 0;
};

inline std::int64_t dot(const std::vector<std::int64_t>& a, const ExpVec& x) noexcept
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += a[i] * x[i];
    return s;
}

} // namespace plinear
