#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "plinear/ring/integer.hpp"

namespace plinear {

/// Dense matrix over Z/m with entries stored as canonical residues.
class ResidueMatrix {
public:
    ResidueMatrix() = default;
    ResidueMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus)
        : rows_(rows), cols_(cols), mod_(modulus), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint64_t modulus() const noexcept { return mod_; }

    std::uint64_t operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    std::uint64_t& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

    std::vector<std::uint64_t> apply(std::span<const std::uint64_t> v) const
    {
        std::vector<std::uint64_t> out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            const std::uint64_t* row = &data_[i * cols_];
            if (mod_ <= (std::uint64_t{1} << 32)) {
                // products stay below 2^64, so the 128-bit sum cannot wrap
                unsigned __int128 acc = 0;
                for (std::size_t j = 0; j < cols_; ++j)
                    acc += static_cast<unsigned __int128>(row[j]) * v[j];
                out[i] = static_cast<std::uint64_t>(acc % mod_);
            } else {
                std::uint64_t acc = 0;
                for (std::size_t j = 0; j < cols_; ++j)
                    acc = add_mod(acc, mul_mod(row[j], v[j], mod_), mod_);
                out[i] = acc;
            }
        }
        return out;
    }

    bool is_zero() const noexcept
    {
        for (auto x : data_)
            if (x)
                return false;
        return true;
    }

    friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint64_t mod_ = 1;
    std::vector<std::uint64_t> data_;
};

/// Dot product with signed integer weights, reduced mod m.
inline std::uint64_t weighted_sum(std::span<const std::int64_t> w, std::span<const std::uint64_t> v,
                                  std::uint64_t m)
{
    std::uint64_t acc = 0;
    const auto sm = static_cast<std::int64_t>(m);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0 || v[i] == 0)
            continue;
        std::int64_t r = w[i] % sm;
        auto wr = static_cast<std::uint64_t>(r < 0 ? r + sm : r);
        acc = add_mod(acc, mul_mod(wr, v[i], m), m);
    }
    return acc;
}

} // namespace plinear
