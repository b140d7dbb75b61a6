#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gmnrep/algebra.hpp"

namespace gmnrep {

/**
 * Group-algebra products over a precomputed multiplication table, with
 * coefficients scaled to integers in the power basis 1, zeta, ..., zeta^(phi-1).
 * Intended for small groups (order up to kDenseCap). Every operation returns
 * std::nullopt instead of overflowing; callers fall back to AlgebraElement.
 */
class DenseKernel {
public:
    static constexpr std::uint64_t kDenseCap = 5000;

    /// Throws std::length_error above kDenseCap.
    DenseKernel(int m, int n);

    /// value = coef / denom; coef has order() * phi() entries, group rank major.
    struct Scaled {
        std::int64_t denom = 1;
        std::vector<std::int64_t> coef;
        std::vector<std::uint32_t> support;  // ranks with a nonzero coefficient
    };
    using Product = std::vector<__int128>;

    int m() const { return m_; }
    int n() const { return n_; }
    std::uint64_t order() const { return order_; }
    int phi() const { return phi_; }

    std::optional<Scaled> scale(const AlgebraElement& a) const;
    /// Integer product of the scaled numerators; the value is the result over denom_a * denom_b.
    std::optional<Product> multiply(const Scaled& a, const Scaled& b) const;

    static bool is_zero(const Product& p);
    /// a * a == a, read from the scaled numerators.
    std::optional<bool> is_idempotent(const Scaled& a) const;
    std::optional<bool> product_is_zero(const Scaled& a, const Scaled& b) const;

private:
    int m_;
    int n_;
    std::uint64_t order_;
    int phi_;
    std::vector<std::uint32_t> table_;             // table_[g * order + h] = rank(gh)
    std::vector<std::vector<std::int64_t>> xpow_;  // x^j mod Phi_m, j < 2 phi - 1
};

}  // namespace gmnrep
