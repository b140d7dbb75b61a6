#include "gmnrep/dense_algebra.hpp"

#include <numeric>
#include <stdexcept>

#include "gmnrep/group.hpp"

namespace gmnrep {

namespace {

using i128 = __int128;

bool checked_mul(i128 a, i128 b, i128& out) { return !__builtin_mul_overflow(a, b, &out); }
bool checked_add(i128 a, i128 b, i128& out) { return !__builtin_add_overflow(a, b, &out); }

std::optional<std::int64_t> to_i64(const std::string& s) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) return std::nullopt;
        return v;
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
}

}  // namespace

DenseKernel::DenseKernel(int m, int n)
    : m_(m), n_(n), order_(group_order(m, n)), phi_(cyclotomic_degree(m)) {
    if (order_ > kDenseCap) throw std::length_error("DenseKernel: group too large");
    std::vector<GroupElement> elems;
    elems.reserve(order_);
    for (std::uint64_t r = 0; r < order_; ++r) elems.push_back(group_unrank(m, n, r));
    table_.resize(order_ * order_);
    for (std::uint64_t g = 0; g < order_; ++g) {
        for (std::uint64_t h = 0; h < order_; ++h) {
            table_[g * order_ + h] = static_cast<std::uint32_t>(group_rank(gmnrep::multiply(elems[g], elems[h])));
        }
    }
    const auto phi_poly = cyclotomic_polynomial(m);
    const int span = 2 * phi_ - 1;
    for (int j = 0; j < span; ++j) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(phi_), 0);
        if (j < phi_) {
            v[static_cast<std::size_t>(j)] = 1;
        } else {
            const auto& prev = xpow_.back();
            const std::int64_t top = prev[static_cast<std::size_t>(phi_ - 1)];
            for (int k = phi_ - 1; k >= 1; --k) v[static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k - 1)];
            v[0] = 0;
            for (int k = 0; k < phi_; ++k) v[static_cast<std::size_t>(k)] -= top * phi_poly[static_cast<std::size_t>(k)];
        }
        xpow_.push_back(std::move(v));
    }
}

std::optional<DenseKernel::Scaled> DenseKernel::scale(const AlgebraElement& a) const {
    if (a.m() != m_ || a.n() != n_) throw std::domain_error("DenseKernel::scale: algebra mismatch");
    std::int64_t denom = 1;
    for (const auto& [g, c] : a.terms()) {
        for (int k = 0; k < phi_; ++k) {
            const auto d = to_i64(c.coeff(k).denominator_string());
            if (!d) return std::nullopt;
            const i128 l = static_cast<i128>(denom / std::gcd(denom, *d)) * *d;
            if (l > INT64_MAX) return std::nullopt;
            denom = static_cast<std::int64_t>(l);
        }
    }
    Scaled s;
    s.denom = denom;
    s.coef.assign(order_ * static_cast<std::uint64_t>(phi_), 0);
    for (const auto& [g, c] : a.terms()) {
        const std::uint64_t r = group_rank(g);
        s.support.push_back(static_cast<std::uint32_t>(r));
        for (int k = 0; k < phi_; ++k) {
            const Rational& q = c.coeff(k);
            if (q.is_zero()) continue;
            const auto num = to_i64(q.numerator_string());
            const auto den = to_i64(q.denominator_string());
            if (!num || !den) return std::nullopt;
            i128 v = 0;
            if (!checked_mul(static_cast<i128>(*num), static_cast<i128>(denom / *den), v)) return std::nullopt;
            if (v > INT64_MAX || v < -INT64_MAX) return std::nullopt;
            s.coef[r * static_cast<std::uint64_t>(phi_) + static_cast<std::uint64_t>(k)] = static_cast<std::int64_t>(v);
        }
    }
    return s;
}

std::optional<DenseKernel::Product> DenseKernel::multiply(const Scaled& a, const Scaled& b) const {
    const int span = 2 * phi_ - 1;
    std::vector<i128> full(order_ * static_cast<std::uint64_t>(span), 0);
    const auto P = static_cast<std::uint64_t>(phi_);
    for (std::uint32_t g : a.support) {
        const std::int64_t* ag = &a.coef[g * P];
        for (std::uint32_t h : b.support) {
            const std::int64_t* bh = &b.coef[h * P];
            i128* dst = &full[table_[static_cast<std::uint64_t>(g) * order_ + h] * static_cast<std::uint64_t>(span)];
            for (int u = 0; u < phi_; ++u) {
                if (ag[u] == 0) continue;
                for (int v = 0; v < phi_; ++v) {
                    if (bh[v] == 0) continue;
                    i128 prod = 0;
                    if (!checked_mul(ag[u], bh[v], prod) || !checked_add(dst[u + v], prod, dst[u + v])) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    Product out(order_ * P, 0);
    for (std::uint64_t g = 0; g < order_; ++g) {
        for (int j = 0; j < span; ++j) {
            const i128 x = full[g * static_cast<std::uint64_t>(span) + static_cast<std::uint64_t>(j)];
            if (x == 0) continue;
            for (int k = 0; k < phi_; ++k) {
                const std::int64_t r = xpow_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                if (r == 0) continue;
                i128 prod = 0;
                if (!checked_mul(x, r, prod) || !checked_add(out[g * P + static_cast<std::uint64_t>(k)], prod,
                                                             out[g * P + static_cast<std::uint64_t>(k)])) {
                    return std::nullopt;
                }
            }
        }
    }
    return out;
}

bool DenseKernel::is_zero(const Product& p) {
    for (i128 x : p) {
        if (x != 0) return false;
    }
    return true;
}

std::optional<bool> DenseKernel::is_idempotent(const Scaled& a) const {
    const auto sq = multiply(a, a);
    if (!sq) return std::nullopt;
    for (std::size_t k = 0; k < sq->size(); ++k) {
        i128 rhs = 0;
        if (!checked_mul(static_cast<i128>(a.denom), static_cast<i128>(a.coef[k]), rhs)) return std::nullopt;
        if ((*sq)[k] != rhs) return false;
    }
    return true;
}

std::optional<bool> DenseKernel::product_is_zero(const Scaled& a, const Scaled& b) const {
    const auto p = multiply(a, b);
    if (!p) return std::nullopt;
    return is_zero(*p);
}

}  // namespace gmnrep
