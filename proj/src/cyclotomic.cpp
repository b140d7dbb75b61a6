#include "gmnrep/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gmnrep {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division of integer polynomials by a monic divisor.
Poly divide_monic(Poly num, const Poly& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) return {0};
    Poly quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        std::int64_t c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t j = 0; j < dd; ++j) {
        if (num[j] != 0) throw std::logic_error("cyclotomic: inexact polynomial division");
    }
    return quot;
}

struct Table {
    int m = 1;
    int phi = 1;
    // x^j mod Phi_m for j in [0, m), each of length phi.
    std::vector<Poly> power;
};

Poly compute_cyclotomic(int m);

const Poly& cached_cyclotomic(int m) {
    static std::mutex mu;
    static std::map<int, Poly> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    Poly p = compute_cyclotomic(m);
    std::lock_guard lock(mu);
    return cache.emplace(m, std::move(p)).first->second;
}

Poly compute_cyclotomic(int m) {
    Poly p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) p = divide_monic(p, cached_cyclotomic(d));
    }
    return p;
}

std::unique_ptr<Table> make_table(int m) {
    auto t = std::make_unique<Table>();
    t->m = m;
    const Poly& phi_poly = cached_cyclotomic(m);
    t->phi = static_cast<int>(phi_poly.size()) - 1;
    const auto phi = static_cast<std::size_t>(t->phi);
    Poly cur(phi, 0);
    cur[0] = 1;
    for (int j = 0; j < m; ++j) {
        t->power.push_back(cur);
        // multiply by x and reduce with x^phi = -(lower terms of Phi_m)
        std::int64_t top = cur[phi - 1];
        for (std::size_t k = phi - 1; k > 0; --k) cur[k] = cur[k - 1];
        cur[0] = 0;
        if (top != 0) {
            for (std::size_t k = 0; k < phi; ++k) cur[k] -= top * phi_poly[k];
        }
    }
    return t;
}

const Table& table_for(int m) {
    thread_local const Table* last = nullptr;
    if (last && last->m == m) return *last;
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Table>> tables;
    std::lock_guard lock(mu);
    auto it = tables.find(m);
    if (it == tables.end()) it = tables.emplace(m, make_table(m)).first;
    last = it->second.get();
    return *last;
}

void check_order(int m) {
    if (m < 1) throw std::domain_error("CycRat: order must be positive, got " + std::to_string(m));
}

void check_same(const CycRat& a, const CycRat& b) {
    if (a.order() != b.order()) {
        throw std::domain_error("CycRat: mismatched orders " + std::to_string(a.order()) + " and " +
                                std::to_string(b.order()));
    }
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

int cyclotomic_degree(int m) {
    check_order(m);
    return table_for(m).phi;
}

std::vector<std::int64_t> cyclotomic_polynomial(int m) {
    check_order(m);
    return cached_cyclotomic(m);
}

CycRat::CycRat(int m) : m_(m) {
    check_order(m);
    c_.resize(static_cast<std::size_t>(m));
}

CycRat::CycRat(int m, const Rational& r) : CycRat(m) { c_[0] = r; }

CycRat CycRat::from_coeffs(int m, std::span<const Rational> coeffs) {
    CycRat a(m);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) a.c_[k % static_cast<std::size_t>(m)] += coeffs[k];
    }
    a.reduce();
    return a;
}

CycRat CycRat::zeta_power(int m, std::int64_t k) {
    check_order(m);
    const Table& t = table_for(m);
    CycRat a(m);
    const Poly& p = t.power[static_cast<std::size_t>(mod(k, m))];
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] != 0) a.c_[j] = Rational(p[j]);
    }
    return a;
}

void CycRat::reduce() {
    const Table& t = table_for(m_);
    const auto phi = static_cast<std::size_t>(t.phi);
    for (std::size_t j = phi; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        const Poly& p = t.power[j];
        for (std::size_t k = 0; k < phi; ++k) {
            if (p[k] != 0) c_[k] += c_[j] * Rational(p[k]);
        }
        c_[j] = Rational();
    }
}

bool CycRat::is_zero() const {
    for (const auto& c : c_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool CycRat::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k) {
        if (!c_[k].is_zero()) return false;
    }
    return true;
}

bool CycRat::is_one() const { return is_rational() && c_[0].is_one(); }

Rational CycRat::to_rational() const {
    if (!is_rational()) throw std::domain_error("CycRat: value is not rational");
    return c_[0];
}

CycRat CycRat::operator-() const {
    CycRat r(*this);
    for (auto& c : r.c_) {
        if (!c.is_zero()) c = -c;
    }
    return r;
}

CycRat& CycRat::operator+=(const CycRat& b) {
    check_same(*this, b);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (!b.c_[k].is_zero()) c_[k] += b.c_[k];
    }
    return *this;
}

CycRat& CycRat::operator-=(const CycRat& b) {
    check_same(*this, b);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (!b.c_[k].is_zero()) c_[k] -= b.c_[k];
    }
    return *this;
}

CycRat operator+(const CycRat& a, const CycRat& b) {
    CycRat r(a);
    r += b;
    return r;
}

CycRat operator-(const CycRat& a, const CycRat& b) {
    CycRat r(a);
    r -= b;
    return r;
}

CycRat operator*(const CycRat& a, const Rational& s) {
    if (s.is_zero()) return CycRat(a.m_);
    CycRat r(a);
    for (auto& c : r.c_) {
        if (!c.is_zero()) c *= s;
    }
    return r;
}

CycRat operator*(const CycRat& a, const CycRat& b) {
    check_same(a, b);
    if (b.is_rational()) return a * b.c_[0];
    if (a.is_rational()) return b * a.c_[0];
    const auto m = static_cast<std::size_t>(a.m_);
    CycRat r(a.m_);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[(i + j) % m] += a.c_[i] * b.c_[j];
        }
    }
    r.reduce();
    return r;
}

bool operator==(const CycRat& a, const CycRat& b) {
    if (a.m_ != b.m_) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
        if (!(a.c_[k] == b.c_[k])) return false;
    }
    return true;
}

CycRat CycRat::pow(std::int64_t e) const {
    if (e < 0) return scalar_inverse(*this).pow(-e);
    CycRat result(m_, Rational(1));
    CycRat base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

CycRat root_of_unity(int m, int k) {
    check_order(m);
    if (k < 1 || k > m) {
        throw std::domain_error("root_of_unity: index " + std::to_string(k) + " outside [1, " +
                                std::to_string(m) + "]");
    }
    return CycRat::zeta_power(m, k - 1);
}

CycRat add(const CycRat& a, const CycRat& b) { return a + b; }
CycRat sub(const CycRat& a, const CycRat& b) { return a - b; }
CycRat mul(const CycRat& a, const CycRat& b) { return a * b; }
CycRat neg(const CycRat& a) { return -a; }

CycRat conjugate(const CycRat& a) {
    const int m = a.order();
    std::vector<Rational> moved(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) moved[static_cast<std::size_t>((m - k) % m)] = a.coeff(k);
    return CycRat::from_coeffs(m, moved);
}

CycRat scalar_inverse(const CycRat& a) {
    if (a.is_zero()) throw std::domain_error("scalar_inverse: zero has no inverse");
    const int m = a.order();
    for (int k = 0; k < m; ++k) {
        // a * zeta^k = r  =>  a^{-1} = r^{-1} zeta^k
        CycRat shifted = a * CycRat::zeta_power(m, k);
        if (shifted.is_rational()) return CycRat::zeta_power(m, k) * shifted.to_rational().inverse();
    }
    throw std::domain_error("scalar_inverse: value is not a rational multiple of a root of unity");
}

CycRat root_difference_inverse(int m, int k, int l) {
    check_order(m);
    if (k < 1 || k > m || l < 1 || l > m) throw std::domain_error("root_difference_inverse: root label out of range");
    if (k == l) throw std::domain_error("root_difference_inverse: equal roots");
    // xi_k - xi_l = zeta^(k-1) (1 - w), w = zeta^d
    const int d = static_cast<int>(mod(l - k, m));
    const int e = m / std::gcd(d, m);
    CycRat prod(m, Rational(1));
    for (int j = 2; j < e; ++j) prod *= CycRat(m, Rational(1)) - CycRat::zeta_power(m, static_cast<std::int64_t>(d) * j);
    return prod * CycRat::zeta_power(m, -(k - 1)) * Rational(1, e);
}

std::complex<double> to_complex(const CycRat& a) {
    const int m = a.order();
    std::complex<double> z = 0;
    for (int k = 0; k < m; ++k) {
        if (a.coeff(k).is_zero()) continue;
        double angle = 2.0 * std::numbers::pi * k / m;
        z += a.coeff(k).to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

std::ostream& operator<<(std::ostream& os, const CycRat& a) {
    bool first = true;
    for (int k = 0; k < a.order(); ++k) {
        const Rational& c = a.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (k == 1) os << "z";
        if (k > 1) os << "z^" << k;
    }
    if (first) os << "0";
    return os;
}

}  // namespace gmnrep
