#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "gmnrep/rational.hpp"

namespace gmnrep {

/**
 * Element of Q(zeta_m), zeta_m = exp(2 pi i / m).
 *
 * Stored as a coefficient vector of length m in the power basis
 * 1, zeta, ..., zeta^(m-1), kept in canonical form: the polynomial is
 * reduced modulo the m-th cyclotomic polynomial, so coefficients at
 * indices >= phi(m) are always zero. Two values are equal iff their
 * coefficient vectors are equal.
 *
 * Mixing orders in one operation throws std::domain_error.
 */
class CycRat {
public:
    /// Zero of order 1.
    CycRat() : CycRat(1) {}
    explicit CycRat(int m);
    CycRat(int m, const Rational& r);

    /// Builds from an arbitrary coefficient vector (any length, read mod x^m - 1) and reduces it.
    static CycRat from_coeffs(int m, std::span<const Rational> coeffs);
    /// zeta^k, k taken mod m.
    static CycRat zeta_power(int m, std::int64_t k);

    int order() const { return m_; }
    const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    std::vector<Rational> coeffs() const { return {c_.begin(), c_.end()}; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Constant coefficient; throws std::domain_error unless is_rational().
    Rational to_rational() const;

    CycRat operator-() const;
    friend CycRat operator+(const CycRat& a, const CycRat& b);
    friend CycRat operator-(const CycRat& a, const CycRat& b);
    friend CycRat operator*(const CycRat& a, const CycRat& b);
    friend CycRat operator*(const CycRat& a, const Rational& r);
    friend CycRat operator*(const Rational& r, const CycRat& a) { return a * r; }
    CycRat& operator+=(const CycRat& b);
    CycRat& operator-=(const CycRat& b);
    CycRat& operator*=(const CycRat& b) { return *this = *this * b; }

    friend bool operator==(const CycRat& a, const CycRat& b);

    CycRat pow(std::int64_t e) const;

private:
    void reduce();

    int m_;
    boost::container::small_vector<Rational, 4> c_;
};

/// Euler phi(m): the number of coefficients that can be nonzero in canonical form.
int cyclotomic_degree(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(int m);

/// zeta^(k-1): the fixed labelling of the m-th roots of unity by 1..m.
CycRat root_of_unity(int m, int k);

CycRat add(const CycRat& a, const CycRat& b);
CycRat sub(const CycRat& a, const CycRat& b);
CycRat mul(const CycRat& a, const CycRat& b);
CycRat neg(const CycRat& a);

/// Complex conjugation, zeta^k -> zeta^(m-k).
CycRat conjugate(const CycRat& a);

/// Inverse of r * zeta^k (r a nonzero rational). Any other input throws std::domain_error.
CycRat scalar_inverse(const CycRat& a);

/// 1 / (xi_k - xi_l) for distinct root labels k, l, built from the norm identity
/// prod_{j=1}^{e-1} (1 - w^j) = e for a primitive e-th root w. No general division.
CycRat root_difference_inverse(int m, int k, int l);

/// Evaluates at zeta = exp(2 pi i / m).
std::complex<double> to_complex(const CycRat& a);

std::ostream& operator<<(std::ostream& os, const CycRat& a);

}  // namespace gmnrep
