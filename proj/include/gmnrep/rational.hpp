#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gmnrep {

/**
 * Exact rational number, always reduced with a positive denominator.
 *
 * Values that fit in 64 bits are stored inline and use 128-bit
 * intermediate arithmetic; anything larger is promoted to a GMP rational
 * and demoted again as soon as it fits. Immutable once constructed.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    /// Parses "p", "-p" or "p/q" (arbitrary size). Throws std::invalid_argument.
    static Rational from_string(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    /// Reduced "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    double to_double() const;
    mpq_class to_mpq() const;

    /// Numerator/denominator as decimal strings.
    std::string numerator_string() const;
    std::string denominator_string() const;

    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    using i128 = __int128;
    static Rational from_i128(i128 n, i128 d);
    static Rational from_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace gmnrep
