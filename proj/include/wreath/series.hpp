#pragma once

// Univariate polynomials in t over exact rationals and truncated formal power
// series in u with such polynomials as coefficients. Just enough arithmetic
// for the cross-multiplied generating-function checks: add, Cauchy product,
// and the exponential of a series with zero constant term.

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wreath/bipoly.hpp"

namespace wreath {

using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial in t over rationals; trailing zeros are trimmed so that
/// equality is coefficient equality.
class RatPoly {
public:
    RatPoly() = default;  // zero
    RatPoly(std::initializer_list<Rational> coeffs);
    explicit RatPoly(Rational constant);

    /// Converts an integer polynomial that must not involve q.
    static RatPoly from_t_poly(const BiPoly& p);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int i) const;

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs) { return *this = *this * rhs; }
    RatPoly& operator*=(const Rational& scalar);
    RatPoly& operator/=(const Rational& scalar);

    friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
    friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
    friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
    friend RatPoly operator*(RatPoly lhs, const Rational& scalar) { return lhs *= scalar; }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    std::string to_text() const;

private:
    void trim();

    std::vector<Rational> coeffs_;  // coeffs_[i] multiplies t^i
};

/// Power series in u truncated at a fixed order, coefficients in RatPoly.
/// Sums and products never claim precision beyond the smaller operand order;
/// comparing series of different orders is rejected outright.
class PowerSeries {
public:
    explicit PowerSeries(int order);  // zero series of the given order

    static PowerSeries one(int order);
    /// poly * u^k, truncated to the given order.
    static PowerSeries monomial(int order, int k, RatPoly poly);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const RatPoly& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
    void set_coeff(int k, RatPoly poly);

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    friend PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }
    friend PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) { return lhs -= rhs; }

    /// Multiplies every u coefficient by the polynomial.
    PowerSeries scaled(const RatPoly& factor) const;

private:
    std::vector<RatPoly> coeffs_;  // coeffs_[k] multiplies u^k
};

/// Cauchy product truncated at the smaller operand order.
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

/// sum_{k=0..order} s^k / k!. The u^0 coefficient of s must vanish, so the
/// sum is exact at the truncation order.
PowerSeries series_exp(const PowerSeries& s);

/// Coefficient-wise equality; throws std::invalid_argument when the orders
/// differ, since such a comparison has no meaning for truncated series.
bool series_equal(const PowerSeries& a, const PowerSeries& b);

}  // namespace wreath
