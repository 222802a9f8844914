#pragma once

// Exact sparse bivariate polynomials in (t, q) over unbounded integers,
// plus the q-analogue constructors the identity checks are built from.

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreath {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse polynomial in t and q. Canonical: no zero coefficient is ever
/// stored, so equality is plain term-map equality. The term map is ordered by
/// (deg_t, deg_q) ascending, which fixes the output order of every formatter.
class BiPoly {
public:
    using Key = std::pair<int, int>;  // (deg_t, deg_q)
    using TermMap = std::map<Key, BigInt>;

    BiPoly() = default;  // zero
    explicit BiPoly(BigInt constant) {
        if (constant != 0) terms_[{0, 0}] = std::move(constant);
    }
    explicit BiPoly(long constant) : BiPoly(BigInt(constant)) {}

    static BiPoly monomial(int deg_t, int deg_q, BigInt coeff = BigInt(1));
    static BiPoly var_t() { return monomial(1, 0); }
    static BiPoly var_q() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Degree in t; -1 for the zero polynomial.
    int deg_t() const;
    int deg_q() const;

    BigInt coeff(int deg_t, int deg_q) const;

    /// The coefficient of t^s as a polynomial in q alone; zero for s < 0.
    BiPoly coeff_of_t(int s) const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
    friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
    friend BiPoly operator-(const BiPoly& p);

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly pow(int exponent) const;

    /// Multiplication by the monomial t^dt q^dq.
    BiPoly shifted(int dt, int dq) const;

    /// t -> t*q: sends t^i q^j to t^i q^(i+j).
    BiPoly subst_t_tq() const;

    /// Formal derivative in t.
    BiPoly derivative_t() const;

    /// q -> 1: collapses every q power, leaving a polynomial in t.
    BiPoly eval_q1() const;

    /// Exact evaluation.
    BigInt value_at(const BigInt& t, const BigInt& q) const;

private:
    void prune();

    TermMap terms_;
};

/// [m]_q = 1 + q + ... + q^(m-1); zero for m = 0.
BiPoly q_int(int m);

/// (t; q)_m = prod_{j=0}^{m-1} (1 - t q^j); one for m = 0.
BiPoly q_poch_t(int m);

/// Plain-text rendering, terms ascending by (t, q): "1 + 3t*q + t^2*q^3".
std::string to_text(const BiPoly& p);

/// LaTeX rendering with the same term order: "1 + 3tq + t^{2}q^{3}".
std::string to_latex(const BiPoly& p);

}  // namespace wreath
