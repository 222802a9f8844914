#include "wreath/series.hpp"

#include <stdexcept>

namespace wreath {

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly::RatPoly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

RatPoly RatPoly::from_t_poly(const BiPoly& p) {
    RatPoly out;
    for (const auto& [key, c] : p.terms()) {
        if (key.second != 0)
            throw std::invalid_argument("from_t_poly: polynomial involves q");
        if (static_cast<size_t>(key.first) >= out.coeffs_.size())
            out.coeffs_.resize(static_cast<size_t>(key.first) + 1);
        out.coeffs_[static_cast<size_t>(key.first)] = Rational(c);
    }
    out.trim();
    return out;
}

Rational RatPoly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& scalar) {
    for (Rational& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

RatPoly& RatPoly::operator/=(const Rational& scalar) {
    if (scalar == 0) throw std::invalid_argument("division by zero");
    for (Rational& c : coeffs_) c /= scalar;
    return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
    RatPoly out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    out.trim();
    return out;
}

std::string RatPoly::to_text() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[i].str();
        if (i == 1) out += "*t";
        if (i > 1) out += "*t^" + std::to_string(i);
    }
    return out;
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

PowerSeries PowerSeries::one(int order) {
    PowerSeries s(order);
    s.coeffs_[0] = RatPoly(Rational(1));
    return s;
}

PowerSeries PowerSeries::monomial(int order, int k, RatPoly poly) {
    PowerSeries s(order);
    if (k < 0) throw std::invalid_argument("series monomial degree must be >= 0");
    if (k <= order) s.coeffs_[static_cast<size_t>(k)] = std::move(poly);
    return s;
}

void PowerSeries::set_coeff(int k, RatPoly poly) {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
    coeffs_[static_cast<size_t>(k)] = std::move(poly);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

PowerSeries PowerSeries::scaled(const RatPoly& factor) const {
    PowerSeries out(order());
    for (size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] * factor;
    return out;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    const int order = std::min(a.order(), b.order());
    PowerSeries out(order);
    for (int k = 0; k <= order; ++k) {
        RatPoly acc;
        for (int i = 0; i <= k; ++i) acc += a.coeff(i) * b.coeff(k - i);
        out.set_coeff(k, std::move(acc));
    }
    return out;
}

PowerSeries series_exp(const PowerSeries& s) {
    if (!s.coeff(0).is_zero())
        throw std::invalid_argument("series_exp requires a zero constant term");
    const int order = s.order();
    PowerSeries result = PowerSeries::one(order);
    PowerSeries term = PowerSeries::one(order);
    for (int k = 1; k <= order; ++k) {
        // term enters as s^(k-1)/(k-1)! and leaves as s^k/k!
        term = series_mul(term, s).scaled(RatPoly(Rational(1, k)));
        bool all_zero = true;
        for (int i = 0; i <= order; ++i)
            if (!term.coeff(i).is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero) break;  // s^k already truncates away
        result += term;
    }
    return result;
}

bool series_equal(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series equality requires matching orders");
    for (int k = 0; k <= a.order(); ++k)
        if (!(a.coeff(k) == b.coeff(k))) return false;
    return true;
}

}  // namespace wreath
