#include "wreath/bipoly.hpp"

#include <stdexcept>

namespace wreath {

BiPoly BiPoly::monomial(int deg_t, int deg_q, BigInt coeff) {
    if (deg_t < 0 || deg_q < 0) throw std::invalid_argument("monomial degrees must be >= 0");
    BiPoly p;
    if (coeff != 0) p.terms_[{deg_t, deg_q}] = std::move(coeff);
    return p;
}

int BiPoly::deg_t() const {
    int deg = -1;
    for (const auto& [key, c] : terms_) deg = std::max(deg, key.first);
    return deg;
}

int BiPoly::deg_q() const {
    int deg = -1;
    for (const auto& [key, c] : terms_) deg = std::max(deg, key.second);
    return deg;
}

BigInt BiPoly::coeff(int deg_t, int deg_q) const {
    const auto it = terms_.find({deg_t, deg_q});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BiPoly BiPoly::coeff_of_t(int s) const {
    BiPoly out;
    if (s < 0) return out;
    for (auto it = terms_.lower_bound({s, 0}); it != terms_.end() && it->first.first == s; ++it)
        out.terms_[{0, it->first.second}] = it->second;
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) {
        BigInt& slot = terms_[key];
        slot += c;
        if (slot == 0) terms_.erase(key);
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) {
        BigInt& slot = terms_[key];
        slot -= c;
        if (slot == 0) terms_.erase(key);
    }
    return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
    BiPoly out;
    for (const auto& [ka, ca] : lhs.terms_)
        for (const auto& [kb, cb] : rhs.terms_)
            out.terms_[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    out.prune();
    return out;
}

BiPoly operator-(const BiPoly& p) {
    BiPoly out;
    for (const auto& [key, c] : p.terms_) out.terms_[key] = -c;
    return out;
}

BiPoly BiPoly::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative polynomial power");
    BiPoly result(1L);
    BiPoly base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

BiPoly BiPoly::shifted(int dt, int dq) const {
    if (dt < 0 || dq < 0) throw std::invalid_argument("shift degrees must be >= 0");
    BiPoly out;
    for (const auto& [key, c] : terms_) out.terms_[{key.first + dt, key.second + dq}] = c;
    return out;
}

BiPoly BiPoly::subst_t_tq() const {
    BiPoly out;
    for (const auto& [key, c] : terms_) out.terms_[{key.first, key.first + key.second}] = c;
    return out;
}

BiPoly BiPoly::derivative_t() const {
    BiPoly out;
    for (const auto& [key, c] : terms_)
        if (key.first > 0) out.terms_[{key.first - 1, key.second}] = c * key.first;
    return out;
}

BiPoly BiPoly::eval_q1() const {
    BiPoly out;
    for (const auto& [key, c] : terms_) out.terms_[{key.first, 0}] += c;
    out.prune();
    return out;
}

BigInt BiPoly::value_at(const BigInt& t, const BigInt& q) const {
    BigInt total = 0;
    for (const auto& [key, c] : terms_) {
        BigInt term = c;
        for (int i = 0; i < key.first; ++i) term *= t;
        for (int j = 0; j < key.second; ++j) term *= q;
        total += term;
    }
    return total;
}

void BiPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

BiPoly q_int(int m) {
    if (m < 0) throw std::invalid_argument("q_int requires m >= 0");
    BiPoly p;
    for (int j = 0; j < m; ++j) p += BiPoly::monomial(0, j);
    return p;
}

BiPoly q_poch_t(int m) {
    if (m < 0) throw std::invalid_argument("q_poch_t requires m >= 0");
    BiPoly p(1L);
    for (int j = 0; j < m; ++j) p = p * (BiPoly(1L) - BiPoly::monomial(1, j));
    return p;
}

namespace {

// Shared skeleton of the two renderers: terms ascending by (t, q), a
// coefficient of magnitude one is dropped in front of a variable part.
std::string render(const BiPoly& p, const std::string& t_q_sep, bool brace_exponents) {
    if (p.is_zero()) return "0";

    auto power = [&](const char* var, int deg) -> std::string {
        std::string out = var;
        if (deg > 1) {
            out += '^';
            if (brace_exponents)
                out += '{' + std::to_string(deg) + '}';
            else
                out += std::to_string(deg);
        }
        return out;
    };

    std::string out;
    bool first = true;
    for (const auto& [key, c] : p.terms()) {
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        if (key.first > 0) vars += power("t", key.first);
        if (key.second > 0) {
            if (!vars.empty()) vars += t_q_sep;
            vars += power("q", key.second);
        }
        if (vars.empty()) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) out += magnitude.str();
            out += vars;
        }
    }
    return out;
}

}  // namespace

std::string to_text(const BiPoly& p) { return render(p, "*", false); }

std::string to_latex(const BiPoly& p) { return render(p, "", true); }

}  // namespace wreath
