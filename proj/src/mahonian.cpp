#include "wreath/mahonian.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "wreath/series.hpp"

namespace wreath {

namespace {

void check_params(int a, int ell, int n) {
    if (a < 1) throw std::invalid_argument("color modulus a must be >= 1");
    if (ell < 0 || ell > a) throw std::invalid_argument("ell must lie in [0, a]");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
}

std::vector<int> default_low_set(int ell) {
    std::vector<int> low(static_cast<size_t>(ell));
    for (int c = 0; c < ell; ++c) low[static_cast<size_t>(c)] = c;
    return low;
}

// First (t, q) key, ascending, whose coefficients differ; keys above max_t
// are ignored so truncated comparisons can share this.
std::optional<CoeffWitness> first_mismatch(const BiPoly& lhs, const BiPoly& rhs,
                                           int max_t = std::numeric_limits<int>::max()) {
    auto it = lhs.terms().begin();
    auto jt = rhs.terms().begin();
    const auto witness = [](BiPoly::Key key, const BigInt& l, const BigInt& r) {
        return CoeffWitness{key.first, key.second, l.str(), r.str()};
    };
    while (it != lhs.terms().end() || jt != rhs.terms().end()) {
        if (it != lhs.terms().end() && it->first.first > max_t) {
            it = lhs.terms().end();
            continue;
        }
        if (jt != rhs.terms().end() && jt->first.first > max_t) {
            jt = rhs.terms().end();
            continue;
        }
        if (it == lhs.terms().end()) {
            auto w = witness(jt->first, BigInt(0), jt->second);
            return w;
        }
        if (jt == rhs.terms().end()) {
            auto w = witness(it->first, it->second, BigInt(0));
            return w;
        }
        if (it->first < jt->first) return witness(it->first, it->second, BigInt(0));
        if (jt->first < it->first) return witness(jt->first, BigInt(0), jt->second);
        if (it->second != jt->second) return witness(it->first, it->second, jt->second);
        ++it;
        ++jt;
    }
    return std::nullopt;
}

BigInt int_pow(BigInt base, int e) {
    BigInt out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

BiPoly euler_mahonian_recurrence(int a, int ell, int n) {
    check_params(a, ell, n);
    BiPoly poly(1L);  // empty window: no descents
    for (int m = 1; m <= n; ++m) {
        BiPoly next;
        for (int s = 0; s <= m; ++s) {
            BiPoly acc;
            const BiPoly stay = poly.coeff_of_t(s);
            if (!stay.is_zero())
                acc += (BiPoly(static_cast<long>(a)) * q_int(s + 1) -
                        BiPoly(static_cast<long>(ell))) *
                       stay;
            const BiPoly carry = poly.coeff_of_t(s - 1);
            if (!carry.is_zero())
                acc += (BiPoly::monomial(0, s, BigInt(a)) * q_int(m - s) +
                        BiPoly::monomial(0, m, BigInt(ell))) *
                       carry;
            next += acc.shifted(s, 0);
        }
        poly = next;
    }
    return poly;
}

EulerianMethod eulerian_method_from_name(const std::string& name) {
    if (name == "enumerate") return EulerianMethod::enumerate;
    if (name == "recurrence") return EulerianMethod::recurrence;
    if (name == "derivative") return EulerianMethod::derivative;
    if (name == "specialize") return EulerianMethod::specialize;
    throw std::invalid_argument("unknown eulerian method '" + name + "'");
}

namespace {

BiPoly eulerian_by_coeff_recurrence(int a, int ell, int n) {
    std::vector<BigInt> coeffs{BigInt(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<size_t>(m) + 1, BigInt(0));
        for (int s = 0; s <= m; ++s) {
            BigInt v = 0;
            if (s < static_cast<int>(coeffs.size()))
                v += BigInt(a * (s + 1) - ell) * coeffs[static_cast<size_t>(s)];
            if (s >= 1 && s - 1 < static_cast<int>(coeffs.size()))
                v += BigInt(a * (m - s) + ell) * coeffs[static_cast<size_t>(s - 1)];
            next[static_cast<size_t>(s)] = v;
        }
        coeffs = std::move(next);
    }
    BiPoly out;
    for (int s = 0; s < static_cast<int>(coeffs.size()); ++s)
        if (coeffs[static_cast<size_t>(s)] != 0)
            out += BiPoly::monomial(s, 0, coeffs[static_cast<size_t>(s)]);
    return out;
}

BiPoly eulerian_by_derivative(int a, int ell, int n) {
    const BiPoly t = BiPoly::var_t();
    BiPoly poly(1L);
    for (int m = 1; m <= n; ++m) {
        const BiPoly linear =
            BiPoly(static_cast<long>(a - ell)) + BiPoly::monomial(1, 0, BigInt(a) * (m - 1) + ell);
        poly = linear * poly +
               BiPoly(static_cast<long>(a)) * t * (BiPoly(1L) - t) * poly.derivative_t();
    }
    return poly;
}

}  // namespace

BiPoly eulerian(int a, int ell, int n, EulerianMethod method, const EnumOptions& opt) {
    check_params(a, ell, n);
    switch (method) {
        case EulerianMethod::enumerate:
            return distribution_by_enumeration(ColorOrder(a, default_low_set(ell)), n,
                                               Statistic::des_rmaj, opt)
                .eval_q1();
        case EulerianMethod::recurrence:
            return eulerian_by_coeff_recurrence(a, ell, n);
        case EulerianMethod::derivative:
            return eulerian_by_derivative(a, ell, n);
        case EulerianMethod::specialize:
            return euler_mahonian_recurrence(a, ell, n).eval_q1();
    }
    throw std::logic_error("unreachable");
}

std::vector<std::vector<int>> color_subsets(int a, int ell) {
    if (a < 1 || a > 30) throw std::invalid_argument("color modulus out of range");
    if (ell < 0 || ell > a) throw std::invalid_argument("ell must lie in [0, a]");
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << a); ++mask) {
        if (std::popcount(mask) != ell) continue;
        std::vector<int> colors;
        for (int c = 0; c < a; ++c)
            if ((mask >> c) & 1u) colors.push_back(c);
        subsets.push_back(std::move(colors));
    }
    return subsets;
}

namespace {

using Report = VerificationReport;

Report check_recursion(const VerifyParams& p, const EnumOptions& opt) {
    Report report{"recursion", p, "enumeration against the insertion recurrence", true, {}};
    const std::vector<int> low = p.low ? *p.low : default_low_set(p.ell);
    const BiPoly lhs = euler_mahonian_enumerate(p.a, low, p.n, opt);
    const BiPoly rhs = euler_mahonian_recurrence(p.a, p.ell, p.n);
    report.witness = first_mismatch(lhs, rhs);
    report.holds = !report.witness;
    return report;
}

Report check_recursion2(const VerifyParams& p) {
    if (p.n < 1) throw std::invalid_argument("recursion2 requires n >= 1");
    Report report{"recursion2", p, "q-difference functional equation", true, {}};
    const BiPoly t = BiPoly::var_t();
    const BiPoly q = BiPoly::var_q();
    const BiPoly one(1L);
    const BiPoly current = euler_mahonian_recurrence(p.a, p.ell, p.n);
    const BiPoly prev = euler_mahonian_recurrence(p.a, p.ell, p.n - 1);

    const BiPoly lhs = (one - q) * current;
    const BiPoly rhs =
        (BiPoly(static_cast<long>(p.a)) - (one - q) * BiPoly(static_cast<long>(p.ell))) *
            (one - BiPoly::monomial(1, p.n)) * prev -
        BiPoly(static_cast<long>(p.a)) * q * (one - t) * prev.subst_t_tq();
    report.witness = first_mismatch(lhs, rhs);
    report.holds = !report.witness;
    return report;
}

// Multiplied-through form: the infinite t-expansion is compared after
// clearing the Pochhammer denominator, so truncating the sum at S only
// disturbs t-degrees above S.
Report check_quotient(const VerifyParams& p) {
    Report report{"quotient", p, "cross-multiplied, compared through t-degree S", true, {}};
    const int S = report.params.trunc_t = p.trunc_t < 0 ? p.n + 3 : p.trunc_t;
    if (S < p.n) throw std::invalid_argument("quotient check needs S >= n");

    BiPoly partial_sum;
    for (int s = 0; s <= S; ++s) {
        const BiPoly base =
            BiPoly(static_cast<long>(p.a)) * q_int(s + 1) - BiPoly(static_cast<long>(p.ell));
        partial_sum += base.pow(p.n).shifted(s, 0);
    }
    const BiPoly product = q_poch_t(p.n + 1) * partial_sum;
    const BiPoly target = euler_mahonian_recurrence(p.a, p.ell, p.n);
    report.witness = first_mismatch(product, target, S);
    report.holds = !report.witness;
    return report;
}

Report check_des_quotient(const VerifyParams& p) {
    Report report{"des-quotient", p, "q = 1 quotient, compared through t-degree S", true, {}};
    const int S = report.params.trunc_t = p.trunc_t < 0 ? p.n + 3 : p.trunc_t;
    if (S < p.n) throw std::invalid_argument("des-quotient check needs S >= n");

    BiPoly partial_sum;
    for (int s = 0; s <= S; ++s)
        partial_sum += BiPoly::monomial(s, 0, int_pow(BigInt(p.a) * (s + 1) - p.ell, p.n));
    const BiPoly one_minus_t = BiPoly(1L) - BiPoly::var_t();
    const BiPoly product = one_minus_t.pow(p.n + 1) * partial_sum;
    const BiPoly target = eulerian(p.a, p.ell, p.n, EulerianMethod::recurrence);
    report.witness = first_mismatch(product, target, S);
    report.holds = !report.witness;
    return report;
}

// The exponential identities are formal statements per u-coefficient: the
// coefficient of u^n/n! is exactly the quotient identity at that n.
Report check_egf(const VerifyParams& p) {
    Report report{"egf", p, "per u-coefficient: quotient and des-quotient for each n <= N", true, {}};
    const int N = report.params.trunc_u = p.trunc_u < 0 ? 5 : p.trunc_u;
    for (int m = 0; m <= N; ++m) {
        VerifyParams sub = p;
        sub.n = m;
        sub.trunc_t = -1;
        for (const auto* name : {"quotient", "des-quotient"}) {
            Report inner = std::string(name) == "quotient" ? check_quotient(sub)
                                                           : check_des_quotient(sub);
            if (!inner.holds) {
                report.holds = false;
                report.witness = inner.witness;
                report.note = std::string("failed ") + name + " at u-power " + std::to_string(m);
                return report;
            }
        }
    }
    report.holds = true;
    return report;
}

Report check_gf(const VerifyParams& p) {
    Report report{"gf", p,
                  "cross-multiplied: (sum u^n/n! A_n(t)) * denominator == 1 - t; "
                  "witness t is the t-degree, q the u-power",
                  true, {}};
    const int N = report.params.trunc_u = p.trunc_u < 0 ? 6 : p.trunc_u;

    PowerSeries lhs(N);
    BigInt factorial = 1;
    for (int m = 0; m <= N; ++m) {
        if (m > 0) factorial *= m;
        RatPoly coeff = RatPoly::from_t_poly(eulerian(p.a, p.ell, m, EulerianMethod::recurrence));
        coeff /= Rational(factorial);
        lhs.set_coeff(m, std::move(coeff));
    }

    const Rational ell(p.ell);
    const Rational rest(p.a - p.ell);
    // -t * exp(ell (1-t) u) + exp((a-ell) (t-1) u)
    const PowerSeries exp_low =
        series_exp(PowerSeries::monomial(N, 1, RatPoly{ell, -ell}));
    const PowerSeries exp_high =
        series_exp(PowerSeries::monomial(N, 1, RatPoly{-rest, rest}));
    const PowerSeries denominator =
        exp_low.scaled(RatPoly{Rational(0), Rational(-1)}) + exp_high;

    const PowerSeries product = series_mul(lhs, denominator);
    PowerSeries expected(N);
    expected.set_coeff(0, RatPoly{Rational(1), Rational(-1)});

    for (int k = 0; k <= N; ++k) {
        if (product.coeff(k) == expected.coeff(k)) continue;
        const int top = std::max(product.coeff(k).degree(), expected.coeff(k).degree());
        for (int i = 0; i <= top; ++i) {
            if (product.coeff(k).coeff(i) != expected.coeff(k).coeff(i)) {
                report.witness = CoeffWitness{i, k, product.coeff(k).coeff(i).str(),
                                              expected.coeff(k).coeff(i).str()};
                report.holds = false;
                return report;
            }
        }
    }
    report.holds = true;
    return report;
}

Report check_lemma(const VerifyParams& p, const EnumOptions& opt) {
    if (p.n < 1) throw std::invalid_argument("lemma check requires n >= 1");
    Report report{"lemma", p, "exhaustive insertion-lemma check over all low sets of size ell",
                  true, {}};
    for (const std::vector<int>& low : color_subsets(p.a, p.ell)) {
        const ColorOrder order(p.a, low);
        GroupEnumerator stream(p.a, p.n - 1, opt.guard_limit);
        ColoredPermutation sigma;
        while (stream.next(sigma)) {
            if (!check_insertion_lemma(sigma, order)) {
                std::string colors = "{";
                for (size_t i = 0; i < low.size(); ++i)
                    colors += (i ? "," : "") + std::to_string(low[i]);
                colors += "}";
                report.witness = CoeffWitness{
                    0, 0, "window [" + format_window(sigma) + "] with low colors " + colors,
                    "insertion recursion prediction"};
                report.holds = false;
                return report;
            }
        }
    }
    return report;
}

Report check_l_independence(const VerifyParams& p, const EnumOptions& opt) {
    Report report{"l-independence", p, "identical distribution for every low set of size ell",
                  true, {}};
    const auto subsets = color_subsets(p.a, p.ell);
    BiPoly first;
    for (size_t i = 0; i < subsets.size(); ++i) {
        BiPoly poly = euler_mahonian_enumerate(p.a, subsets[i], p.n, opt);
        if (i == 0) {
            first = std::move(poly);
            continue;
        }
        if (auto w = first_mismatch(poly, first)) {
            report.witness = std::move(w);
            report.holds = false;
            return report;
        }
    }
    return report;
}

Report check_maj_rmaj(const VerifyParams& p, const EnumOptions& opt) {
    if (p.a != 1) throw std::invalid_argument("maj-rmaj equidistribution is a statement about S_n; use a = 1");
    Report report{"maj-rmaj", p,
                  "joint (des, maj) distribution against (des, rmaj) with the empty low set",
                  true, {}};
    const ColorOrder order(1, {});
    const BiPoly lhs = distribution_by_enumeration(order, p.n, Statistic::classical, opt);
    const BiPoly rhs = distribution_by_enumeration(order, p.n, Statistic::des_rmaj, opt);
    report.witness = first_mismatch(lhs, rhs);
    report.holds = !report.witness;
    return report;
}

Report check_tilde(const VerifyParams& p, const EnumOptions& opt) {
    Report report{"tilde", p,
                  "right-sentinel statistics against (des, rmaj) under the complement color set",
                  true, {}};
    const std::vector<int> low = p.low ? *p.low : default_low_set(p.ell);
    const ColorOrder order(p.a, low);
    const BiPoly lhs = distribution_by_enumeration(order, p.n, Statistic::tilde, opt);
    const BiPoly rhs =
        distribution_by_enumeration(order.complement(), p.n, Statistic::des_rmaj, opt);
    report.witness = first_mismatch(lhs, rhs);
    report.holds = !report.witness;
    return report;
}

}  // namespace

VerificationReport verify_identity(const std::string& identity, VerifyParams params,
                                   const EnumOptions& opt) {
    if (params.low) {
        ColorOrder(params.a, *params.low);  // validates the explicit set
        params.ell = static_cast<int>(params.low->size());
    }
    check_params(params.a, params.ell, params.n);

    if (identity == "recursion") return check_recursion(params, opt);
    if (identity == "recursion2") return check_recursion2(params);
    if (identity == "quotient") return check_quotient(params);
    if (identity == "des-quotient") return check_des_quotient(params);
    if (identity == "egf") return check_egf(params);
    if (identity == "gf") return check_gf(params);
    if (identity == "lemma") return check_lemma(params, opt);
    if (identity == "l-independence") return check_l_independence(params, opt);
    if (identity == "maj-rmaj") return check_maj_rmaj(params, opt);
    if (identity == "tilde") return check_tilde(params, opt);
    throw std::invalid_argument("unknown identity '" + identity + "'");
}

std::vector<std::string> known_identities() {
    return {"recursion",      "recursion2", "quotient", "des-quotient", "egf",
            "gf",             "lemma",      "l-independence", "maj-rmaj", "tilde"};
}

}  // namespace wreath
