#pragma once

// Generalized Euler-Mahonian and Eulerian polynomials of C_a wr S_n, built
// two independent ways (full enumeration and the insertion recurrence), and
// the machine verification of the identities relating them.
//
// The enumeration engine has two implementations: a serial reference that
// walks the element stream through the public statistics API, and a parallel
// kernel that partitions the rank space across OpenMP threads and merges
// per-thread count tables. They must produce identical polynomials; the test
// suite and the benchmark tool compare them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreath/bipoly.hpp"
#include "wreath/colored_perm.hpp"

namespace wreath {

struct EnumOptions {
    std::uint64_t guard_limit = kDefaultEnumerationGuard;
    int jobs = 0;          // OpenMP thread count; 0 = runtime default
    bool parallel = true;  // false forces the single-threaded kernel path
};

/// Which pair of statistics the enumeration accumulates.
enum class Statistic {
    des_rmaj,    // descents with left sentinel, reverse major index
    tilde,       // descents with right sentinel, plain major index
    classical,   // classical (des, maj) over positions 1..n-1; modulus 1 only
};

/// Joint distribution of the chosen statistic pair over all of C_a wr S_n as
/// a polynomial: sum of t^first q^second. Parallel OpenMP kernel.
BiPoly distribution_by_enumeration(const ColorOrder& order, int n, Statistic stat,
                                   const EnumOptions& opt = {});

/// Serial reference implementation of the same distribution, element by
/// element through descent_stats / tilde_descent_stats / classical_stats.
BiPoly distribution_reference(const ColorOrder& order, int n, Statistic stat,
                              std::uint64_t guard_limit = kDefaultEnumerationGuard);

/// Euler-Mahonian polynomial by enumeration: sum over the group of
/// t^des q^rmaj for the order given by the low color set.
BiPoly euler_mahonian_enumerate(int a, const std::vector<int>& low_colors, int n,
                                const EnumOptions& opt = {});

/// The same polynomial from the insertion recurrence, which depends only on
/// ell = |low color set|. Base case n = 0 is the constant 1.
BiPoly euler_mahonian_recurrence(int a, int ell, int n);

enum class EulerianMethod { enumerate, recurrence, derivative, specialize };

EulerianMethod eulerian_method_from_name(const std::string& name);

/// Eulerian polynomial of C_a wr S_n for the descent statistic, by any of the
/// four routes (all must agree): direct enumeration, the coefficient
/// recurrence, the derivative recurrence, or q = 1 in the Euler-Mahonian
/// recurrence. Returned with every q degree zero.
BiPoly eulerian(int a, int ell, int n, EulerianMethod method = EulerianMethod::recurrence,
                const EnumOptions& opt = {});

/// All subsets of {0..a-1} with the given size, ascending as bitmasks.
std::vector<std::vector<int>> color_subsets(int a, int ell);

struct VerifyParams {
    int a = 1;
    int ell = 0;
    int n = 0;
    int trunc_t = -1;                      // S; defaults to n + 3 when negative
    int trunc_u = -1;                      // N; defaults to 5 when negative
    std::optional<std::vector<int>> low;   // explicit color set; default {0..ell-1}
};

/// Location and both values of the first disagreement found by a check.
/// For polynomial identities (t, q) are the monomial degrees; for the
/// generating-function check q carries the u power; for element-wise checks
/// the strings describe the offending group element.
struct CoeffWitness {
    int t = 0;
    int q = 0;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    VerifyParams params;
    std::string note;  // how the check was mechanized, when not obvious
    bool holds = false;
    std::optional<CoeffWitness> witness;
};

/// Runs one named identity check with exact arithmetic. Supported names:
///   recursion       enumerate == recurrence for the Euler-Mahonian polynomial
///   recursion2      the q-difference functional equation at (a, ell, n)
///   quotient        (t;q)_{n+1} * partial sum of t^s (a[s+1]_q - ell)^n
///                   matches the polynomial through t-degree S
///   des-quotient    the q = 1 analogue against (1-t)^{n+1}
///   egf             quotient + des-quotient for every n <= N (the exponential
///                   identities hold u-coefficient-wise)
///   gf              cross-multiplied closed form of sum u^n/n! A_{a,ell,n}(t)
///   lemma           exhaustive insertion-lemma check over C_a wr S_{n-1}
///   l-independence  every low set of size ell yields the same polynomial
///   maj-rmaj        per-descent-class equidistribution on S_n (a = 1)
///   tilde           the right-sentinel statistics match the complementary
///                   order's (des, rmaj) distribution
/// Throws std::invalid_argument for unknown names or inconsistent parameters
/// and GuardExceeded when an enumeration would be too large.
VerificationReport verify_identity(const std::string& identity, VerifyParams params,
                                   const EnumOptions& opt = {});

std::vector<std::string> known_identities();

}  // namespace wreath
