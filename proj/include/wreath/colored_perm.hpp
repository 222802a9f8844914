#pragma once

// Colored permutations (elements of the wreath product C_a wr S_n in window
// notation), the linear order induced by a subset of colors, and the descent
// statistics built on top of it.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreath {

using BigInt = boost::multiprecision::cpp_int;

/// One token of window notation: an absolute value with a color exponent.
/// value == 0 is the zero sentinel used by the descent definitions; it never
/// appears inside a window and carries color 0.
struct ColoredLetter {
    int value = 0;
    int color = 0;

    static constexpr ColoredLetter sentinel() { return {0, 0}; }
    constexpr bool is_sentinel() const { return value == 0; }

    friend constexpr bool operator==(const ColoredLetter&, const ColoredLetter&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int token_position)
        : std::runtime_error(std::move(msg)), position_(token_position) {}

    /// 1-based index of the offending token.
    int position() const { return position_; }

private:
    int position_;
};

/// An element of C_a wr S_n: a window of n colored letters whose absolute
/// values form a permutation of 1..n and whose colors lie in [0, a).
class ColoredPermutation {
public:
    ColoredPermutation() : a_(1) {}
    explicit ColoredPermutation(int a) : a_(check_modulus(a)) {}
    ColoredPermutation(int a, std::vector<ColoredLetter> window);

    int modulus() const { return a_; }
    int size() const { return static_cast<int>(window_.size()); }
    const std::vector<ColoredLetter>& window() const { return window_; }

    /// 0-based access; the documentation convention sigma(i) uses i = idx+1.
    const ColoredLetter& operator[](int idx) const { return window_[static_cast<size_t>(idx)]; }

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

private:
    static int check_modulus(int a);

    int a_;
    std::vector<ColoredLetter> window_;
};

/// Parses whitespace-separated window tokens `v^c`. For a == 2 the signed
/// shorthand is also accepted: `-j` means j^1 and plain `j` means j^0.
/// The empty string denotes the n = 0 window. Throws ParseError with the
/// 1-based token position on malformed tokens, colors outside [0, a) and
/// value multisets that are not a permutation of 1..n.
ColoredPermutation parse_window(const std::string& text, int a);

/// Canonical `v^c` rendering; round-trips through parse_window.
std::string format_window(const ColoredPermutation& sigma);

enum class TieBreak { ascending_color, descending_color };

/// The strict total order on colored letters and the zero sentinel determined
/// by a set of "low" colors. Letters with a low color sort below the sentinel,
/// larger values first; the remaining letters sort above it, smaller values
/// first, and every low-color letter is below every high-color one. Between
/// equal values the order is free; we fix a color tie-break (ascending by
/// default). No window ever repeats a value, so the tie-break cannot affect
/// any statistic.
class ColorOrder {
public:
    ColorOrder(int a, const std::vector<int>& low_colors,
               TieBreak tie = TieBreak::ascending_color);

    int modulus() const { return a_; }
    bool is_low(int color) const { return (low_mask_ >> color) & 1u; }
    int low_size() const;
    std::vector<int> low_colors() const;
    std::uint64_t low_mask() const { return low_mask_; }

    /// Same modulus, complemented color set.
    ColorOrder complement() const;

    std::strong_ordering compare(const ColoredLetter& x, const ColoredLetter& y) const;
    bool less(const ColoredLetter& x, const ColoredLetter& y) const {
        return compare(x, y) == std::strong_ordering::less;
    }

private:
    int a_;
    std::uint64_t low_mask_;
    TieBreak tie_;
};

/// Descent positions of a window together with the two statistics read off
/// them. For descent_stats the positions are 0-based with the sentinel on the
/// left and rmaj sums n - i; for tilde_descent_stats the positions are 1-based
/// with the sentinel on the right and the rmaj field carries the plain
/// position sum.
struct DescentStats {
    std::vector<int> descent_set;
    int des = 0;
    int rmaj = 0;
};

/// Descents at positions 0 <= i <= n-1 comparing sigma(i) against sigma(i+1)
/// with sigma(0) the sentinel; rmaj = sum of n - i over descent positions.
DescentStats descent_stats(const ColoredPermutation& sigma, const ColorOrder& order);

/// Descents at positions 1 <= i <= n with sigma(n+1) the sentinel; the rmaj
/// field carries the sum of the descent positions themselves.
DescentStats tilde_descent_stats(const ColoredPermutation& sigma, const ColorOrder& order);

/// Classical (des, maj) over positions 1..n-1, no sentinel. Requires a == 1.
std::pair<int, int> classical_stats(const ColoredPermutation& pi);

/// Window read right to left; an involution.
ColoredPermutation reversed(const ColoredPermutation& sigma);

/// Inserts the maximal letter n = sigma.size()+1 with the given color after
/// window position r (0 = prepend). Bijective onto C_a wr S_n.
ColoredPermutation insert_max_letter(const ColoredPermutation& sigma, int r, int color);

struct MaxRemoval {
    ColoredPermutation rest;
    int position = 0;
    int color = 0;
};

/// Inverse of insert_max_letter: locates the letter of value n, removes it and
/// reports where it sat and which color it carried.
MaxRemoval remove_max_letter(const ColoredPermutation& tau);

/// Exhaustively checks, for one window sigma of length n-1, that inserting the
/// maximal letter at each position of the canonical index sequence (descents
/// ascending, then non-descents of {0..n-1} right to left) changes (des, rmaj)
/// exactly as the insertion recursion predicts: des stays at s for k <= s, or
/// for k = s+1 with a high color, and grows to s+1 otherwise; rmaj grows by k
/// for low colors and k-1 for high ones.
bool check_insertion_lemma(const ColoredPermutation& sigma, const ColorOrder& order);

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

/// |C_a wr S_n| = a^n * n!, exactly.
BigInt group_order(int a, int n);

/// group_order as uint64, throwing GuardExceeded when it exceeds the limit.
std::uint64_t checked_group_order(int a, int n, std::uint64_t limit);

/// The element of C_a wr S_n at the given rank of the enumeration order
/// (value permutations lexicographic, color tuples lexicographic within one
/// permutation, colors varying fastest).
ColoredPermutation element_at(int a, int n, std::uint64_t rank);

/// Streams every element of C_a wr S_n exactly once, in the deterministic
/// order documented at element_at. Construction enforces the size guard.
class GroupEnumerator {
public:
    GroupEnumerator(int a, int n, std::uint64_t guard_limit = kDefaultEnumerationGuard);

    std::uint64_t size() const { return total_; }

    /// Fills `out` with the next element; false once the stream is exhausted.
    bool next(ColoredPermutation& out);

    void reset();

private:
    int a_;
    int n_;
    std::uint64_t total_;
    std::uint64_t emitted_;
    std::vector<int> values_;
    std::vector<int> colors_;
};

}  // namespace wreath
