#include "wreath/colored_perm.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace wreath {

int ColoredPermutation::check_modulus(int a) {
    if (a < 1) throw std::invalid_argument("color modulus must be >= 1");
    if (a > 62) throw std::invalid_argument("color modulus too large");
    return a;
}

ColoredPermutation::ColoredPermutation(int a, std::vector<ColoredLetter> window)
    : a_(check_modulus(a)), window_(std::move(window)) {
    const int n = static_cast<int>(window_.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (const ColoredLetter& l : window_) {
        if (l.value < 1 || l.value > n)
            throw std::invalid_argument("window values must be a permutation of 1..n");
        if (seen[static_cast<size_t>(l.value)])
            throw std::invalid_argument("window repeats the value " + std::to_string(l.value));
        seen[static_cast<size_t>(l.value)] = 1;
        if (l.color < 0 || l.color >= a_)
            throw std::invalid_argument("letter color out of range");
    }
}

namespace {

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

ColoredPermutation parse_window(const std::string& text, int a) {
    if (a < 1) throw std::invalid_argument("color modulus must be >= 1");

    std::vector<ColoredLetter> letters;
    std::istringstream in(text);
    std::string token;
    int pos = 0;
    while (in >> token) {
        ++pos;
        int value = 0;
        int color = 0;
        const auto caret = token.find('^');
        if (caret != std::string::npos) {
            if (!parse_int(std::string_view(token).substr(0, caret), value) ||
                !parse_int(std::string_view(token).substr(caret + 1), color))
                throw ParseError("malformed token '" + token + "' at position " +
                                     std::to_string(pos),
                                 pos);
        } else if (a == 2) {
            // signed shorthand: -j = j^1, j = j^0
            int signed_value = 0;
            if (!parse_int(token, signed_value) || signed_value == 0)
                throw ParseError("malformed token '" + token + "' at position " +
                                     std::to_string(pos),
                                 pos);
            value = signed_value < 0 ? -signed_value : signed_value;
            color = signed_value < 0 ? 1 : 0;
        } else {
            throw ParseError("malformed token '" + token + "' at position " +
                                 std::to_string(pos) + " (signed form requires a = 2)",
                             pos);
        }
        if (value < 1)
            throw ParseError("value must be >= 1 in token '" + token + "' at position " +
                                 std::to_string(pos),
                             pos);
        if (color < 0 || color >= a)
            throw ParseError("color " + std::to_string(color) + " out of range [0, " +
                                 std::to_string(a) + ") at position " + std::to_string(pos),
                             pos);
        letters.push_back({value, color});
    }

    const int n = static_cast<int>(letters.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        const int v = letters[static_cast<size_t>(i)].value;
        if (v > n)
            throw ParseError("value " + std::to_string(v) + " at position " +
                                 std::to_string(i + 1) + " exceeds window length " +
                                 std::to_string(n),
                             i + 1);
        if (seen[static_cast<size_t>(v)])
            throw ParseError("value " + std::to_string(v) + " repeated at position " +
                                 std::to_string(i + 1),
                             i + 1);
        seen[static_cast<size_t>(v)] = 1;
    }
    return ColoredPermutation(a, std::move(letters));
}

std::string format_window(const ColoredPermutation& sigma) {
    std::string out;
    for (int i = 0; i < sigma.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(sigma[i].value);
        out += '^';
        out += std::to_string(sigma[i].color);
    }
    return out;
}

ColorOrder::ColorOrder(int a, const std::vector<int>& low_colors, TieBreak tie)
    : a_(a), low_mask_(0), tie_(tie) {
    if (a < 1 || a > 62) throw std::invalid_argument("color modulus out of range");
    for (int c : low_colors) {
        if (c < 0 || c >= a)
            throw std::invalid_argument("low color " + std::to_string(c) +
                                        " out of range [0, " + std::to_string(a) + ")");
        low_mask_ |= std::uint64_t{1} << c;
    }
}

int ColorOrder::low_size() const {
    int count = 0;
    for (int c = 0; c < a_; ++c)
        if (is_low(c)) ++count;
    return count;
}

std::vector<int> ColorOrder::low_colors() const {
    std::vector<int> out;
    for (int c = 0; c < a_; ++c)
        if (is_low(c)) out.push_back(c);
    return out;
}

ColorOrder ColorOrder::complement() const {
    std::vector<int> high;
    for (int c = 0; c < a_; ++c)
        if (!is_low(c)) high.push_back(c);
    return ColorOrder(a_, high, tie_);
}

std::strong_ordering ColorOrder::compare(const ColoredLetter& x, const ColoredLetter& y) const {
    // Rank each letter by (class, value direction within class, color).
    // Class 0: low colors, below the sentinel, larger values first.
    // Class 1: the sentinel itself. Class 2: high colors, smaller values first.
    auto key = [this](const ColoredLetter& l) {
        if (l.is_sentinel()) return std::tuple<int, int, int>(1, 0, 0);
        if (l.color < 0 || l.color >= a_)
            throw std::invalid_argument("letter color out of range for this order");
        const int tie = tie_ == TieBreak::ascending_color ? l.color : -l.color;
        if (is_low(l.color)) return std::tuple<int, int, int>(0, -l.value, tie);
        return std::tuple<int, int, int>(2, l.value, tie);
    };
    const auto kx = key(x);
    const auto ky = key(y);
    if (kx < ky) return std::strong_ordering::less;
    if (ky < kx) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

void require_same_modulus(const ColoredPermutation& sigma, const ColorOrder& order) {
    if (sigma.modulus() != order.modulus())
        throw std::invalid_argument("permutation and order use different color moduli");
}

}  // namespace

DescentStats descent_stats(const ColoredPermutation& sigma, const ColorOrder& order) {
    require_same_modulus(sigma, order);
    const int n = sigma.size();
    DescentStats stats;
    ColoredLetter prev = ColoredLetter::sentinel();
    for (int i = 0; i < n; ++i) {
        // descent at position i compares sigma(i) with sigma(i+1)
        if (order.less(sigma[i], prev)) {
            stats.descent_set.push_back(i);
            stats.rmaj += n - i;
        }
        prev = sigma[i];
    }
    stats.des = static_cast<int>(stats.descent_set.size());
    return stats;
}

DescentStats tilde_descent_stats(const ColoredPermutation& sigma, const ColorOrder& order) {
    require_same_modulus(sigma, order);
    const int n = sigma.size();
    DescentStats stats;
    for (int i = 1; i <= n; ++i) {
        const ColoredLetter right = i < n ? sigma[i] : ColoredLetter::sentinel();
        if (order.less(right, sigma[i - 1])) {
            stats.descent_set.push_back(i);
            stats.rmaj += i;
        }
    }
    stats.des = static_cast<int>(stats.descent_set.size());
    return stats;
}

std::pair<int, int> classical_stats(const ColoredPermutation& pi) {
    if (pi.modulus() != 1)
        throw std::invalid_argument("classical_stats requires color modulus 1");
    int des = 0;
    int maj = 0;
    for (int i = 1; i < pi.size(); ++i) {
        if (pi[i - 1].value > pi[i].value) {
            ++des;
            maj += i;
        }
    }
    return {des, maj};
}

ColoredPermutation reversed(const ColoredPermutation& sigma) {
    std::vector<ColoredLetter> window(sigma.window().rbegin(), sigma.window().rend());
    return ColoredPermutation(sigma.modulus(), std::move(window));
}

ColoredPermutation insert_max_letter(const ColoredPermutation& sigma, int r, int color) {
    const int n = sigma.size() + 1;
    if (r < 0 || r > n - 1) throw std::out_of_range("insertion position out of range");
    if (color < 0 || color >= sigma.modulus()) throw std::out_of_range("color out of range");
    std::vector<ColoredLetter> window = sigma.window();
    window.insert(window.begin() + r, ColoredLetter{n, color});
    return ColoredPermutation(sigma.modulus(), std::move(window));
}

MaxRemoval remove_max_letter(const ColoredPermutation& tau) {
    const int n = tau.size();
    if (n < 1) throw std::invalid_argument("cannot remove from the empty window");
    for (int i = 0; i < n; ++i) {
        if (tau[i].value == n) {
            std::vector<ColoredLetter> window = tau.window();
            const int color = tau[i].color;
            window.erase(window.begin() + i);
            return {ColoredPermutation(tau.modulus(), std::move(window)), i, color};
        }
    }
    throw std::logic_error("window lacks its maximal value");  // unreachable on valid input
}

bool check_insertion_lemma(const ColoredPermutation& sigma, const ColorOrder& order) {
    require_same_modulus(sigma, order);
    const int n = sigma.size() + 1;
    const DescentStats base = descent_stats(sigma, order);
    const int s = base.des;

    // Index sequence: descents ascending, then the non-descents of {0..n-1}
    // from right to left. Position n-1 is never a descent of a window of
    // length n-1, so it always heads the second block.
    std::vector<int> index(static_cast<size_t>(n));
    for (int k = 0; k < s; ++k) index[static_cast<size_t>(k)] = base.descent_set[static_cast<size_t>(k)];
    {
        std::vector<char> is_descent(static_cast<size_t>(n), 0);
        for (int d : base.descent_set) is_descent[static_cast<size_t>(d)] = 1;
        int k = s;
        for (int i = n - 1; i >= 0; --i)
            if (!is_descent[static_cast<size_t>(i)]) index[static_cast<size_t>(k++)] = i;
    }

    for (int k = 1; k <= n; ++k) {
        for (int color = 0; color < order.modulus(); ++color) {
            const ColoredPermutation tau =
                insert_max_letter(sigma, index[static_cast<size_t>(k - 1)], color);
            const DescentStats got = descent_stats(tau, order);
            const bool low = order.is_low(color);
            const int expected_des = (k < s + 1 || (k == s + 1 && !low)) ? s : s + 1;
            const int expected_rmaj = base.rmaj + (low ? k : k - 1);
            if (got.des != expected_des || got.rmaj != expected_rmaj) return false;
        }
    }
    return true;
}

BigInt group_order(int a, int n) {
    if (a < 1 || n < 0) throw std::invalid_argument("group_order requires a >= 1, n >= 0");
    BigInt total = 1;
    for (int i = 1; i <= n; ++i) total *= i;
    for (int i = 0; i < n; ++i) total *= a;
    return total;
}

std::uint64_t checked_group_order(int a, int n, std::uint64_t limit) {
    const BigInt total = group_order(a, n);
    if (total > BigInt(limit))
        throw GuardExceeded("C_" + std::to_string(a) + " wr S_" + std::to_string(n) + " has " +
                            total.str() + " elements, above the guard of " + std::to_string(limit));
    return total.convert_to<std::uint64_t>();
}

ColoredPermutation element_at(int a, int n, std::uint64_t rank) {
    std::uint64_t colors_total = 1;
    for (int i = 0; i < n; ++i) colors_total *= static_cast<std::uint64_t>(a);
    std::uint64_t perm_rank = rank / colors_total;
    std::uint64_t color_index = rank % colors_total;

    // Unrank the value permutation in lexicographic order.
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i + 1;
    std::vector<std::uint64_t> factorial(static_cast<size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i)
        factorial[static_cast<size_t>(i)] = factorial[static_cast<size_t>(i - 1)] * static_cast<std::uint64_t>(i);

    std::vector<ColoredLetter> window(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = factorial[static_cast<size_t>(n - 1 - i)];
        const auto idx = static_cast<size_t>(perm_rank / f);
        perm_rank %= f;
        window[static_cast<size_t>(i)].value = pool[idx];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }

    // Colors are the base-a digits of color_index, leftmost letter most
    // significant, so advancing the rank flips the rightmost color first.
    for (int i = n - 1; i >= 0; --i) {
        window[static_cast<size_t>(i)].color = static_cast<int>(color_index % static_cast<std::uint64_t>(a));
        color_index /= static_cast<std::uint64_t>(a);
    }
    return ColoredPermutation(a, std::move(window));
}

GroupEnumerator::GroupEnumerator(int a, int n, std::uint64_t guard_limit)
    : a_(a), n_(n), total_(checked_group_order(a, n, guard_limit)), emitted_(0) {
    reset();
}

void GroupEnumerator::reset() {
    emitted_ = 0;
    values_.resize(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) values_[static_cast<size_t>(i)] = i + 1;
    colors_.assign(static_cast<size_t>(n_), 0);
}

bool GroupEnumerator::next(ColoredPermutation& out) {
    if (emitted_ >= total_) return false;

    std::vector<ColoredLetter> window(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
        window[static_cast<size_t>(i)] = {values_[static_cast<size_t>(i)], colors_[static_cast<size_t>(i)]};
    out = ColoredPermutation(a_, std::move(window));
    ++emitted_;

    // Advance: color odometer from the right, then the next value permutation.
    int i = n_ - 1;
    while (i >= 0 && colors_[static_cast<size_t>(i)] == a_ - 1) {
        colors_[static_cast<size_t>(i)] = 0;
        --i;
    }
    if (i >= 0) {
        ++colors_[static_cast<size_t>(i)];
    } else {
        std::next_permutation(values_.begin(), values_.end());
    }
    return true;
}

}  // namespace wreath
