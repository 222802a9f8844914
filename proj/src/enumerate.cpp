#include <algorithm>
#include <stdexcept>

#include "wreath/mahonian.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wreath {

namespace {

// Integer ranks reproducing the comparator: x <_L y iff rank(x) < rank(y).
// Indexed (value-1)*a + color; the sentinel rank sits between the classes.
struct RankTable {
    std::vector<int> rank;
    int sentinel = 0;
};

RankTable build_rank_table(const ColorOrder& order, int n) {
    const int a = order.modulus();
    std::vector<ColoredLetter> letters;
    letters.reserve(static_cast<size_t>(n) * static_cast<size_t>(a) + 1);
    letters.push_back(ColoredLetter::sentinel());
    for (int v = 1; v <= n; ++v)
        for (int c = 0; c < a; ++c) letters.push_back({v, c});
    std::sort(letters.begin(), letters.end(),
              [&](const ColoredLetter& x, const ColoredLetter& y) { return order.less(x, y); });

    RankTable table;
    table.rank.assign(static_cast<size_t>(n) * static_cast<size_t>(a), 0);
    for (size_t i = 0; i < letters.size(); ++i) {
        const ColoredLetter& l = letters[i];
        if (l.is_sentinel())
            table.sentinel = static_cast<int>(i);
        else
            table.rank[static_cast<size_t>(l.value - 1) * static_cast<size_t>(a) +
                       static_cast<size_t>(l.color)] = static_cast<int>(i);
    }
    return table;
}

std::vector<int> unrank_values(int n, std::uint64_t perm_rank) {
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i + 1;
    std::vector<std::uint64_t> factorial(static_cast<size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i)
        factorial[static_cast<size_t>(i)] =
            factorial[static_cast<size_t>(i - 1)] * static_cast<std::uint64_t>(i);

    std::vector<int> values(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = factorial[static_cast<size_t>(n - 1 - i)];
        const auto idx = static_cast<size_t>(perm_rank / f);
        perm_rank %= f;
        values[static_cast<size_t>(i)] = pool[idx];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return values;
}

// Walks value permutations [perm_begin, perm_end) in lexicographic order and
// every color tuple for each, adding one count per element at
// counts[des * stride + value_stat].
void accumulate_range(int a, int n, const RankTable& ranks, Statistic stat,
                      std::uint64_t perm_begin, std::uint64_t perm_end, int stride,
                      std::vector<std::uint64_t>& counts) {
    std::vector<int> values = unrank_values(n, perm_begin);
    std::vector<int> colors(static_cast<size_t>(n), 0);

    for (std::uint64_t pr = perm_begin; pr < perm_end; ++pr) {
        std::fill(colors.begin(), colors.end(), 0);
        for (;;) {
            int des = 0;
            int val = 0;
            switch (stat) {
                case Statistic::des_rmaj: {
                    int prev = ranks.sentinel;
                    for (int i = 0; i < n; ++i) {
                        const int cur =
                            ranks.rank[static_cast<size_t>(values[static_cast<size_t>(i)] - 1) *
                                           static_cast<size_t>(a) +
                                       static_cast<size_t>(colors[static_cast<size_t>(i)])];
                        if (prev > cur) {
                            ++des;
                            val += n - i;
                        }
                        prev = cur;
                    }
                    break;
                }
                case Statistic::tilde: {
                    for (int i = 1; i <= n; ++i) {
                        const int left =
                            ranks.rank[static_cast<size_t>(values[static_cast<size_t>(i - 1)] - 1) *
                                           static_cast<size_t>(a) +
                                       static_cast<size_t>(colors[static_cast<size_t>(i - 1)])];
                        const int right =
                            i < n ? ranks.rank[static_cast<size_t>(values[static_cast<size_t>(i)] - 1) *
                                                   static_cast<size_t>(a) +
                                               static_cast<size_t>(colors[static_cast<size_t>(i)])]
                                  : ranks.sentinel;
                        if (left > right) {
                            ++des;
                            val += i;
                        }
                    }
                    break;
                }
                case Statistic::classical: {
                    for (int i = 1; i < n; ++i) {
                        if (values[static_cast<size_t>(i - 1)] > values[static_cast<size_t>(i)]) {
                            ++des;
                            val += i;
                        }
                    }
                    break;
                }
            }
            ++counts[static_cast<size_t>(des) * static_cast<size_t>(stride) +
                     static_cast<size_t>(val)];

            // color odometer, rightmost digit fastest
            int i = n - 1;
            while (i >= 0 && colors[static_cast<size_t>(i)] == a - 1) {
                colors[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++colors[static_cast<size_t>(i)];
        }
        std::next_permutation(values.begin(), values.end());
    }
}

BiPoly counts_to_poly(const std::vector<std::uint64_t>& counts, int n, int stride) {
    BiPoly poly;
    for (int des = 0; des <= n; ++des)
        for (int val = 0; val < stride; ++val) {
            const std::uint64_t c =
                counts[static_cast<size_t>(des) * static_cast<size_t>(stride) +
                       static_cast<size_t>(val)];
            if (c != 0) poly += BiPoly::monomial(des, val, BigInt(c));
        }
    return poly;
}

void check_stat_modulus(const ColorOrder& order, Statistic stat) {
    if (stat == Statistic::classical && order.modulus() != 1)
        throw std::invalid_argument("classical statistics require color modulus 1");
}

}  // namespace

BiPoly distribution_by_enumeration(const ColorOrder& order, int n, Statistic stat,
                                   const EnumOptions& opt) {
    check_stat_modulus(order, stat);
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    checked_group_order(order.modulus(), n, opt.guard_limit);
    if (n == 0) return BiPoly(1L);

    const int a = order.modulus();
    const RankTable ranks = build_rank_table(order, n);
    const int stride = n * (n + 1) / 2 + 1;  // value statistic is at most n(n+1)/2
    std::vector<std::uint64_t> counts(static_cast<size_t>(n + 1) * static_cast<size_t>(stride), 0);

    std::uint64_t nperms = 1;
    for (int i = 2; i <= n; ++i) nperms *= static_cast<std::uint64_t>(i);

    int threads = 1;
#ifdef _OPENMP
    threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#endif
    if (!opt.parallel) threads = 1;

    // Chunks of consecutive permutation ranks; each chunk pays one unranking
    // and then advances incrementally.
    const std::uint64_t nchunks =
        std::min<std::uint64_t>(nperms, std::max<std::uint64_t>(1, static_cast<std::uint64_t>(threads) * 8));
    const std::uint64_t base = nperms / nchunks;
    const std::uint64_t rem = nperms % nchunks;

#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
        std::vector<std::uint64_t> local(counts.size(), 0);
#ifdef _OPENMP
#pragma omp for schedule(dynamic) nowait
#endif
        for (long long chunk = 0; chunk < static_cast<long long>(nchunks); ++chunk) {
            const auto c = static_cast<std::uint64_t>(chunk);
            const std::uint64_t lo = c * base + std::min(c, rem);
            const std::uint64_t hi = lo + base + (c < rem ? 1 : 0);
            accumulate_range(a, n, ranks, stat, lo, hi, stride, local);
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            for (size_t i = 0; i < counts.size(); ++i) counts[i] += local[i];
        }
    }

    return counts_to_poly(counts, n, stride);
}

BiPoly distribution_reference(const ColorOrder& order, int n, Statistic stat,
                              std::uint64_t guard_limit) {
    check_stat_modulus(order, stat);
    if (n < 0) throw std::invalid_argument("n must be >= 0");

    BiPoly poly;
    GroupEnumerator stream(order.modulus(), n, guard_limit);
    ColoredPermutation sigma;
    while (stream.next(sigma)) {
        int des = 0;
        int val = 0;
        switch (stat) {
            case Statistic::des_rmaj: {
                const DescentStats stats = descent_stats(sigma, order);
                des = stats.des;
                val = stats.rmaj;
                break;
            }
            case Statistic::tilde: {
                const DescentStats stats = tilde_descent_stats(sigma, order);
                des = stats.des;
                val = stats.rmaj;
                break;
            }
            case Statistic::classical: {
                const auto [d, m] = classical_stats(sigma);
                des = d;
                val = m;
                break;
            }
        }
        poly += BiPoly::monomial(des, val);
    }
    return poly;
}

BiPoly euler_mahonian_enumerate(int a, const std::vector<int>& low_colors, int n,
                                const EnumOptions& opt) {
    return distribution_by_enumeration(ColorOrder(a, low_colors), n, Statistic::des_rmaj, opt);
}

}  // namespace wreath
