// Benchmark of the enumeration engine: the serial reference implementation
// (element stream through the public statistics API) against the chunked
// rank-space kernel, single-threaded and with OpenMP. Verifies that all
// three produce the same polynomial before reporting throughput.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wreath/mahonian.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Config {
    int a;
    int n;
};

int run_one(int a, int n, const std::vector<int>& low, int jobs, std::uint64_t guard) {
    using namespace wreath;
    const ColorOrder order(a, low);
    const double elements = static_cast<double>(checked_group_order(a, n, guard));

    auto t0 = std::chrono::steady_clock::now();
    const BiPoly reference = distribution_reference(order, n, Statistic::des_rmaj, guard);
    const double ref_time = seconds_since(t0);

    EnumOptions serial_opt{guard, 1, false};
    t0 = std::chrono::steady_clock::now();
    const BiPoly kernel_serial = distribution_by_enumeration(order, n, Statistic::des_rmaj, serial_opt);
    const double serial_time = seconds_since(t0);

    EnumOptions parallel_opt{guard, jobs, true};
    t0 = std::chrono::steady_clock::now();
    const BiPoly kernel_parallel =
        distribution_by_enumeration(order, n, Statistic::des_rmaj, parallel_opt);
    const double parallel_time = seconds_since(t0);

    int threads = 1;
#ifdef _OPENMP
    threads = jobs > 0 ? jobs : omp_get_max_threads();
#endif

    const bool ok = reference == kernel_serial && kernel_serial == kernel_parallel;
    std::printf(
        "a=%d n=%d elements=%.0f | reference %.3fs (%.2fM/s) | kernel x1 %.3fs (%.2fM/s) | "
        "kernel x%d %.3fs (%.2fM/s) | speedup %.2fx | identical=%s\n",
        a, n, elements, ref_time, elements / ref_time / 1e6, serial_time,
        elements / serial_time / 1e6, threads, parallel_time, elements / parallel_time / 1e6,
        serial_time / parallel_time, ok ? "yes" : "NO");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enumeration kernel benchmark: serial reference vs OpenMP"};
    int a = 0, n = 0, jobs = 0;
    std::uint64_t guard = 100'000'000;
    app.add_option("--a", a, "color modulus (with --n; otherwise a built-in sweep runs)");
    app.add_option("--n", n, "window length");
    app.add_option("--jobs", jobs, "thread count (0 = auto)");
    app.add_option("--guard", guard, "enumeration size guard");
    CLI11_PARSE(app, argc, argv);

    try {
        if (a > 0 && n >= 0) return run_one(a, n, {0}, jobs, guard);

        int rc = 0;
        for (const Config& c : {Config{1, 10}, Config{2, 7}, Config{2, 8}, Config{3, 5}, Config{4, 5}})
            rc |= run_one(c.a, c.n, c.a > 1 ? std::vector<int>{1} : std::vector<int>{}, jobs, guard);
        return rc;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
