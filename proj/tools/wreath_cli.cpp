// Command-line front end: descent statistics of single windows, polynomial
// tables, and batch identity verification.
//
// Exit codes: 0 success (or identity holds), 1 identity fails, 2 usage or
// parse error, 3 enumeration guard exceeded.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wreath/colored_perm.hpp"
#include "wreath/json_io.hpp"
#include "wreath/mahonian.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

std::vector<int> parse_color_list(const std::string& text) {
    std::vector<int> colors;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        size_t used = 0;
        const int c = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad color token '" + token + "'");
        colors.push_back(c);
    }
    return colors;
}

std::string render_poly(const wreath::BiPoly& poly, const std::string& format) {
    if (format == "json") return wreath::poly_to_json(poly).dump();
    if (format == "latex") return wreath::to_latex(poly);
    return wreath::to_text(poly);
}

std::string render_set(const std::vector<int>& set) {
    std::string out = "{";
    for (size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
    return out + "}";
}

struct CommonArgs {
    int a = 1;
    int n = 0;
    std::string low_text;
    bool low_given = false;
    int ell = 0;
    bool ell_given = false;
    std::string format = "text";
    std::uint64_t guard = wreath::kDefaultEnumerationGuard;
    int jobs = 0;

    wreath::EnumOptions enum_options() const { return {guard, jobs, true}; }

    // Resolves --L / --ell: explicit low set wins, otherwise {0..ell-1}.
    std::vector<int> low_set() const {
        if (low_given) return parse_color_list(low_text);
        std::vector<int> low;
        for (int c = 0; c < ell; ++c) low.push_back(c);
        return low;
    }

    void validate_exclusive() const {
        if (low_given && ell_given)
            throw std::invalid_argument("give either --L or --ell, not both");
    }
};

void add_common_poly_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--a", args.a, "color modulus a of C_a wr S_n")->required();
    auto* low = cmd->add_option("--L", args.low_text, "comma-separated low color set");
    auto* ell = cmd->add_option("--ell", args.ell, "size of the low color set (uses {0..ell-1})");
    low->each([&args](const std::string&) { args.low_given = true; });
    ell->each([&args](const std::string&) { args.ell_given = true; });
    cmd->add_option("--format", args.format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    cmd->add_option("--guard", args.guard, "enumeration size guard override");
    cmd->add_option("--jobs", args.jobs, "enumeration thread count (0 = auto)");
}

int run_stats(const CommonArgs& args, const std::string& perm_text, bool with_tilde) {
    const wreath::ColoredPermutation sigma = wreath::parse_window(perm_text, args.a);
    const wreath::ColorOrder order(args.a, args.low_set());
    const wreath::DescentStats stats = wreath::descent_stats(sigma, order);

    if (args.format == "json") {
        nlohmann::json out{
            {"des", stats.des}, {"descent_set", stats.descent_set}, {"rmaj", stats.rmaj}};
        if (with_tilde) {
            const wreath::DescentStats tilde = wreath::tilde_descent_stats(sigma, order);
            out["tilde_des"] = tilde.des;
            out["tilde_descent_set"] = tilde.descent_set;
            out["tilde_maj"] = tilde.rmaj;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "Des = " << render_set(stats.descent_set) << "\n"
                  << "des = " << stats.des << "\n"
                  << "rmaj = " << stats.rmaj << "\n";
        if (with_tilde) {
            const wreath::DescentStats tilde = wreath::tilde_descent_stats(sigma, order);
            std::cout << "tilde_Des = " << render_set(tilde.descent_set) << "\n"
                      << "tilde_des = " << tilde.des << "\n"
                      << "tilde_maj = " << tilde.rmaj << "\n";
        }
    }
    return kExitOk;
}

wreath::BiPoly compute_poly(const CommonArgs& args, int n, const std::string& method, bool q1) {
    const std::vector<int> low = args.low_set();
    const int ell = static_cast<int>(low.size());
    if (q1) return wreath::eulerian(args.a, ell, n, wreath::eulerian_method_from_name(method),
                                    args.enum_options());
    if (method == "enumerate")
        return wreath::euler_mahonian_enumerate(args.a, low, n, args.enum_options());
    if (method == "recurrence") return wreath::euler_mahonian_recurrence(args.a, ell, n);
    throw std::invalid_argument("method '" + method +
                                "' applies only with --q1; use enumerate or recurrence");
}

int run_poly(const CommonArgs& args, const std::string& method, bool q1) {
    std::cout << render_poly(compute_poly(args, args.n, method, q1), args.format) << "\n";
    return kExitOk;
}

int run_table(const CommonArgs& args, const std::string& method, bool q1) {
    if (args.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int m = 0; m <= args.n; ++m)
            rows.push_back({{"n", m}, {"poly", wreath::poly_to_json(compute_poly(args, m, method, q1))}});
        std::cout << rows.dump() << "\n";
    } else {
        for (int m = 0; m <= args.n; ++m)
            std::cout << "n=" << m << ": "
                      << render_poly(compute_poly(args, m, method, q1), args.format) << "\n";
    }
    return kExitOk;
}

int run_verify(const CommonArgs& args, const std::string& identity, int trunc_t, int trunc_u) {
    wreath::VerifyParams params;
    params.a = args.a;
    params.ell = args.ell;
    params.n = args.n;
    params.trunc_t = trunc_t;
    params.trunc_u = trunc_u;
    if (args.low_given) params.low = parse_color_list(args.low_text);

    const wreath::VerificationReport report =
        wreath::verify_identity(identity, params, args.enum_options());

    if (args.format == "text") {
        std::cout << "identity " << report.identity << ": "
                  << (report.holds ? "holds" : "FAILS") << "\n";
        if (report.witness)
            std::cout << "witness = " << wreath::report_to_json(report)["witness"].dump() << "\n";
    } else {
        std::cout << wreath::report_to_json(report).dump() << "\n";
    }
    return report.holds ? kExitOk : kExitIdentityFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"descent statistics and Euler-Mahonian polynomials of wreath products C_a wr S_n"};
    app.require_subcommand(1);

    CommonArgs stats_args, poly_args, table_args, verify_args;
    std::string perm_text, poly_method = "recurrence", table_method = "recurrence", identity;
    bool with_tilde = false, poly_q1 = false, table_q1 = false;
    int trunc_t = -1, trunc_u = -1;

    auto* stats = app.add_subcommand("stats", "descent statistics of one window");
    stats->add_option("--a", stats_args.a, "color modulus")->required();
    stats->add_option("--L", stats_args.low_text, "comma-separated low color set")
        ->each([&stats_args](const std::string&) { stats_args.low_given = true; });
    stats->add_option("--perm", perm_text, "window, e.g. \"3^2 1^0 2^1\"")->required();
    stats->add_flag("--tilde", with_tilde, "also print the right-sentinel statistics");
    stats->add_option("--format", stats_args.format)->check(CLI::IsMember({"text", "json"}));

    auto* poly = app.add_subcommand("poly", "one Euler-Mahonian or Eulerian polynomial");
    add_common_poly_flags(poly, poly_args);
    poly->add_option("--n", poly_args.n, "window length")->required();
    poly->add_option("--method", poly_method, "enumerate | recurrence | derivative | specialize");
    poly->add_flag("--q1", poly_q1, "emit the Eulerian polynomial (q = 1)");

    auto* table = app.add_subcommand("table", "polynomials for every n up to a bound");
    add_common_poly_flags(table, table_args);
    table->add_option("--n", table_args.n, "largest window length")->required();
    table->add_option("--method", table_method, "enumerate | recurrence | derivative | specialize");
    table->add_flag("--q1", table_q1, "emit Eulerian polynomials (q = 1)");

    auto* verify = app.add_subcommand("verify", "machine-check one identity");
    add_common_poly_flags(verify, verify_args);
    verify->add_option("--identity", identity, "which identity to check")->required();
    verify->add_option("--n", verify_args.n, "window length");
    verify->add_option("--S", trunc_t, "t-degree bound for the quotient checks (default n+3)");
    verify->add_option("--N", trunc_u, "u-order for the generating-function checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (stats->parsed()) return run_stats(stats_args, perm_text, with_tilde);
        if (poly->parsed()) {
            poly_args.validate_exclusive();
            return run_poly(poly_args, poly_method, poly_q1);
        }
        if (table->parsed()) {
            table_args.validate_exclusive();
            return run_table(table_args, table_method, table_q1);
        }
        if (verify->parsed()) {
            verify_args.validate_exclusive();
            return run_verify(verify_args, identity, trunc_t, trunc_u);
        }
    } catch (const wreath::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const wreath::GuardExceeded& e) {
        std::cerr << "enumeration guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
