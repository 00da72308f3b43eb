#include "deptree/cli.hpp"

#include "deptree/additive.hpp"
#include "deptree/counting.hpp"
#include "deptree/sampler.hpp"
#include "deptree/series.hpp"
#include "deptree/tree.hpp"
#include "deptree/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

namespace deptree::cli {

namespace {

/// Raised for flag combinations CLI11 cannot express; maps to exit code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CountArgs {
    std::size_t n = 0;
    std::size_t upto = 0;
    std::string format = "plain";
};

struct ApproxArgs {
    std::size_t n = 0;
    bool compare = false;
    std::size_t table_limit = 2048;
};

struct EnumerateArgs {
    std::size_t n = 0;
    std::size_t oracle_limit = kDefaultOracleLimit;
};

struct SampleArgs {
    std::size_t n = 0;
    std::size_t count = 1;
    std::optional<std::uint64_t> seed;
    bool forest = false;
};

struct SeriesArgs {
    std::size_t terms = 10;
};

struct ParamArgs {
    std::string toll;
    std::size_t n = 0;
    bool upto = false;
};

void cmd_count(const CountArgs& a, std::ostream& out) {
    if ((a.n == 0) == (a.upto == 0)) throw usage_error("count needs exactly one of <n> or --upto N");
    std::vector<std::pair<std::size_t, BigNat>> rows;
    if (a.upto > 0) {
        const CountTable table(a.upto);
        for (std::size_t n = 1; n <= a.upto; ++n) rows.emplace_back(n, table.trees(n));
    } else {
        rows.emplace_back(a.n, count_closed_form(a.n));
    }

    if (a.format == "csv") {
        out << "n,t_n\n";
        for (const auto& [n, t] : rows) out << n << ',' << to_decimal(t) << '\n';
    } else if (a.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& [n, t] : rows) arr.push_back({{"n", n}, {"value", to_decimal(t)}});
        out << arr.dump() << '\n';
    } else if (a.upto > 0) {
        for (const auto& [n, t] : rows) out << n << ' ' << to_decimal(t) << '\n';
    } else {
        out << to_decimal(rows.front().second) << '\n';
    }
}

void cmd_approx(const ApproxArgs& a, std::ostream& out) {
    out << std::setprecision(15);
    out << "n " << a.n << '\n';
    out << "ln_approx " << stirling_log_approx(a.n) << '\n';
    if (!a.compare) return;
    if (a.n > a.table_limit)
        throw std::out_of_range("--compare needs n <= " + std::to_string(a.table_limit) + " (the table bound)");
    const CountTable table(a.n);
    out << "ln_exact " << log_big(table.trees(a.n)) << '\n';
    out << "relative_error " << relative_error(a.n, table) << '\n';
}

void cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    for (const auto& t : enumerate_trees(a.n, a.oracle_limit)) out << serialize(t) << '\n';
}

void cmd_sample(const SampleArgs& a, std::ostream& out, std::ostream& err) {
    if (!a.forest && a.n == 0) throw usage_error("sample needs n >= 1 (use --forest for size 0)");
    std::uint64_t seed = 0;
    if (a.seed) {
        seed = *a.seed;
    } else {
        std::random_device entropy;
        seed = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
        err << "seed: " << seed << '\n';
    }
    const CountTable table(std::max<std::size_t>(a.n, 1));
    SamplerState state(table, seed);
    for (std::size_t i = 0; i < a.count; ++i) {
        if (a.forest)
            out << serialize(sample_forest(a.n, state)) << '\n';
        else
            out << serialize(sample_tree(a.n, state)) << '\n';
    }
}

void cmd_param(const ParamArgs& a, std::ostream& out) {
    const auto toll = find_toll(a.toll);
    if (!toll) throw usage_error("unknown toll '" + a.toll + "' (expected unit, leaf or size)");
    const CountTable table(a.n);
    const CumulativeResult result = analyze_parameter(*toll, a.n, table);
    out << "n,total,mean_num,mean_den\n";
    for (std::size_t n = a.upto ? 1 : a.n; n <= a.n; ++n) {
        const Rational& mean = result.mean(n);
        out << n << ',' << to_decimal(result.total(n)) << ',' << mean.get_num().get_str() << ','
            << mean.get_den().get_str() << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting, enumeration, sampling and additive parameters of dependency trees", "deptree"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Number of trees with n nodes");
    count->add_option("n", count_args.n, "Tree size")->check(CLI::PositiveNumber);
    count->add_option("--upto", count_args.upto, "Print t_1..t_N")->check(CLI::PositiveNumber);
    count->add_option("--format", count_args.format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    ApproxArgs approx_args;
    auto* approx = app.add_subcommand("approx", "Leading-order asymptotic estimate of t_n (log scale)");
    approx->add_option("n", approx_args.n, "Tree size")->required()->check(CLI::PositiveNumber);
    approx->add_flag("--compare", approx_args.compare, "Also print the exact log count and relative error");
    approx->add_option("--table-limit", approx_args.table_limit, "Largest n accepted by --compare");

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "List every tree of size n in canonical order");
    enumerate->add_option("n", enum_args.n, "Tree size")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--oracle-limit", enum_args.oracle_limit, "Largest size to enumerate");

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "Uniformly random trees of size n");
    sample->add_option("n", sample_args.n, "Tree size (forest size with --forest)")->required();
    sample->add_option("--count", sample_args.count, "Number of samples");
    sample->add_option("--seed", sample_args.seed, "64-bit seed; drawn from entropy when omitted");
    sample->add_flag("--forest", sample_args.forest, "Sample forests instead of trees");

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "Coefficients of T(z) as CSV");
    series->add_option("--terms", series_args.terms, "Truncation order")->check(CLI::PositiveNumber);

    ParamArgs param_args;
    auto* param = app.add_subcommand("param", "Cumulative total and mean of an additive parameter");
    param->add_option("--toll", param_args.toll, "unit, leaf or size")->required();
    param->add_option("n", param_args.n, "Tree size")->required()->check(CLI::PositiveNumber);
    param->add_flag("--upto", param_args.upto, "Print every size 1..n");

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Run the cross-check suite");
    verify->add_option("--oracle-limit", verify_opts.oracle_limit, "Largest size checked by enumeration");
    verify->add_option("--series-terms", verify_opts.series_terms, "Series truncation order")
        ->check(CLI::PositiveNumber);
    verify->add_option("--table-size", verify_opts.table_size, "Count table size")->check(CLI::PositiveNumber);
    verify->add_flag("--inject-fault", verify_opts.inject_fault, "Corrupt one count first (harness hook)")
        ->group("");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    }

    try {
        if (*count) {
            cmd_count(count_args, out);
        } else if (*approx) {
            cmd_approx(approx_args, out);
        } else if (*enumerate) {
            cmd_enumerate(enum_args, out);
        } else if (*sample) {
            cmd_sample(sample_args, out, err);
        } else if (*series) {
            write_series_csv(out, solve_tree_gf(series_args.terms));
        } else if (*param) {
            cmd_param(param_args, out);
        } else if (*verify) {
            const VerifyReport report = run_verification(verify_opts);
            print_report(out, report);
            if (const auto* failure = report.first_failure()) {
                err << "error: check '" << failure->name << "' failed\n";
                return kExitFailure;
            }
        }
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace deptree::cli
