#include "deptree/verify.hpp"

#include "deptree/additive.hpp"
#include "deptree/counting.hpp"
#include "deptree/sampler.hpp"
#include "deptree/series.hpp"
#include "deptree/tree.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace deptree {

bool VerifyReport::all_passed() const { return first_failure() == nullptr; }

const CheckResult* VerifyReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

namespace {

// Runs one check; a thrown exception counts as a failure with its message.
CheckResult run_check(std::string name, const std::function<std::string()>& body) {
    CheckResult result{std::move(name), false, {}};
    try {
        result.detail = body();
        result.passed = result.detail.empty();
        if (result.passed) result.detail = "ok";
    } catch (const std::exception& e) {
        result.detail = std::string("exception: ") + e.what();
    }
    return result;
}

std::string mismatch(const std::string& what, std::size_t n, const std::string& got, const std::string& want) {
    std::ostringstream os;
    os << what << " at n=" << n << ": " << got << " != " << want;
    return os.str();
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    const std::size_t limit = options.oracle_limit;
    const std::size_t terms = std::max<std::size_t>(options.series_terms, 1);
    const std::size_t table_size = std::max({options.table_size, limit, terms, std::size_t{1}});

    CountTable table(table_size);
    if (options.inject_fault) table = table.with_corrupted_tree_count(std::min<std::size_t>(5, table_size), 1);

    report.checks.push_back(run_check("three-way counts", [&]() -> std::string {
        for (std::size_t n = 1; n <= table_size; ++n) {
            const BigNat closed = count_closed_form(n);
            if (table.trees(n) != closed) return mismatch("table vs closed form", n, to_decimal(table.trees(n)), to_decimal(closed));
            const BigNat lagrange = lagrange_coefficient(n);
            if (lagrange != closed) return mismatch("Lagrange vs closed form", n, to_decimal(lagrange), to_decimal(closed));
        }
        return {};
    }));

    // One enumeration per size serves both the count and the parameter checks.
    std::vector<std::vector<DepTree>> trees_by_size(limit + 1);
    report.checks.push_back(run_check("oracle tree counts", [&]() -> std::string {
        for (std::size_t n = 1; n <= limit; ++n) {
            trees_by_size[n] = enumerate_trees(n, limit);
            if (table.trees(n) != trees_by_size[n].size())
                return mismatch("enumeration", n, std::to_string(trees_by_size[n].size()), to_decimal(table.trees(n)));
        }
        return {};
    }));

    report.checks.push_back(run_check("oracle forest counts", [&]() -> std::string {
        for (std::size_t m = 0; m <= limit; ++m) {
            const auto count = enumerate_forests(m, limit).size();
            if (table.forests(m) != count)
                return mismatch("forest enumeration", m, std::to_string(count), to_decimal(table.forests(m)));
        }
        return {};
    }));

    const RationalSeries tree_gf = solve_tree_gf(terms);
    report.checks.push_back(run_check("series fixed point", [&]() -> std::string {
        for (std::size_t n = 1; n <= terms; ++n)
            if (tree_gf[n] != Rational(table.trees(n)))
                return mismatch("[z^n]T", n, to_decimal(tree_gf[n]), to_decimal(table.trees(n)));
        return {};
    }));

    report.checks.push_back(run_check("functional identity", [&]() -> std::string {
        const std::size_t m = verify_functional_identity(tree_gf);
        return m == terms ? std::string{} : "identity holds only through order " + std::to_string(m);
    }));

    report.checks.push_back(run_check("derivative identity", [&]() -> std::string {
        const RationalSeries lhs = ps_shift(ps_derivative(solve_tree_gf(terms + 1)), 1).truncated(terms);
        const RationalSeries one = RationalSeries::constant(terms, Rational(1));
        const RationalSeries rhs = tree_gf * (one - tree_gf) * ps_quasi_inverse(ps_scale(tree_gf, Rational(3)));
        for (std::size_t k = 0; k <= terms; ++k)
            if (lhs[k] != rhs[k]) return mismatch("zT' vs T(1-T)/(1-3T)", k, to_decimal(lhs[k]), to_decimal(rhs[k]));
        return {};
    }));

    report.checks.push_back(run_check("cumulative forms agree", [&]() -> std::string {
        for (const auto& toll : builtin_tolls()) {
            const RationalSeries e = toll.toll_gf(terms);
            if (!(cumulative_gf(e, tree_gf) == cumulative_gf_unsimplified(e, tree_gf)))
                return "toll '" + toll.name + "': simplified and unsimplified C(z) differ";
        }
        return {};
    }));

    report.checks.push_back(run_check("cumulative vs enumeration", [&]() -> std::string {
        const std::size_t order = std::min(limit, terms);
        for (const auto& toll : builtin_tolls()) {
            const RationalSeries c = cumulative_gf(toll.toll_gf(order), tree_gf);
            for (std::size_t n = 1; n <= order; ++n) {
                BigNat total = 0;
                for (const auto& t : trees_by_size[n]) total += fold_cost(t, toll);
                if (c[n] != Rational(total))
                    return mismatch("toll '" + toll.name + "' [z^n]C", n, to_decimal(c[n]), to_decimal(total));
            }
        }
        return {};
    }));

    report.checks.push_back(run_check("sampler smoke", [&]() -> std::string {
        const std::size_t top = std::min<std::size_t>(table_size, 32);
        SamplerState a(table, 12345);
        SamplerState b(table, 12345);
        for (std::size_t n = 1; n <= top; ++n) {
            const DepTree x = sample_tree(n, a);
            const DepTree y = sample_tree(n, b);
            if (x.size() != n) return mismatch("sample size", n, std::to_string(x.size()), std::to_string(n));
            if (!(x == y)) return "same seed produced different samples at n=" + std::to_string(n);
        }
        return {};
    }));

    return report;
}

void print_report(std::ostream& out, const VerifyReport& report) {
    std::size_t width = 0;
    for (const auto& c : report.checks) width = std::max(width, c.name.size());
    for (const auto& c : report.checks)
        out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
            << c.detail << '\n';
    if (const auto* failure = report.first_failure())
        out << "verification failed: " << failure->name << '\n';
    else
        out << "all " << report.checks.size() << " checks passed\n";
}

}  // namespace deptree
