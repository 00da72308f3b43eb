#include "deptree/additive.hpp"

#include <algorithm>
#include <stdexcept>

namespace deptree {

namespace {

std::vector<TollSpec> make_builtins() {
    std::vector<TollSpec> tolls;
    tolls.push_back({
        "unit",
        [](const DepTree&) -> std::uint64_t { return 1; },
        [](std::size_t order) { return solve_tree_gf(order); },
    });
    tolls.push_back({
        "leaf",
        [](const DepTree& t) -> std::uint64_t { return t.size() == 1 ? 1 : 0; },
        [](std::size_t order) { return RationalSeries::monomial(order, 1); },
    });
    tolls.push_back({
        "size",
        [](const DepTree& t) -> std::uint64_t { return t.size(); },
        [](std::size_t order) {
            // z T'(z); T' loses one order, so solve one order higher.
            return ps_shift(ps_derivative(solve_tree_gf(order + 1)), 1).truncated(order);
        },
    });
    return tolls;
}

BigNat to_natural(const Rational& q) {
    if (q.get_den() != 1 || sgn(q) < 0)
        throw std::logic_error("cumulative coefficient " + to_decimal(q) + " is not a natural number");
    return q.get_num();
}

}  // namespace

const std::vector<TollSpec>& builtin_tolls() {
    static const std::vector<TollSpec> tolls = make_builtins();
    return tolls;
}

std::optional<TollSpec> find_toll(const std::string& name) {
    for (const auto& toll : builtin_tolls())
        if (toll.name == name) return toll;
    return std::nullopt;
}

BigNat fold_cost(const DepTree& t, const TollSpec& toll) {
    // Post-order walk: a frame's cost accumulates its children's costs
    // before being added to its parent.
    struct Frame {
        const DepTree* tree;
        std::size_t next_child;
        BigNat cost;
    };
    std::vector<Frame> stack;
    stack.push_back({&t, 0, BigNat(toll.evaluate(t))});
    while (true) {
        Frame& f = stack.back();
        const auto& l = f.tree->left();
        const auto& r = f.tree->right();
        if (f.next_child < l.size() + r.size()) {
            const DepTree* child = f.next_child < l.size() ? &l[f.next_child] : &r[f.next_child - l.size()];
            ++f.next_child;
            stack.push_back({child, 0, BigNat(toll.evaluate(*child))});
            continue;
        }
        BigNat done = std::move(f.cost);
        stack.pop_back();
        if (stack.empty()) return done;
        stack.back().cost += done;
    }
}

RationalSeries cumulative_gf(const RationalSeries& toll_gf, const RationalSeries& tree_gf) {
    const std::size_t n = std::min(toll_gf.order(), tree_gf.order());
    const RationalSeries tree = tree_gf.truncated(n);
    const RationalSeries one_minus_tree = RationalSeries::constant(n, Rational(1)) - tree;
    const RationalSeries inverse = ps_quasi_inverse(ps_scale(tree, Rational(3)));
    return toll_gf.truncated(n) * one_minus_tree * inverse;
}

RationalSeries cumulative_gf_unsimplified(const RationalSeries& toll_gf, const RationalSeries& tree_gf) {
    const std::size_t n = std::min(toll_gf.order(), tree_gf.order());
    const RationalSeries forests = ps_quasi_inverse(tree_gf.truncated(n));  // 1/(1-T)
    const RationalSeries cubed = forests * forests * forests;
    const RationalSeries denominator_tail = ps_scale(ps_shift(cubed, 1), Rational(2));  // 2z/(1-T)^3
    return toll_gf.truncated(n) * ps_quasi_inverse(denominator_tail);
}

BigNat cumulative_by_enumeration(const TollSpec& toll, std::size_t n, std::size_t oracle_limit) {
    BigNat total = 0;
    for (const auto& t : enumerate_trees(n, oracle_limit)) total += fold_cost(t, toll);
    return total;
}

namespace {

RationalSeries toll_gf_by_enumeration(const TollSpec& toll, std::size_t order, std::size_t oracle_limit) {
    RationalSeries e(order);
    for (std::size_t n = 1; n <= order; ++n) {
        BigNat sum = 0;
        for (const auto& t : enumerate_trees(n, oracle_limit)) sum += toll.evaluate(t);
        e[n] = Rational(sum);
    }
    return e;
}

}  // namespace

CumulativeResult analyze_parameter(const TollSpec& toll, std::size_t order, const CountTable& table,
                                   std::size_t oracle_limit) {
    if (order == 0) throw std::invalid_argument("parameter analysis needs n >= 1");
    if (order > table.max_n())
        throw std::out_of_range("n = " + std::to_string(order) + " exceeds the count table size " +
                                std::to_string(table.max_n()));
    const RationalSeries e =
        toll.has_toll_gf() ? toll.toll_gf(order) : toll_gf_by_enumeration(toll, order, oracle_limit);
    CumulativeResult result{cumulative_gf(e, solve_tree_gf(order)), {}, {}};
    result.totals.resize(order + 1);
    result.means.resize(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        result.totals[n] = to_natural(result.cumulative[n]);
        result.means[n] = Rational(result.totals[n], table.trees(n));
        result.means[n].canonicalize();
    }
    return result;
}

Rational mean_parameter(const TollSpec& toll, std::size_t n, const CountTable& table, std::size_t oracle_limit) {
    return analyze_parameter(toll, n, table, oracle_limit).mean(n);
}

}  // namespace deptree
