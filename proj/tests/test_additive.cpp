#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deptree/additive.hpp"

#include <random>

using namespace deptree;

namespace {

const TollSpec& toll(const std::string& name) {
    for (const auto& t : builtin_tolls())
        if (t.name == name) return t;
    throw std::invalid_argument(name);
}

// Root degree has no closed-form toll GF here, so it exercises the
// enumeration path.
TollSpec degree_toll() {
    return {"degree", [](const DepTree& t) -> std::uint64_t { return t.child_count(); }, {}};
}

// Sum of e(subtree at v) over all nodes v; the additive recursion unrolled.
BigNat sum_over_nodes(const DepTree& t, const TollSpec& toll) {
    BigNat total = toll.evaluate(t);
    for (const auto& c : t.left()) total += sum_over_nodes(c, toll);
    for (const auto& c : t.right()) total += sum_over_nodes(c, toll);
    return total;
}

DepTree random_tree(std::mt19937_64& rng, int budget) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<DepTree> left, right;
    while (budget > 0) {
        const int choice = pick(rng);
        if (choice == 0) break;
        --budget;
        (choice == 1 ? left : right).push_back(random_tree(rng, budget / 2));
    }
    return DepTree(std::move(left), std::move(right));
}

}  // namespace

TEST_CASE("fold_cost examples") {
    const DepTree two_left = parse("[[|][|]|]");
    CHECK(fold_cost(two_left, toll("unit")) == 3);
    CHECK(fold_cost(parse("[[[|]|]|[|]]"), toll("unit")) == 4);
    CHECK(fold_cost(DepTree(), toll("leaf")) == 1);
    CHECK(fold_cost(two_left, toll("leaf")) == 2);
    // sizes: root 3, two leaves of size 1
    CHECK(fold_cost(two_left, toll("size")) == 5);
}

TEST_CASE("builtin tolls") {
    const auto& tolls = builtin_tolls();
    REQUIRE(tolls.size() == 3);
    CHECK(tolls[0].name == "unit");
    CHECK(tolls[1].name == "leaf");
    CHECK(tolls[2].name == "size");
    for (const auto& t : tolls) CHECK(t.has_toll_gf());

    CHECK(toll("unit").toll_gf(5)[3] == 7);
    CHECK(toll("leaf").toll_gf(5) == RationalSeries::monomial(5, 1));
    CHECK(toll("size").toll_gf(5)[3] == 21);
    CHECK(toll("size").toll_gf(5).order() == 5);

    CHECK(find_toll("leaf").has_value());
    CHECK_FALSE(find_toll("height").has_value());
}

TEST_CASE("toll GFs match enumeration") {
    for (const auto& t : builtin_tolls()) {
        const RationalSeries e = t.toll_gf(8);
        for (std::size_t n = 1; n <= 8; ++n) {
            BigNat sum = 0;
            for (const auto& tree : enumerate_trees(n)) sum += t.evaluate(tree);
            CHECK(e[n] == Rational(sum));
        }
    }
}

TEST_CASE("cumulative_gf examples") {
    const RationalSeries tree = solve_tree_gf(10);
    const RationalSeries unit = cumulative_gf(tree, tree);
    CHECK(unit[3] == 21);

    const RationalSeries leaf = cumulative_gf(RationalSeries::monomial(10, 1), tree);
    CHECK(leaf[1] == 1);
    CHECK(leaf[2] == 2);
    CHECK(leaf[3] == 10);

    CHECK(cumulative_gf(RationalSeries(10), tree).is_zero());
    CHECK(cumulative_gf(RationalSeries(4), tree).order() == 4);
}

TEST_CASE("cumulative_by_enumeration examples") {
    CHECK(cumulative_by_enumeration(toll("unit"), 3) == 21);
    CHECK(cumulative_by_enumeration(toll("leaf"), 3) == 10);
    CHECK(cumulative_by_enumeration(toll("leaf"), 2) == 2);
    CHECK_THROWS_AS((void)cumulative_by_enumeration(toll("leaf"), 11), oracle_limit_error);
}

TEST_CASE("mean_parameter examples") {
    const CountTable table(20);
    for (std::size_t n = 1; n <= 20; ++n) CHECK(mean_parameter(toll("unit"), n, table) == Rational(n));
    CHECK(mean_parameter(toll("leaf"), 3, table) == Rational(10, 7));
    CHECK(mean_parameter(toll("leaf"), 1, table) == 1);
    CHECK_THROWS_AS((void)mean_parameter(toll("leaf"), 21, table), std::out_of_range);
}

TEST_CASE("cumulative GF agrees with enumeration for every builtin") {
    const RationalSeries tree = solve_tree_gf(8);
    for (const auto& t : builtin_tolls()) {
        const RationalSeries c = cumulative_gf(t.toll_gf(8), tree);
        for (std::size_t n = 1; n <= 8; ++n) {
            INFO(t.name << " n=" << n);
            CHECK(c[n] == Rational(cumulative_by_enumeration(t, n)));
        }
    }
}

TEST_CASE("simplified and unsimplified relations agree") {
    const RationalSeries tree = solve_tree_gf(40);
    for (const auto& t : builtin_tolls()) {
        const RationalSeries e = t.toll_gf(40);
        CHECK(cumulative_gf(e, tree) == cumulative_gf_unsimplified(e, tree));
    }
}

TEST_CASE("cumulative_gf is linear in the toll") {
    const RationalSeries tree = solve_tree_gf(20);
    const RationalSeries e1 = toll("leaf").toll_gf(20);
    const RationalSeries e2 = toll("size").toll_gf(20);
    CHECK(cumulative_gf(e1 + e2, tree) == cumulative_gf(e1, tree) + cumulative_gf(e2, tree));
}

TEST_CASE("unit toll gives zT'") {
    const RationalSeries tree = solve_tree_gf(31);
    const RationalSeries t30 = tree.truncated(30);
    CHECK(cumulative_gf(t30, t30) == ps_shift(ps_derivative(tree), 1).truncated(30));
}

TEST_CASE("custom toll without a GF goes through enumeration") {
    const CountTable table(6);
    const TollSpec degree = degree_toll();
    const CumulativeResult result = analyze_parameter(degree, 6, table);
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(result.total(n) == cumulative_by_enumeration(degree, n));
        Rational mean(result.total(n), table.trees(n));
        mean.canonicalize();
        CHECK(result.mean(n) == mean);
        CHECK(result.cumulative[n] == Rational(result.total(n)));
    }
    const CountTable big(12);
    CHECK_THROWS_AS((void)analyze_parameter(degree, 12, big), oracle_limit_error);
}

TEST_CASE("fold_cost equals the per-node toll sum") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        const DepTree t = random_tree(rng, 12);
        for (const auto& spec : builtin_tolls()) CHECK(fold_cost(t, spec) == sum_over_nodes(t, spec));
        CHECK(fold_cost(t, degree_toll()) == t.size() - 1);
    }
}
