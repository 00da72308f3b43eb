#pragma once

#include "deptree/bignum.hpp"
#include "deptree/counting.hpp"
#include "deptree/series.hpp"
#include "deptree/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace deptree {

/// A toll e(t) defining the additive parameter c(t) = e(t) + sum over the
/// root's children r of c(r).
struct TollSpec {
    std::string name;
    /// Must be a pure function of the tree.
    std::function<std::uint64_t(const DepTree&)> evaluate;
    /// E(z) = sum_t e(t) z^{|t|} to the requested order, when known in
    /// closed form.
    std::function<RationalSeries(std::size_t order)> toll_gf;

    bool has_toll_gf() const { return static_cast<bool>(toll_gf); }
};

/// "unit" (e = 1, E = T), "leaf" (e = [|t| = 1], E = z) and
/// "size" (e = |t|, E = z T').
const std::vector<TollSpec>& builtin_tolls();

/// Looks a builtin up by name.
std::optional<TollSpec> find_toll(const std::string& name);

/// c(t) by the additive recursion; children are the left list followed by
/// the right list.
BigNat fold_cost(const DepTree& t, const TollSpec& toll);

/// C = E (1 - T) / (1 - 3T), truncated to the smaller order.
RationalSeries cumulative_gf(const RationalSeries& toll_gf, const RationalSeries& tree_gf);

/// C = E / (1 - 2z / (1 - T)^3), the unsimplified form of the same relation.
RationalSeries cumulative_gf_unsimplified(const RationalSeries& toll_gf, const RationalSeries& tree_gf);

/// sum of c(t) over every tree of size n, by exhaustive enumeration.
BigNat cumulative_by_enumeration(const TollSpec& toll, std::size_t n,
                                 std::size_t oracle_limit = kDefaultOracleLimit);

/// Cumulative totals and means for n = 1..order.
struct CumulativeResult {
    RationalSeries cumulative;
    std::vector<BigNat> totals;    // index n; entry 0 unused
    std::vector<Rational> means;   // index n; entry 0 unused

    const BigNat& total(std::size_t n) const { return totals.at(n); }
    const Rational& mean(std::size_t n) const { return means.at(n); }
};

/// Uses the toll GF when available; otherwise builds E(z) by enumeration,
/// which limits `order` to the oracle limit.
CumulativeResult analyze_parameter(const TollSpec& toll, std::size_t order, const CountTable& table,
                                   std::size_t oracle_limit = kDefaultOracleLimit);

/// [z^n] C / t_n.
Rational mean_parameter(const TollSpec& toll, std::size_t n, const CountTable& table,
                        std::size_t oracle_limit = kDefaultOracleLimit);

}  // namespace deptree
