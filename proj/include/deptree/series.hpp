#pragma once

#include "deptree/bignum.hpp"
#include "deptree/power_series.hpp"

#include <cstddef>
#include <iosfwd>

namespace deptree {

using IntegerSeries = PowerSeries<BigNat>;
using RationalSeries = PowerSeries<Rational>;

/// The tree generating function T(z) to the given order, obtained by
/// iterating T <- z / (1 - T)^2 from the zero series until the coefficients
/// stop changing.
RationalSeries solve_tree_gf(std::size_t order);

/// Largest M <= order(T) such that T (1 - T)^2 - z vanishes through z^M.
std::size_t verify_functional_identity(const RationalSeries& tree_gf);

/// The combinatorial branch of T(z) for real 0 <= z <= 4/27: the root of
/// T (1-T)^2 = z in [0, 1/3], found by bracketed Newton with a bisection
/// fallback. Residual is at most 1e-12. Throws std::domain_error outside the
/// interval.
double eval_T_numeric(double z);

/// Writes "k,coefficient" rows (with header) for k = 0..order.
void write_series_csv(std::ostream& out, const RationalSeries& series);

}  // namespace deptree
