#include "deptree/series.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace deptree {

namespace {

// One step of T <- z * (1/(1-T))^2 at the given order. Integer arithmetic
// suffices: the quasi-inverse needs no division.
IntegerSeries fixed_point_step(const IntegerSeries& current, std::size_t order) {
    const IntegerSeries forests = ps_quasi_inverse(current.truncated(order));
    return ps_shift(ps_mul(forests, forests), 1);
}

}  // namespace

RationalSeries solve_tree_gf(std::size_t order) {
    if (order == 0) throw std::invalid_argument("solve_tree_gf: order must be at least 1");
    // The step's z^k coefficient depends only on coefficients below k, so
    // iteration k fixes [z^k]. Running iteration k at order k gives the same
    // coefficients as running every iteration at full order.
    IntegerSeries tree(0);
    for (std::size_t k = 1; k <= order; ++k) tree = fixed_point_step(tree, k);
    const IntegerSeries again = fixed_point_step(tree, order);
    if (!(again == tree)) throw std::logic_error("tree generating function did not stabilize");
    return series_cast<Rational>(tree);
}

std::size_t verify_functional_identity(const RationalSeries& tree_gf) {
    const std::size_t n = tree_gf.order();
    const RationalSeries one_minus = RationalSeries::constant(n, Rational(1)) - tree_gf;
    const RationalSeries lhs = tree_gf * (one_minus * one_minus);
    const RationalSeries defect = lhs - RationalSeries::monomial(n, 1);
    for (std::size_t k = 0; k <= n; ++k)
        if (defect[k] != 0) return k == 0 ? 0 : k - 1;
    return n;
}

double eval_T_numeric(double z) {
    constexpr double singularity = 4.0 / 27.0;
    constexpr double branch_top = 1.0 / 3.0;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    // 4.0/27.0 rounds below the true 4/27, where the root sits ~3e-9 under
    // 1/3; anything within a few ulps of the singularity is the singular point.
    constexpr double singular_window = 4 * eps * singularity;

    if (!(z >= 0.0) || z > singularity + singular_window)
        throw std::domain_error("eval_T_numeric: z = " + std::to_string(z) + " lies outside [0, 4/27]");
    if (z == 0.0) return 0.0;
    if (z >= singularity - singular_window) return branch_top;

    auto residual = [z](double t) { return t * (1.0 - t) * (1.0 - t) - z; };
    // g(t) = t(1-t)^2 - z is increasing on [0, 1/3]: g(lo) < 0 <= g(hi).
    double lo = 0.0;
    double hi = branch_top;
    double t = z;  // T(z) = z + O(z^2)
    for (int iter = 0; iter < 200; ++iter) {
        const double g = residual(t);
        if (g == 0.0) return t;
        (g < 0.0 ? lo : hi) = t;
        const double slope = (1.0 - t) * (1.0 - 3.0 * t);
        double next = slope > 0.0 ? t - g / slope : lo - 1.0;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == t || hi - lo <= 2 * eps * hi) break;
        t = next;
    }
    // Best of the final iterate and the bracket ends.
    double best = t;
    for (double cand : {lo, hi})
        if (cand > 0.0 && std::abs(residual(cand)) < std::abs(residual(best))) best = cand;
    return best;
}

void write_series_csv(std::ostream& out, const RationalSeries& series) {
    out << "k,coefficient\n";
    for (std::size_t k = 0; k <= series.order(); ++k) out << k << ',' << to_decimal(series[k]) << '\n';
}

}  // namespace deptree
