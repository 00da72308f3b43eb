#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "deptree/counting.hpp"
#include "deptree/series.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace deptree;

namespace {

RationalSeries one(std::size_t order) { return RationalSeries::constant(order, Rational(1)); }
RationalSeries z(std::size_t order) { return RationalSeries::monomial(order, 1); }

RationalSeries tree_series_from_table(std::size_t order) {
    const CountTable table(order);
    RationalSeries t(order);
    for (std::size_t n = 1; n <= order; ++n) t[n] = Rational(table.trees(n));
    return t;
}

// Small random rationals p/q with |p| <= 9, 1 <= q <= 4.
RationalSeries random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant = false) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    RationalSeries s(order);
    for (std::size_t k = zero_constant ? 1 : 0; k <= order; ++k) {
        s[k] = Rational(num(rng), den(rng));
        s[k].canonicalize();
    }
    return s;
}

}  // namespace

TEST_CASE("addition") {
    const RationalSeries a(4, {Rational(1), Rational(1)});
    CHECK(a + RationalSeries(4) == a);
    const RationalSeries t = tree_series_from_table(6);
    CHECK((t + (-t)).is_zero());
    const RationalSeries doubled = t + t;
    CHECK(doubled[1] == 2);
    CHECK(doubled[2] == 4);
    CHECK(doubled[3] == 14);
}

TEST_CASE("orders combine to the minimum") {
    const RationalSeries a(7), b(3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK((a - b).order() == 3);
}

TEST_CASE("multiplication") {
    const RationalSeries t = tree_series_from_table(8);
    const RationalSeries a = t + one(8);
    CHECK(a * one(8) == a);
    CHECK(z(5) * z(5) == RationalSeries::monomial(5, 2));
    const RationalSeries s = ps_quasi_inverse(t);
    CHECK((s * s * z(8))[3] == 7);
}

TEST_CASE("quasi-inverse") {
    CHECK(ps_quasi_inverse(RationalSeries(5)) == one(5));
    const RationalSeries geometric = ps_quasi_inverse(z(6));
    for (std::size_t k = 0; k <= 6; ++k) CHECK(geometric[k] == 1);

    const CountTable table(10);
    const RationalSeries forests = ps_quasi_inverse(tree_series_from_table(10));
    for (std::size_t m = 0; m <= 10; ++m) CHECK(forests[m] == Rational(table.forests(m)));

    CHECK_THROWS_AS((void)ps_quasi_inverse(one(3)), std::domain_error);
}

TEST_CASE("derivative") {
    CHECK(ps_derivative(one(4)).is_zero());
    CHECK(ps_derivative(RationalSeries::monomial(4, 2)) == RationalSeries::monomial(3, 1, Rational(2)));
    CHECK(ps_derivative(one(4)).order() == 3);
    const RationalSeries t = tree_series_from_table(6);
    CHECK(ps_shift(ps_derivative(t), 1)[3] == 21);
}

TEST_CASE("solving for the tree generating function") {
    const RationalSeries t = solve_tree_gf(5);
    CHECK(t[0] == 0);
    CHECK(t[1] == 1);
    CHECK(t[2] == 2);
    CHECK(t[3] == 7);
    CHECK(t[5] == 143);
    for (std::size_t n : {1u, 2u, 17u, 64u}) CHECK(solve_tree_gf(n) == tree_series_from_table(n));
    CHECK_THROWS_AS((void)solve_tree_gf(0), std::invalid_argument);
}

TEST_CASE("functional identity order") {
    CHECK(verify_functional_identity(solve_tree_gf(50)) == 50);
    CHECK(verify_functional_identity(RationalSeries(5)) == 0);
    RationalSeries bumped = solve_tree_gf(10);
    bumped[3] += 1;
    CHECK(verify_functional_identity(bumped) == 2);
}

TEST_CASE("derivative identity zT' = T(1-T)/(1-3T)") {
    const std::size_t n = 40;
    const RationalSeries t = solve_tree_gf(n + 1);
    const RationalSeries lhs = ps_shift(ps_derivative(t), 1).truncated(n);
    const RationalSeries tn = t.truncated(n);
    const RationalSeries rhs = tn * (one(n) - tn) * ps_quasi_inverse(ps_scale(tn, Rational(3)));
    CHECK(lhs == rhs);
}

TEST_CASE("ring axioms on random series") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t order = 1 + trial % 7;
        const auto a = random_series(rng, order);
        const auto b = random_series(rng, order);
        const auto c = random_series(rng, order);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("quasi-inverse satisfies (1 - a) b = 1 on random series") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t order = 1 + trial % 9;
        const auto a = random_series(rng, order, true);
        const auto b = ps_quasi_inverse(a);
        CHECK(b[0] == 1);
        CHECK((one(order) - a) * b == one(order));
    }
}

TEST_CASE("integer series use the same algorithms") {
    const IntegerSeries t(6, {BigNat(0), BigNat(1), BigNat(2), BigNat(7)});
    const IntegerSeries s = ps_quasi_inverse(t);
    CHECK(s[3] == 12);
}

TEST_CASE("numeric evaluation endpoints") {
    CHECK(eval_T_numeric(0.0) == 0.0);
    CHECK(std::abs(eval_T_numeric(4.0 / 27.0) - 1.0 / 3.0) <= 1e-9);
    CHECK_THROWS_AS((void)eval_T_numeric(-1e-3), std::domain_error);
    CHECK_THROWS_AS((void)eval_T_numeric(0.15), std::domain_error);
    CHECK_THROWS_AS((void)eval_T_numeric(std::nan("")), std::domain_error);
}

TEST_CASE("numeric evaluation matches the series partial sum at z = 0.1") {
    const CountTable table(200);
    double sum = 0.0;
    double power = 1.0;
    for (std::size_t n = 1; n <= 200; ++n) {
        power *= 0.1;
        sum += table.trees(n).get_d() * power;
    }
    const double value = eval_T_numeric(0.1);
    CHECK(std::abs(value - sum) < 1e-9);
    CHECK(std::abs(value * (1 - value) * (1 - value) - 0.1) <= 1e-12);
}

TEST_CASE("numeric evaluation is monotone with small residuals") {
    const double top = 4.0 / 27.0;
    double previous = -1.0;
    for (int i = 0; i <= 400; ++i) {
        const double zi = i == 400 ? top : top * i / 400.0;
        const double t = eval_T_numeric(zi);
        CHECK(t >= previous);
        CHECK(t >= 0.0);
        CHECK(t <= 1.0 / 3.0);
        CHECK(std::abs(t * (1 - t) * (1 - t) - zi) <= 1e-12);
        previous = t;
    }
}

TEST_CASE("series CSV dump") {
    std::ostringstream os;
    RationalSeries s(2);
    s[1] = Rational(1, 2);
    s[2] = Rational(-3);
    write_series_csv(os, s);
    CHECK(os.str() == "k,coefficient\n0,0\n1,1/2\n2,-3\n");
}
