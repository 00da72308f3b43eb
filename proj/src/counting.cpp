#include "deptree/counting.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace deptree {

double log_big(const BigNat& x) {
    if (sgn(x) <= 0) throw std::domain_error("log_big: argument must be positive");
    // x = mantissa * 2^exp with mantissa in [0.5, 1).
    long exp = 0;
    const double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp) * std::numbers::ln2;
}

CountTable::CountTable(std::size_t max_n) : max_n_(max_n), trees_(max_n + 1), forests_(max_n + 1) {
    if (max_n == 0) throw std::invalid_argument("count table size must be at least 1");
    forests_[0] = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
        // t_n = sum_{i+j=n-1} s_i s_j, folded on the symmetry i <-> j.
        BigNat& t = trees_[n];
        const std::size_t last = n - 1;
        for (std::size_t i = 0; 2 * i < last; ++i)
            mpz_addmul(t.get_mpz_t(), forests_[i].get_mpz_t(), forests_[last - i].get_mpz_t());
        t *= 2;
        if (last % 2 == 0) mpz_addmul(t.get_mpz_t(), forests_[last / 2].get_mpz_t(), forests_[last / 2].get_mpz_t());

        BigNat& s = forests_[n];
        for (std::size_t k = 1; k <= n; ++k)
            mpz_addmul(s.get_mpz_t(), trees_[k].get_mpz_t(), forests_[n - k].get_mpz_t());
    }
}

const BigNat& CountTable::trees(std::size_t n) const {
    if (n == 0 || n > max_n_)
        throw std::out_of_range("tree count index " + std::to_string(n) + " outside table range 1.." +
                                std::to_string(max_n_));
    return trees_[n];
}

const BigNat& CountTable::forests(std::size_t m) const {
    if (m > max_n_)
        throw std::out_of_range("forest count index " + std::to_string(m) + " outside table range 0.." +
                                std::to_string(max_n_));
    return forests_[m];
}

CountTable CountTable::with_corrupted_tree_count(std::size_t n, long delta) const {
    CountTable copy = *this;
    (void)trees(n);
    copy.trees_[n] += delta;
    return copy;
}

BigNat count_closed_form(std::size_t n) {
    if (n == 0) throw std::invalid_argument("count_closed_form: n must be at least 1");
    BigNat binom;
    mpz_bin_uiui(binom.get_mpz_t(), 3 * n - 2, n - 1);
    BigNat quotient, remainder;
    mpz_fdiv_qr_ui(quotient.get_mpz_t(), remainder.get_mpz_t(), binom.get_mpz_t(), n);
    if (sgn(remainder) != 0) throw std::logic_error("binom(3n-2, n-1) not divisible by n");
    return quotient;
}

BigNat lagrange_coefficient(std::size_t n) {
    if (n == 0) throw std::invalid_argument("lagrange_coefficient: n must be at least 1");
    // (u / f(u))^n with f(u) = u (1-u)^2 is (1-u)^{-2n} = sum_k binom(k+2n-1, k) u^k.
    // Walk the coefficients c_k = c_{k-1} (k + 2n - 1) / k up to k = n - 1.
    BigNat coeff = 1;
    for (std::size_t k = 1; k <= n - 1; ++k) {
        coeff *= static_cast<unsigned long>(k + 2 * n - 1);
        mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), k);
    }
    if (!mpz_divisible_ui_p(coeff.get_mpz_t(), n))
        throw std::logic_error("Lagrange coefficient not divisible by n");
    mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), n);
    return coeff;
}

const AsymptoticConstants& asymptotic_constants() {
    static const AsymptoticConstants constants{
        .amplitude_log = -0.5 * std::log(27.0 * std::numbers::pi),
    };
    return constants;
}

double stirling_log_approx(std::size_t n) {
    if (n == 0) throw std::invalid_argument("stirling_log_approx: n must be at least 1");
    const auto& c = asymptotic_constants();
    const double dn = static_cast<double>(n);
    return c.amplitude_log + c.exponent * std::log(dn) + dn * std::log(27.0 / 4.0);
}

double relative_error(std::size_t n, const CountTable& table) {
    const double log_exact = log_big(table.trees(n));
    return std::expm1(stirling_log_approx(n) - log_exact);
}

Rational growth_ratio(std::size_t n, const CountTable& table) {
    if (n == 0 || n + 1 > table.max_n())
        throw std::out_of_range("growth ratio index " + std::to_string(n) + " needs t_" + std::to_string(n + 1) +
                                " but the table stops at " + std::to_string(table.max_n()));
    Rational r(table.trees(n + 1), table.trees(n));
    r.canonicalize();
    return r;
}

}  // namespace deptree
