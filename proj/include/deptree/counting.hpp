#pragma once

#include "deptree/bignum.hpp"

#include <cstddef>
#include <vector>

namespace deptree {

/// Exact tree counts t_1..t_N and forest counts s_0..s_N.
///
/// Built from the two convolutions implied by T = z / (1 - T)^2:
///   s_0 = 1,  s_m = sum_{k=1..m} t_k s_{m-k}
///   t_n = sum_{i+j=n-1} s_i s_j
/// Immutable once built; concurrent reads are safe.
class CountTable {
public:
    explicit CountTable(std::size_t max_n);

    std::size_t max_n() const noexcept { return max_n_; }

    /// t_n for 1 <= n <= max_n(); throws std::out_of_range otherwise.
    const BigNat& trees(std::size_t n) const;
    /// s_m for 0 <= m <= max_n(); throws std::out_of_range otherwise.
    const BigNat& forests(std::size_t m) const;

    /// Test hook: returns a copy whose t_n is off by `delta`. Used to check
    /// that the verification suite notices a corrupted table.
    CountTable with_corrupted_tree_count(std::size_t n, long delta) const;

private:
    std::size_t max_n_;
    std::vector<BigNat> trees_;    // index 0 unused
    std::vector<BigNat> forests_;
};

inline CountTable build_count_table(std::size_t max_n) { return CountTable(max_n); }

/// binom(3n-2, n-1) / n.
BigNat count_closed_form(std::size_t n);

/// (1/n) [u^{n-1}] (1-u)^{-2n}, read off the negative-binomial expansion
/// term by term. Shares no code with count_closed_form.
BigNat lagrange_coefficient(std::size_t n);

struct AsymptoticConstants {
    Rational growth_rate{27, 4};
    Rational singularity{4, 27};
    /// -(1/2) ln(27 pi)
    double amplitude_log;
    double exponent = -1.5;
};

const AsymptoticConstants& asymptotic_constants();

/// ln of the leading-order estimate t_n ~ (27/4)^n / (sqrt(27 pi) n^{3/2}),
/// evaluated entirely in log space.
double stirling_log_approx(std::size_t n);

/// approx(n) / t_n - 1, with ln t_n taken exactly from the big integer.
double relative_error(std::size_t n, const CountTable& table);

/// t_{n+1} / t_n in lowest terms.
Rational growth_ratio(std::size_t n, const CountTable& table);

}  // namespace deptree
