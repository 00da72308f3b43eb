#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace deptree {

/// Truncated power series sum_{k=0..order} c_k z^k over an exact scalar ring.
///
/// Binary operations truncate to the smaller of the two orders. The scalar
/// is expected to be an exact type (mpz_class, mpq_class); nothing here
/// rounds.
template <typename Scalar>
class PowerSeries {
public:
    using scalar_type = Scalar;

    /// The zero series of the given order.
    explicit PowerSeries(std::size_t order = 0) : coeffs_(order + 1) {}

    PowerSeries(std::size_t order, std::initializer_list<Scalar> leading) : coeffs_(order + 1) {
        std::size_t k = 0;
        for (const auto& c : leading) {
            if (k > order) break;
            coeffs_[k++] = c;
        }
    }

    /// Coefficients c_0..c_order; the order is coeffs.size() - 1.
    explicit PowerSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
    }

    static PowerSeries constant(std::size_t order, const Scalar& c) { return PowerSeries(order, {c}); }

    /// c z^degree (zero if degree exceeds the order).
    static PowerSeries monomial(std::size_t order, std::size_t degree, const Scalar& c = Scalar(1)) {
        PowerSeries s(order);
        if (degree <= order) s.coeffs_[degree] = c;
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Scalar& operator[](std::size_t k) const { return coeffs_.at(k); }
    Scalar& operator[](std::size_t k) { return coeffs_.at(k); }

    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

    /// Copy cut down (or zero-extended) to a new order.
    PowerSeries truncated(std::size_t order) const {
        PowerSeries s(order);
        std::copy_n(coeffs_.begin(), std::min(order, this->order()) + 1, s.coeffs_.begin());
        return s;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c == 0; });
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Scalar> coeffs_;
};

template <typename Scalar>
PowerSeries<Scalar> ps_add(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries<Scalar> out(n);
    for (std::size_t k = 0; k <= n; ++k) out[k] = a[k] + b[k];
    return out;
}

template <typename Scalar>
PowerSeries<Scalar> ps_sub(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries<Scalar> out(n);
    for (std::size_t k = 0; k <= n; ++k) out[k] = a[k] - b[k];
    return out;
}

template <typename Scalar>
PowerSeries<Scalar> ps_scale(const PowerSeries<Scalar>& a, const Scalar& factor) {
    PowerSeries<Scalar> out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a[k] * factor;
    return out;
}

/// Cauchy product truncated to min(order(a), order(b)).
template <typename Scalar>
PowerSeries<Scalar> ps_mul(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    PowerSeries<Scalar> out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// Multiplication by z^shift, keeping the order.
template <typename Scalar>
PowerSeries<Scalar> ps_shift(const PowerSeries<Scalar>& a, std::size_t shift) {
    PowerSeries<Scalar> out(a.order());
    for (std::size_t k = shift; k <= a.order(); ++k) out[k] = a[k - shift];
    return out;
}

/// 1 / (1 - a), the sequence construction. Requires a_0 = 0; the result has
/// constant term 1. Only ring operations are needed, so integer series stay
/// integer.
template <typename Scalar>
PowerSeries<Scalar> ps_quasi_inverse(const PowerSeries<Scalar>& a) {
    if (a[0] != 0) throw std::domain_error("quasi-inverse needs a series with zero constant term");
    const std::size_t n = a.order();
    PowerSeries<Scalar> b(n);
    b[0] = 1;
    // b = 1 + a b  =>  b_k = sum_{i=1..k} a_i b_{k-i}
    for (std::size_t k = 1; k <= n; ++k) {
        Scalar acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (a[i] == 0) continue;
            acc += a[i] * b[k - i];
        }
        b[k] = std::move(acc);
    }
    return b;
}

/// Termwise derivative; the result has order max(order(a) - 1, 0).
template <typename Scalar>
PowerSeries<Scalar> ps_derivative(const PowerSeries<Scalar>& a) {
    if (a.order() == 0) return PowerSeries<Scalar>(0);
    PowerSeries<Scalar> out(a.order() - 1);
    for (std::size_t k = 1; k <= a.order(); ++k) out[k - 1] = a[k] * Scalar(static_cast<unsigned long>(k));
    return out;
}

template <typename Scalar>
PowerSeries<Scalar> operator+(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
    return ps_add(a, b);
}

template <typename Scalar>
PowerSeries<Scalar> operator-(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
    return ps_sub(a, b);
}

template <typename Scalar>
PowerSeries<Scalar> operator-(const PowerSeries<Scalar>& a) {
    return ps_scale(a, Scalar(-1));
}

template <typename Scalar>
PowerSeries<Scalar> operator*(const PowerSeries<Scalar>& a, const PowerSeries<Scalar>& b) {
    return ps_mul(a, b);
}

template <typename Scalar>
PowerSeries<Scalar> operator*(const Scalar& c, const PowerSeries<Scalar>& a) {
    return ps_scale(a, c);
}

/// Coefficient-wise conversion between scalar rings.
template <typename To, typename From>
PowerSeries<To> series_cast(const PowerSeries<From>& a) {
    PowerSeries<To> out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = To(a[k]);
    return out;
}

}  // namespace deptree
