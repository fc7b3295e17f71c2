#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spnet/numerics/rational.hpp"

namespace spnet {

/// Formal power series truncated at a fixed order N (coefficients 0..N).
///
/// Binary operations between series of different order truncate to the
/// smaller order; nothing ever claims more coefficients than both operands
/// actually determine.
class PowerSeries {
public:
    /// The zero series of the given order.
    explicit PowerSeries(std::size_t order);
    /// Coefficients 0..coeffs.size()-1; must be nonempty.
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries from_integers(std::span<const BigInt> coeffs);
    static PowerSeries monomial(std::size_t order, std::size_t power, const Rational& c = 1);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    PowerSeries truncated(std::size_t order) const;
    /// f(x) -> f(x^k), truncated at the same order.
    PowerSeries substitute_power(std::size_t k) const;
    PowerSeries derivative_times_x() const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(const Rational& scalar);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// exp(s); requires s[0] == 0.
PowerSeries series_exp(const PowerSeries& s);

/// log(s); requires s[0] == 1.
PowerSeries series_log(const PowerSeries& s);

/// prod_{n=1..N} (1 - x^n)^{-exponents[n-1]}, truncated at order N = exponents.size().
///
/// Computed through the integer recurrence n a_n = sum_k b_k a_{n-k} with
/// b_k = sum_{d | k} d e_d, independent of series_exp.
PowerSeries euler_product(std::span<const BigInt> exponents);

} // namespace spnet
