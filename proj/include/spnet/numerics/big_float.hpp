#pragma once

#include <functional>
#include <string>

#include <mpfr.h>

#include "spnet/numerics/rational.hpp"

namespace spnet {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;

/// Radix-2 floating value of explicit precision, backed by MPFR.
///
/// Every value carries its precision. Binary operations produce a result at
/// the larger of the two operand precisions, rounded to nearest.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision = kDefaultPrecision);
    BigFloat(double value, mpfr_prec_t precision);
    BigFloat(const BigInt& value, mpfr_prec_t precision);
    BigFloat(const Rational& value, mpfr_prec_t precision);
    /// Decimal string such as "3.5608393095389433".
    BigFloat(const std::string& decimal, mpfr_prec_t precision);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
    mpfr_srcptr get() const noexcept { return value_; }

    double to_double() const;
    /// Scientific notation with `digits` significant digits.
    std::string to_string(int digits = 20) const;
    /// Fixed notation with `places` digits after the point.
    std::string to_fixed(int places) const;

    BigFloat abs() const;
    BigFloat reciprocal() const;
    BigFloat sqrt() const;
    BigFloat log() const;
    BigFloat exp() const;
    BigFloat pow(const BigFloat& exponent) const;
    BigFloat pow(long exponent) const;

    static BigFloat ln2(mpfr_prec_t precision);

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    BigFloat operator-() const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_); }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_); }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_); }

private:
    void widen_to(mpfr_prec_t precision);

    mpfr_t value_;
};

using RealFunction = std::function<BigFloat(const BigFloat&)>;

/// Bisection for f(x) = target on [lo, hi] with f monotone.
///
/// Stops once the bracket is narrower than `tol` (measured in x) and returns
/// the midpoint. Throws BracketingError when f(lo) - target and f(hi) - target
/// have the same strict sign.
BigFloat bisect_root(const RealFunction& f, const BigFloat& target, BigFloat lo, BigFloat hi,
                     const BigFloat& tol);

} // namespace spnet
