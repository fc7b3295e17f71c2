#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace spnet {

using BigInt = mpz_class;

/// n choose k; zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// Multiset coefficient: ways to pick m items with repetition from q kinds.
BigInt multichoose(const BigInt& q, unsigned long m);

/// Exact fraction in lowest terms with a positive denominator.
///
/// Every constructor and every arithmetic result is reduced, so two values
/// compare equal iff their numerators and denominators are identical. This is
/// what lets Rational serve as a map key for resistance distributions.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& value);

    /// Parses "a" or "a/b".
    static Rational parse(const std::string& text);
    /// Exact value of a finite double.
    static Rational from_double(double value);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    Rational reciprocal() const;
    Rational pow(long exponent) const;
    double to_double() const { return value_.get_d(); }

    /// "num/den", or just "num" when the denominator is one.
    std::string to_string() const;
    /// Always "num/den".
    std::string to_fraction_string() const;
    /// Fixed-point decimal rounded half-to-even.
    std::string to_decimal(int places) const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Round-half-even fixed-point rendering of an exact rational.
std::string format_decimal(const mpq_class& value, int places);

} // namespace spnet

template <>
struct std::hash<spnet::Rational> {
    std::size_t operator()(const spnet::Rational& r) const noexcept;
};
