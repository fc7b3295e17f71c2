#include "spnet/numerics/rational.hpp"

#include <cmath>
#include <ostream>

#include "spnet/errors.hpp"

namespace spnet {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    if (k > n) return out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt multichoose(const BigInt& q, unsigned long m) {
    if (m == 0) return 1;
    BigInt top = q + m - 1;
    BigInt out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), m);
    return out;
}

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) throw PreconditionError("Rational: zero denominator");
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
    if (value_.get_den() == 0) throw PreconditionError("Rational: zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw PreconditionError("Rational: cannot parse '" + text + "'");
    }
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw PreconditionError("Rational: non-finite double");
    return Rational(mpq_class(value));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw PreconditionError("Rational: reciprocal of zero");
    Rational out;
    mpq_inv(out.value_.get_mpq_t(), value_.get_mpq_t());
    return out;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return reciprocal().pow(-exponent);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of coprime integers stay coprime.
    Rational out;
    out.value_ = mpq_class(num, den);
    return out;
}

std::string Rational::to_string() const {
    return value_.get_den() == 1 ? value_.get_num().get_str() : value_.get_str();
}

std::string Rational::to_fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int places) const { return format_decimal(value_, places); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw PreconditionError("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::string format_decimal(const mpq_class& value, int places) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    mpq_class scaled = value * scale;
    bool negative = sgn(scaled) < 0;
    if (negative) scaled = -scaled;

    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    // Compare 2r with the denominator for round-half-even.
    int c = cmp(BigInt(2 * r), scaled.get_den());
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

    std::string digits = q.get_str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    if (negative && q != 0) digits.insert(0, "-");
    return digits;
}

} // namespace spnet

std::size_t std::hash<spnet::Rational>::operator()(const spnet::Rational& r) const noexcept {
    std::size_t h = std::hash<std::string>{}(r.raw().get_num().get_str(16));
    return h ^ (std::hash<std::string>{}(r.raw().get_den().get_str(16)) * 0x9e3779b97f4a7c15ULL);
}
