#include "spnet/numerics/big_float.hpp"

#include <algorithm>
#include <memory>

#include "spnet/errors.hpp"

namespace spnet {

namespace {

std::string mpfr_format(const char* fmt, int digits, mpfr_srcptr v) {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, fmt, digits, v) < 0) throw std::bad_alloc();
    std::unique_ptr<char, decltype(&mpfr_free_str)> guard(buf, &mpfr_free_str);
    return std::string(buf);
}

} // namespace

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(value_);
        throw PreconditionError("BigFloat: cannot parse '" + decimal + "'");
    }
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    // Leave `other` valid at minimum precision so its destructor stays safe.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::to_string(int digits) const { return mpfr_format("%.*Re", digits - 1, value_); }

std::string BigFloat::to_fixed(int places) const { return mpfr_format("%.*Rf", places, value_); }

void BigFloat::widen_to(mpfr_prec_t precision) {
    if (precision > this->precision()) mpfr_prec_round(value_, precision, MPFR_RNDN);
}

BigFloat BigFloat::abs() const {
    BigFloat out(precision());
    mpfr_abs(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::reciprocal() const {
    BigFloat out(precision());
    mpfr_ui_div(out.value_, 1, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::sqrt() const {
    BigFloat out(precision());
    mpfr_sqrt(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::log() const {
    BigFloat out(precision());
    mpfr_log(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::exp() const {
    BigFloat out(precision());
    mpfr_exp(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow(const BigFloat& exponent) const {
    BigFloat out(std::max(precision(), exponent.precision()));
    mpfr_pow(out.value_, value_, exponent.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow(long exponent) const {
    BigFloat out(precision());
    mpfr_pow_si(out.value_, value_, exponent, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::ln2(mpfr_prec_t precision) {
    BigFloat out(precision);
    mpfr_const_log2(out.value_, MPFR_RNDN);
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    widen_to(rhs.precision());
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    widen_to(rhs.precision());
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    widen_to(rhs.precision());
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    widen_to(rhs.precision());
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat bisect_root(const RealFunction& f, const BigFloat& target, BigFloat lo, BigFloat hi,
                     const BigFloat& tol) {
    const BigFloat zero(0.0, target.precision());
    BigFloat f_lo = f(lo) - target;
    BigFloat f_hi = f(hi) - target;
    if (f_lo == zero) return lo;
    if (f_hi == zero) return hi;
    if ((f_lo < zero) == (f_hi < zero))
        throw BracketingError("bisect_root: f - target has no sign change on [" + lo.to_string(10) +
                              ", " + hi.to_string(10) + "]");
    const bool increasing = f_lo < zero;
    const BigFloat two(2.0, lo.precision());
    while ((hi - lo) > tol) {
        BigFloat mid = (lo + hi) / two;
        if (mid <= lo || mid >= hi) break; // bracket is at working precision
        BigFloat f_mid = f(mid) - target;
        if (f_mid == zero) return mid;
        if ((f_mid < zero) == increasing)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    return (lo + hi) / two;
}

} // namespace spnet
