#include "spnet/asymptotics.hpp"

#include "spnet/errors.hpp"

namespace spnet {

PowerSeries gf_log_form(const CountTable& counts, std::size_t order) {
    const PowerSeries Q = PowerSeries::from_integers(counts.Q_values().first(order + 1));
    PowerSeries exponent(order);
    const PowerSeries shifted = Q - PowerSeries::monomial(order, 0); // Q(x) - 1
    for (std::size_t n = 1; n <= order; ++n) {
        PowerSeries term = shifted.substitute_power(n) + PowerSeries::monomial(order, n);
        exponent += term * Rational(BigInt(1), BigInt(2 * n));
    }
    return series_exp(exponent);
}

PowerSeries gf_product_form(const CountTable& counts, std::size_t order) {
    return euler_product(counts.q_values().subspan(1, order));
}

bool verify_gf_identities(std::size_t order, const CountTable& counts) {
    if (order > counts.max_n()) throw TableUnderflow("verify_gf_identities: count table too short");
    const PowerSeries expected = PowerSeries::from_integers(counts.Q_values().first(order + 1));
    return gf_log_form(counts, order) == expected && gf_product_form(counts, order) == expected;
}

GeneratingFunction::GeneratingFunction(const CountTable& counts, std::size_t order, mpfr_prec_t precision)
    : precision_(precision) {
    if (order > counts.max_n()) throw TableUnderflow("GeneratingFunction: count table too short");
    coeffs_.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) coeffs_.emplace_back(counts.Q(k), precision);
}

BigFloat GeneratingFunction::truncated(const BigFloat& x) const {
    BigFloat acc(precision_);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc *= x;
        acc += coeffs_[k];
    }
    return acc;
}

BigFloat GeneratingFunction::truncated_small(const BigFloat& x) const {
    const BigFloat negligible = BigFloat(2.0, precision_).pow(-static_cast<long>(precision_) - 8);
    BigFloat acc = coeffs_[0];
    BigFloat power = x;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        BigFloat term = coeffs_[k] * power;
        acc += term;
        if (term < negligible) break;
        power *= x;
    }
    return acc;
}

BigFloat GeneratingFunction::root_function(const BigFloat& x) const {
    const BigFloat one(1.0, precision_);
    BigFloat acc = (one + x) / BigFloat(2.0, precision_);
    // Terms shrink like x^j; stop once they cannot move the result.
    const BigFloat negligible = BigFloat(2.0, precision_).pow(-static_cast<long>(precision_) - 8);
    BigFloat xj = x * x;
    for (std::size_t j = 2; xj > negligible; ++j) {
        BigFloat term = truncated_small(xj) - one + xj;
        acc += term / BigFloat(static_cast<double>(2 * j), precision_);
        xj *= x;
    }
    return acc;
}

BigFloat truncated_gf(const BigFloat& x, const CountTable& counts, std::size_t order) {
    return GeneratingFunction(counts, order, x.precision()).truncated(x);
}

BigFloat gf_root_function(const BigFloat& x, const CountTable& counts, std::size_t order) {
    return GeneratingFunction(counts, order, x.precision()).root_function(x);
}

namespace {

BigFloat root_reciprocal(const RealFunction& f, const BigFloat& target, mpfr_prec_t precision) {
    const BigFloat lo(1e-6, precision);
    const BigFloat hi = BigFloat(Rational(BigInt(1), BigInt(3)), precision);
    const BigFloat tol = BigFloat(2.0, precision).pow(-static_cast<long>(precision) + 4);
    return bisect_root(f, target, lo, hi, tol).reciprocal();
}

} // namespace

AsymptoticFit estimate_d_root(std::size_t order, const CountTable& counts, mpfr_prec_t precision) {
    if (order < 100) throw PreconditionError("estimate_d_root: order must be at least 100");
    if (order > counts.max_n()) throw TableUnderflow("estimate_d_root: count table too short");

    auto solve = [&](std::size_t n) {
        const GeneratingFunction gf(counts, n, precision);
        RealFunction f = [&gf](const BigFloat& x) { return gf.root_function(x); };
        return root_reciprocal(f, BigFloat::ln2(precision), precision);
    };

    AsymptoticFit fit;
    fit.method = FitMethod::root;
    fit.order = order;
    fit.d = solve(order);
    fit.residual = (fit.d - solve(order / 2)).abs();

    const GeneratingFunction gf(counts, order, precision);
    RealFunction plain = [&gf](const BigFloat& x) { return gf.truncated(x); };
    fit.naive_d = root_reciprocal(plain, BigFloat(2.0, precision), precision);

    const BigFloat N(BigInt(static_cast<unsigned long>(order)), precision);
    fit.c = BigFloat(counts.Q(order), precision) / fit.d.pow(static_cast<long>(order)) *
            N.pow(BigFloat(1.5, precision));
    return fit;
}

namespace {

// Q_{n+1}/Q_n ((n+1)/n)^{3/2}
BigFloat corrected_ratio(std::size_t n, const CountTable& counts, mpfr_prec_t precision) {
    const BigFloat ratio = BigFloat(Rational(counts.Q(n + 1), counts.Q(n)), precision);
    const BigFloat scale = BigFloat(Rational(BigInt(static_cast<unsigned long>(n + 1)),
                                             BigInt(static_cast<unsigned long>(n))),
                                    precision);
    return ratio * scale.pow(BigFloat(1.5, precision));
}

} // namespace

AsymptoticFit estimate_d_extrapolate(std::size_t max_n, const CountTable& counts, mpfr_prec_t precision) {
    if (max_n < 4) throw PreconditionError("estimate_d_extrapolate: need at least four terms");
    if (max_n > counts.max_n()) throw TableUnderflow("estimate_d_extrapolate: count table too short");

    // Ratios at n-1 and n, where n = max_n - 1 is the last with Q_{n+1} known.
    const std::size_t n = max_n - 1;
    const BigFloat r_prev = corrected_ratio(n - 1, counts, precision);
    const BigFloat r_last = corrected_ratio(n, counts, precision);
    // Remove the leading 1/n term: (n r_n - (n-1) r_{n-1}).
    const BigFloat big_n(BigInt(static_cast<unsigned long>(n)), precision);
    const BigFloat one(1.0, precision);
    const BigFloat richardson = big_n * r_last - (big_n - one) * r_prev;

    AsymptoticFit fit;
    fit.method = FitMethod::extrapolation;
    fit.order = max_n;
    fit.d = richardson;
    fit.residual = (richardson - r_last).abs();
    fit.naive_d = BigFloat(Rational(counts.Q(max_n), counts.Q(max_n - 1)), precision);
    const BigFloat N(BigInt(static_cast<unsigned long>(max_n)), precision);
    fit.c = BigFloat(counts.Q(max_n), precision) / fit.d.pow(static_cast<long>(max_n)) *
            N.pow(BigFloat(1.5, precision));
    return fit;
}

std::vector<BigFloat> prefactor_series(std::size_t from, std::size_t to, const CountTable& counts,
                                       const BigFloat& d) {
    std::vector<BigFloat> out;
    const mpfr_prec_t prec = d.precision();
    for (std::size_t n = from; n <= to; ++n) {
        const BigFloat N(BigInt(static_cast<unsigned long>(n)), prec);
        out.push_back(BigFloat(counts.Q(n), prec) / d.pow(static_cast<long>(n)) * N.pow(BigFloat(1.5, prec)));
    }
    return out;
}

BigFloat ci_qn_limit_check(std::size_t i, std::size_t n, const CountTable& counts, const BigFloat& d) {
    const mpfr_prec_t prec = d.precision();
    const BigFloat ratio(Rational(c_closed(i, n, counts), counts.Q(n)), prec);
    const BigFloat limit = (d.pow(static_cast<long>(i)) - BigFloat(1.0, prec)).reciprocal();
    return ((ratio - limit) / limit).abs();
}

BigFloat upper_bound(std::size_t n, const CountTable& counts, mpfr_prec_t precision) {
    if (n == 0 || n > counts.max_n()) throw TableUnderflow("upper_bound: n outside count table");
    BigFloat sum(precision);
    const BigFloat Qn(counts.Q(n), precision);
    for (std::size_t i = 1; i <= n; ++i) {
        BigInt numerator = counts.q(i) * c_closed(i, n, counts);
        sum += BigFloat(numerator, precision) / Qn;
    }
    return sum * BigFloat(2.5, precision);
}

BigFloat upper_bound_limit(std::size_t terms, const CountTable& counts, const BigFloat& d) {
    const mpfr_prec_t prec = d.precision();
    BigFloat sum(prec);
    const BigFloat one(1.0, prec);
    for (std::size_t i = 1; i <= terms; ++i)
        sum += BigFloat(counts.q(i), prec) / (d.pow(static_cast<long>(i)) - one);
    return sum * BigFloat(2.5, prec);
}

BigFloat zeta_three_halves_partial(std::size_t n, mpfr_prec_t precision) {
    if (n == 0) throw PreconditionError("zeta_three_halves_partial: n must be positive");
    // Smallest terms first.
    BigFloat sum(precision);
    const BigFloat exponent(-1.5, precision);
    for (std::size_t i = n; i >= 1; --i) {
        sum += BigFloat(BigInt(static_cast<unsigned long>(i)), precision).pow(exponent);
    }
    return sum;
}

} // namespace spnet
