#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "reference_tables.hpp"
#include "spnet/asymptotics.hpp"
#include "spnet/errors.hpp"

using namespace spnet;

namespace {

const CountTable& counts() {
    static const CountTable t = q_recursive(2500);
    return t;
}

double rel(const BigFloat& x, double expected) { return std::abs(x.to_double() - expected) / expected; }

const BigFloat& growth() {
    static const BigFloat d(std::string(kGrowthConstant), kDefaultPrecision);
    return d;
}

} // namespace

TEST_CASE("generating function identities") {
    CHECK(verify_gf_identities(1, counts()));
    CHECK(verify_gf_identities(12, counts()));
    CHECK(verify_gf_identities(60, counts()));
    const PowerSeries log_form = gf_log_form(counts(), 12);
    const PowerSeries product_form = gf_product_form(counts(), 12);
    for (std::size_t k = 0; k <= 12; ++k) {
        CHECK(log_form[k] == Rational(reference::kQ[k]));
        CHECK(product_form[k] == Rational(reference::kQ[k]));
    }
    CHECK(gf_log_form(counts(), 60) == gf_product_form(counts(), 60));
}

TEST_CASE("root method") {
    const AsymptoticFit fit = estimate_d_root(600, counts());
    CHECK((fit.d - growth()).abs() < BigFloat(1e-15, 64));
    CHECK(fit.d.to_string(11) == "3.5608393095e+00");
    const AsymptoticFit small = estimate_d_root(100, counts());
    CHECK((small.d - fit.d).abs() < BigFloat(1e-4, 64));
    // The plain truncated polynomial converges only like 1/order.
    CHECK(std::abs(fit.naive_d.to_double() - 3.55571) < 1e-4);
    CHECK(fit.c.to_double() == doctest::Approx(0.4132).epsilon(1e-3));
    CHECK_THROWS_AS(estimate_d_root(50, counts()), PreconditionError);

    const GeneratingFunction gf(counts(), 600, kDefaultPrecision);
    const BigFloat x = fit.d.reciprocal();
    CHECK((gf.root_function(x) - BigFloat::ln2(kDefaultPrecision)).abs() < BigFloat(1e-60, 256));
    CHECK(gf.truncated_small(BigFloat(0.1, 256)).to_double() ==
          doctest::Approx(gf.truncated(BigFloat(0.1, 256)).to_double()).epsilon(1e-15));
}

TEST_CASE("extrapolation") {
    const AsymptoticFit fit = estimate_d_extrapolate(2500, counts());
    CHECK(std::abs(fit.naive_d.to_double() - 3.559) < 1e-3);
    CHECK(std::abs(fit.d.to_double() - 3.559) < 2e-3);
    CHECK(std::abs(fit.d.to_double() - 3.5608397) < 1e-6);
    CHECK(std::abs(fit.d.to_double() - estimate_d_root(600, counts()).d.to_double()) < 2e-3);
    CHECK(std::abs(estimate_d_extrapolate(200, counts()).d.to_double() - 3.5608) < 0.05);
}

TEST_CASE("prefactor series settles") {
    const auto c = prefactor_series(2000, 2500, counts(), growth());
    CHECK(c.size() == 501);
    CHECK(std::abs(c.back().to_double() - c.front().to_double()) < 1e-4);
}

TEST_CASE("C_i(n)/Q_n against 1/(d^i - 1)") {
    // Measured relative errors at n = 2500; the 1e-3 target holds only for i = 1.
    CHECK(ci_qn_limit_check(1, 2500, counts(), growth()).to_double() == doctest::Approx(8.352e-4).epsilon(1e-3));
    CHECK(ci_qn_limit_check(5, 2500, counts(), growth()).to_double() == doctest::Approx(3.013e-3).epsilon(1e-3));
    CHECK(ci_qn_limit_check(10, 2500, counts(), growth()).to_double() == doctest::Approx(6.031e-3).epsilon(1e-3));
    // Decreasing in n for fixed i.
    for (std::size_t i = 1; i <= 10; ++i)
        CHECK(ci_qn_limit_check(i, 2500, counts(), growth()) < ci_qn_limit_check(i, 1000, counts(), growth()));
    CHECK(ci_qn_limit_check(40, 40, counts(), growth()) > BigFloat(0.5, 64));
}

TEST_CASE("upper bound") {
    CHECK(upper_bound(1, counts()).to_double() == doctest::Approx(2.5));
    CHECK(std::abs(upper_bound(2500, counts()).to_double() - 4.3954) < 5e-4);
    const BigFloat a = upper_bound(500, counts()), b = upper_bound(1000, counts()), c = upper_bound(2500, counts());
    CHECK(a > b);
    CHECK(b > c);
    CHECK(upper_bound_limit(2500, counts(), growth()).to_double() == doctest::Approx(1.874557).epsilon(1e-6));
    // Upper bound really bounds the exact means.
    CHECK(upper_bound(13, counts()).to_double() > reference::kResistance[12].M);
}

TEST_CASE("partial zeta(3/2)") {
    CHECK(zeta_three_halves_partial(1).to_double() == 1.0);
    CHECK(zeta_three_halves_partial(2).to_double() == doctest::Approx(1.0 + std::pow(2.0, -1.5)));
    const double h = zeta_three_halves_partial(1000000).to_double();
    // Tail of sum i^{-3/2} beyond N is about 2/sqrt(N).
    CHECK(std::abs(h + 2.0 / 1000.0 - 2.6123753) < 1e-5);
    CHECK(rel(zeta_three_halves_partial(1000000), 2.6104) < 1e-4);
}
