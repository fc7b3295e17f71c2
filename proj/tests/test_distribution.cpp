#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "reference_tables.hpp"
#include "spnet/circuit.hpp"
#include "spnet/distribution.hpp"
#include "spnet/errors.hpp"
#include "spnet/float_distribution.hpp"

using namespace spnet;

namespace {

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

const CountTable& counts() {
    static const CountTable t = q_recursive(21).with_c_table(21);
    return t;
}

const DistributionSet& exact() {
    static const DistributionSet d = distributions(13, counts());
    return d;
}

std::map<Rational, BigInt> brute(const std::vector<Circuit>& circuits) {
    std::map<Rational, BigInt> out;
    for (const Circuit& c : circuits) out[resistance(c)] += 1;
    return out;
}

} // namespace

TEST_CASE("small distributions by hand") {
    const auto& three = exact().at(3);
    CHECK(three.series.entries == std::map<Rational, BigInt>{{3, 1}, {frac(3, 2), 1}});
    CHECK(three.parallel.entries == std::map<Rational, BigInt>{{frac(1, 3), 1}, {frac(2, 3), 1}});
    CHECK(exact().at(4).series.total() == frac(21, 2));
    CHECK(exact().at(4).parallel.total() == Rational(3));
    CHECK(exact().at(1).series.entries == std::map<Rational, BigInt>{{1, 1}});
    CHECK_THROWS_AS(exact().at(14), TableUnderflow);
}

TEST_CASE("oracle: DP equals brute-force enumeration for n <= 10") {
    for (unsigned n = 1; n <= 10; ++n) {
        CHECK(exact().at(n).series.entries == brute(enumerate_series(n)));
        CHECK(exact().at(n).parallel.entries == brute(enumerate_parallel(n)));
    }
}

TEST_CASE("reciprocity and counts") {
    for (unsigned n = 1; n <= 13; ++n) {
        const auto& pair = exact().at(n);
        std::map<Rational, BigInt> flipped;
        for (const auto& [r, m] : pair.series.entries) flipped[r.reciprocal()] = m;
        CHECK(flipped == pair.parallel.entries);
        CHECK(pair.series.count() == counts().q(n));
    }
}

TEST_CASE("budget") {
    CHECK_THROWS_AS(distributions(14, counts()), BudgetExceeded);
    CHECK_THROWS_AS(float_distributions(22), BudgetExceeded);
}

TEST_CASE("summary rows") {
    const SummaryRow two = summary(2, exact(), counts());
    CHECK(two.M == frac(5, 4));
    const SummaryRow three = summary(3, exact(), counts());
    CHECK(three.R == frac(11, 2));
    CHECK(three.M == frac(11, 8));
    const SummaryRow four = summary(4, exact(), counts());
    CHECK(four.R == frac(27, 2));
    CHECK(four.R_series == frac(21, 2));
    CHECK(four.R_parallel == Rational(3));
    CHECK(std::abs(summary(13, exact(), counts()).M.to_double() - 1.272) < 5e-4);

    for (unsigned n = 1; n <= 13; ++n) {
        const SummaryRow row = summary(n, exact(), counts());
        const auto& ref = reference::kResistance[n - 1];
        CHECK(row.Q == ref.Q);
        CHECK(std::abs(row.M.to_double() - ref.M) < 5e-4);
        CHECK(row.M == row.R / Rational(row.Q));
        if (n > 1) CHECK(row.R == row.R_series + row.R_parallel);
        CHECK(row.harmonic_mean == row.M.reciprocal());
        CHECK(row.M >= Rational(1));
        CHECK(row.geometric_product_is_one);
        if (n >= 2) CHECK(row.R_parallel <= row.R_series);
    }
}

TEST_CASE("parallel mean bounds") {
    // Equality at the low end for n = 2 and 3; strict from n = 4.
    CHECK(summary(2, exact(), counts()).M_parallel == frac(1, 2));
    CHECK(summary(3, exact(), counts()).M_parallel == frac(1, 2));
    for (unsigned n = 4; n <= 13; ++n) {
        const SummaryRow row = summary(n, exact(), counts());
        CHECK(row.M_parallel > frac(1, 2));
        CHECK(row.M_parallel < frac(5, 2));
    }
}

TEST_CASE("geometric mean") {
    CHECK(geometric_mean_check(1, exact()));
    CHECK(geometric_mean_check(5, exact()));
    CHECK(summary(5, exact(), counts()).M > Rational(1));
    for (unsigned n = 1; n <= 12; ++n) CHECK(geometric_mean_check(n, exact()));
}

TEST_CASE("mean_k") {
    CHECK(mean_k(2, 1.0, exact()) == doctest::Approx(1.25));
    for (double k : {-2.0, 0.5, 3.0}) CHECK(mean_k(1, k, exact()) == doctest::Approx(1.0));
    for (unsigned n = 1; n <= 13; ++n)
        CHECK(mean_k(n, 1.0, exact()) == doctest::Approx(summary(n, exact(), counts()).M.to_double()).epsilon(1e-12));
    // r and 1/r occur equally often, so k and -k agree.
    for (unsigned n = 2; n <= 10; ++n) CHECK(mean_k(n, 2.0, exact()) == doctest::Approx(mean_k(n, -2.0, exact())));
    CHECK_THROWS_AS(mean_k(3, 0.0, exact()), PreconditionError);
}

TEST_CASE("float mode agrees with exact mode") {
    const auto levels = float_distributions(13);
    REQUIRE(levels.size() == 13);
    for (unsigned n = 1; n <= 13; ++n) {
        const SummaryRow row = summary(n, exact(), counts());
        const FloatLevel& level = levels[n - 1];
        CHECK(level.Q() == static_cast<std::uint64_t>(row.Q.get_ui()));
        const double rel = std::abs(static_cast<double>(level.R()) - row.R.to_double()) / row.R.to_double();
        CHECK(rel < 1e-9);
    }
}

TEST_CASE("float mode to n = 18") {
    const auto levels = float_distributions(18);
    for (const FloatLevel& level : levels) CHECK(level.Q() == static_cast<std::uint64_t>(reference::kResistance[level.n - 1].Q));
    CHECK(std::abs(static_cast<double>(levels.back().M()) - 1.263) < 1e-3);
}
