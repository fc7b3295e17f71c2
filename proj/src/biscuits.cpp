#include "spnet/biscuits.hpp"

#include "spnet/errors.hpp"

namespace spnet {

CircuitKind Biscuit::kind() const {
    if (n == 1) return CircuitKind::unit;
    return (word & 1u) ? CircuitKind::parallel : CircuitKind::series;
}

Rational phi_series(const Rational& r) {
    if (r.sign() <= 0) throw PreconditionError("phi_series: resistance must be positive");
    return Rational(r.numerator() + r.denominator(), r.denominator());
}

Rational phi_parallel(const Rational& r) {
    if (r.sign() <= 0) throw PreconditionError("phi_parallel: resistance must be positive");
    return Rational(r.numerator(), r.numerator() + r.denominator());
}

std::vector<Biscuit> enumerate_biscuits(unsigned n, unsigned budget) {
    if (n == 0) throw PreconditionError("enumerate_biscuits: n must be positive");
    if (n > budget) throw BudgetExceeded("enumerate_biscuits", n, budget);
    std::vector<Biscuit> level{Biscuit{}};
    for (unsigned size = 2; size <= n; ++size) {
        std::vector<Biscuit> next;
        next.reserve(level.size() * 2);
        for (const Biscuit& b : level) {
            next.push_back({size, b.word << 1, phi_series(b.resistance)});
            next.push_back({size, (b.word << 1) | 1u, phi_parallel(b.resistance)});
        }
        level = std::move(next);
    }
    return level;
}

BiscuitClosedForms biscuit_closed_forms(unsigned n) {
    if (n == 0) throw PreconditionError("biscuit_closed_forms: n must be positive");
    BiscuitClosedForms f;
    f.n = n;
    const Rational two_n = Rational(2).pow(static_cast<long>(n));
    f.mean = Rational(BigInt(3), BigInt(2)) - two_n.reciprocal();
    if (n == 1) {
        f.total = 1;
        return f;
    }
    f.total = Rational(BigInt(3), BigInt(4)) * two_n - Rational(BigInt(1), BigInt(2));
    f.series_mean = Rational(BigInt(5), BigInt(2)) - Rational(2) / two_n;
    f.parallel_mean = Rational(BigInt(1), BigInt(2));
    f.series_total = Rational(BigInt(5), BigInt(8)) * two_n - Rational(BigInt(1), BigInt(2));
    f.parallel_total = two_n / Rational(8);
    return f;
}

BiscuitClosedForms biscuit_measured(std::span<const Biscuit> biscuits) {
    if (biscuits.empty()) throw PreconditionError("biscuit_measured: no biscuits");
    BiscuitClosedForms f;
    f.n = biscuits.front().n;
    mpq_class series = 0, parallel = 0;
    long series_count = 0, parallel_count = 0;
    for (const Biscuit& b : biscuits) {
        if (b.kind() == CircuitKind::parallel) {
            parallel += b.resistance.raw();
            ++parallel_count;
        } else {
            series += b.resistance.raw();
            ++series_count;
        }
    }
    f.total = Rational(mpq_class(series + parallel));
    f.mean = f.total / Rational(static_cast<long>(biscuits.size()));
    if (f.n > 1) {
        f.series_total = Rational(series);
        f.parallel_total = Rational(parallel);
        f.series_mean = *f.series_total / Rational(series_count);
        f.parallel_mean = *f.parallel_total / Rational(parallel_count);
    }
    return f;
}

bool harmonic_combination_inequality(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.empty() || b.empty()) throw PreconditionError("harmonic_combination_inequality: empty sequence");
    mpq_class lhs = 0, mean_a = 0, mean_b = 0;
    for (const Rational& x : a) {
        if (x.sign() <= 0) throw PreconditionError("harmonic_combination_inequality: nonpositive term");
        mean_a += x.raw();
        for (const Rational& y : b) lhs += 1 / (1 / x.raw() + 1 / y.raw());
    }
    for (const Rational& y : b) {
        if (y.sign() <= 0) throw PreconditionError("harmonic_combination_inequality: nonpositive term");
        mean_b += y.raw();
    }
    const auto m = static_cast<unsigned long>(a.size());
    const auto k = static_cast<unsigned long>(b.size());
    lhs /= m * k;
    mean_a /= m;
    mean_b /= k;
    mpq_class rhs = 1 / (1 / mean_a + 1 / mean_b);
    return lhs <= rhs;
}

} // namespace spnet
