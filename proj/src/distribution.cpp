#include "spnet/distribution.hpp"

#include <cmath>
#include <string>

#include "spnet/errors.hpp"

namespace spnet {

BigInt ResistanceDistribution::count() const {
    BigInt sum = 0;
    for (const auto& [r, m] : entries) sum += m;
    return sum;
}

Rational ResistanceDistribution::total() const {
    mpq_class sum = 0;
    for (const auto& [r, m] : entries) sum += r.raw() * m;
    return Rational(sum);
}

const DistributionPair& DistributionSet::at(unsigned n) const {
    if (n == 0 || n > by_n_.size())
        throw TableUnderflow("distribution for n=" + std::to_string(n) + " not computed");
    return by_n_[n - 1];
}

namespace {

using Level = std::map<Rational, BigInt>;

ResistanceDistribution reciprocal_of(const ResistanceDistribution& series) {
    ResistanceDistribution out;
    out.n = series.n;
    out.kind = ConnectionKind::parallel;
    for (const auto& [r, m] : series.entries) out.entries.emplace(r.reciprocal(), m);
    return out;
}

} // namespace

DistributionSet distributions(unsigned max_n, const CountTable& counts, unsigned budget) {
    if (max_n == 0) throw PreconditionError("distributions: max_n must be positive");
    if (max_n > budget) throw BudgetExceeded("distributions (exact)", max_n, budget);
    if (max_n > counts.max_n()) throw TableUnderflow("distributions: count table too short");

    // partial[t]: multisets of already-classified parallel atoms with total size t.
    std::vector<Level> partial(max_n + 1);
    partial[0].emplace(Rational(0), BigInt(1));

    std::vector<DistributionPair> out;
    out.reserve(max_n);
    for (unsigned n = 1; n <= max_n; ++n) {
        ResistanceDistribution series;
        series.n = n;
        series.kind = ConnectionKind::series;
        if (n == 1)
            series.entries.emplace(Rational(1), BigInt(1));
        else
            series.entries = partial[n]; // every atom so far has size < n, so >= 2 children

        if (series.count() != counts.q(n))
            throw InternalConsistencyError("distributions: series count at n=" + std::to_string(n) +
                                           " disagrees with q_n");
        ResistanceDistribution parallel = reciprocal_of(series);

        // Parallel n-circuits become atoms (the unit at n = 1).
        const Level& classes = parallel.entries;
        for (const auto& [r, q] : classes) {
            for (unsigned total = max_n; total >= n; --total) {
                for (unsigned m = 1; m * n <= total; ++m) {
                    const Level& src = partial[total - m * n];
                    if (src.empty()) continue;
                    BigInt weight = multichoose(q, m);
                    Rational shift = r * Rational(static_cast<long>(m));
                    Level& dst = partial[total];
                    for (const auto& [key, mult] : src) dst[key + shift] += mult * weight;
                }
            }
        }
        out.push_back({std::move(series), std::move(parallel)});
    }
    return DistributionSet(std::move(out));
}

SummaryRow summary(unsigned n, const DistributionSet& dists, const CountTable& counts) {
    const DistributionPair& pair = dists.at(n);
    SummaryRow row;
    row.n = n;
    row.Q = counts.Q(n);
    row.R_series = pair.series.total();
    row.R_parallel = pair.parallel.total();
    // The unit is both kinds but one circuit.
    row.R = n == 1 ? row.R_series : row.R_series + row.R_parallel;

    Rational q_kind(counts.q(n));
    row.M = row.R / Rational(row.Q);
    row.M_series = row.R_series / q_kind;
    row.M_parallel = row.R_parallel / q_kind;

    Rational via_c;
    for (unsigned i = 1; i <= n; ++i) {
        BigInt c = counts.has_c_table() && n <= counts.c_max_n() ? counts.C(i, n) : c_closed(i, n, counts);
        via_c += dists.at(i).parallel.total() * Rational(c);
    }
    if (via_c != row.R)
        throw InternalConsistencyError("summary: sum of Rp_i C_i(n) disagrees with R_n at n=" + std::to_string(n));

    // Reciprocal sum over all circuits equals R_n by the series/parallel pairing,
    // but compute it from the entries directly.
    mpq_class inverse_sum = 0;
    for (const auto& [r, m] : pair.series.entries) inverse_sum += r.reciprocal().raw() * m;
    if (n > 1)
        for (const auto& [r, m] : pair.parallel.entries) inverse_sum += r.reciprocal().raw() * m;
    row.harmonic_mean = Rational(row.Q) / Rational(inverse_sum);
    row.geometric_product_is_one = geometric_mean_check(n, dists);
    return row;
}

namespace {

// Adds `sign * mult` to the exponent of each prime factor of `value`.
void accumulate_factors(BigInt value, const BigInt& mult, int sign, std::map<BigInt, BigInt>& exponents) {
    auto bump = [&](const BigInt& p) {
        if (sign > 0)
            exponents[p] += mult;
        else
            exponents[p] -= mult;
    };
    for (unsigned long p = 2; value > 1; ++p) {
        if (BigInt(p) * p > value) {
            bump(value);
            break;
        }
        while (mpz_divisible_ui_p(value.get_mpz_t(), p)) {
            mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), p);
            bump(BigInt(p));
        }
    }
}

} // namespace

bool geometric_mean_check(unsigned n, const DistributionSet& dists) {
    const DistributionPair& pair = dists.at(n);
    std::map<BigInt, BigInt> exponents;
    auto add_side = [&](const ResistanceDistribution& d) {
        for (const auto& [r, m] : d.entries) {
            accumulate_factors(r.numerator(), m, +1, exponents);
            accumulate_factors(r.denominator(), m, -1, exponents);
        }
    };
    add_side(pair.series);
    if (n > 1) add_side(pair.parallel);
    for (const auto& [p, e] : exponents)
        if (e != 0) return false;

    Rational total = n == 1 ? pair.series.total() : pair.series.total() + pair.parallel.total();
    BigInt q = n == 1 ? BigInt(1) : pair.series.count() + pair.parallel.count();
    return total >= Rational(q);
}

double mean_k(unsigned n, double k, const DistributionSet& dists) {
    if (k == 0.0) throw PreconditionError("mean_k: k must be nonzero");
    const DistributionPair& pair = dists.at(n);
    double sum = 0.0;
    double count = 0.0;
    auto add_side = [&](const ResistanceDistribution& d) {
        for (const auto& [r, m] : d.entries) {
            double w = m.get_d();
            sum += w * std::pow(r.to_double(), 1.0 / k);
            count += w;
        }
    };
    add_side(pair.series);
    if (n > 1) add_side(pair.parallel);
    return sum / count;
}

} // namespace spnet
