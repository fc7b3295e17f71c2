#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "spnet/counting.hpp"
#include "spnet/numerics/rational.hpp"

namespace spnet {

enum class ConnectionKind { series, parallel };

/// Default exact-mode ceiling; n = 14 works but is opt-in.
inline constexpr unsigned kExactDistributionBudget = 13;

/// Resistance -> number of distinct n-circuits of one kind with that resistance.
struct ResistanceDistribution {
    unsigned n = 0;
    ConnectionKind kind = ConnectionKind::series;
    std::map<Rational, BigInt> entries;

    BigInt count() const;
    /// sum of resistance * multiplicity
    Rational total() const;
    Rational min_key() const { return entries.begin()->first; }
    Rational max_key() const { return entries.rbegin()->first; }
};

struct DistributionPair {
    ResistanceDistribution series;
    ResistanceDistribution parallel;
};

/// Series/parallel distributions for every n in 1..max_n.
class DistributionSet {
public:
    explicit DistributionSet(std::vector<DistributionPair> by_n) : by_n_(std::move(by_n)) {}

    unsigned max_n() const noexcept { return static_cast<unsigned>(by_n_.size()); }
    const DistributionPair& at(unsigned n) const;

private:
    std::vector<DistributionPair> by_n_; // index n - 1
};

/// Multiset-convolution DP over (size, resistance) atom classes.
///
/// The series distribution of n collects every multiset of parallel circuits
/// of sizes < n whose sizes sum to n; a class of q distinct parallel
/// i-circuits sharing resistance r contributes multichoose(q, m) ways and
/// resistance m r when m of its members are picked. The parallel
/// distribution is the reciprocal map. Throws BudgetExceeded past `budget`
/// and InternalConsistencyError when a count disagrees with q_n.
DistributionSet distributions(unsigned max_n, const CountTable& counts,
                              unsigned budget = kExactDistributionBudget);

struct SummaryRow {
    unsigned n = 0;
    BigInt Q;
    Rational R, R_series, R_parallel;
    Rational M, M_series, M_parallel;
    /// Product of all resistances (with multiplicity) is exactly 1.
    bool geometric_product_is_one = false;
    /// Q_n / sum(1/r)
    Rational harmonic_mean;
};

/// Totals and means for n. Recomputes R_n as sum_i Rp_i C_i(n) and throws
/// InternalConsistencyError if it disagrees with the DP total.
SummaryRow summary(unsigned n, const DistributionSet& dists, const CountTable& counts);

/// Exact check that prod r^mult over all n-circuits is 1 and M_n >= 1.
bool geometric_mean_check(unsigned n, const DistributionSet& dists);

/// (1/Q_n) sum mult * r^(1/k) over all n-circuits; k != 0.
double mean_k(unsigned n, double k, const DistributionSet& dists);

} // namespace spnet
