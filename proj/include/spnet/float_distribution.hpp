#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace spnet {

inline constexpr unsigned kFloatDistributionBudget = 21;
/// Keys are grouped by round(r * 2^48).
inline constexpr int kFloatKeyFractionBits = 48;

/// Approximate counterpart of one exact level. Multiplicities are exact
/// integers; resistances are doubles, so equal values computed along
/// different summation orders may land in separate entries.
struct FloatLevel {
    unsigned n = 0;
    std::uint64_t q = 0;          // series (= parallel) circuit count
    long double R_series = 0;     // sum of r over series circuits
    long double R_parallel = 0;   // sum of r over parallel circuits
    std::size_t distinct_keys = 0; // 0 for the streamed top level
    /// Series distribution (value, multiplicity). Empty for the top level,
    /// whose totals are accumulated without materializing its entries.
    std::vector<std::pair<double, std::uint64_t>> series_entries;

    std::uint64_t Q() const { return n == 1 ? 1 : 2 * q; }
    long double R() const { return n == 1 ? R_series : R_series + R_parallel; }
    long double M() const { return R() / static_cast<long double>(Q()); }
};

/// Same DP as distributions() with double keys, for n up to 21.
std::vector<FloatLevel> float_distributions(unsigned max_n, unsigned budget = kFloatDistributionBudget);

} // namespace spnet
