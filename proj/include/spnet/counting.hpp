#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spnet/numerics/rational.hpp"

namespace spnet {

/// A partition of n, parts stored non-increasing.
class Partition {
public:
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned total() const noexcept { return total_; }
    std::size_t size() const noexcept { return parts_.size(); }

    /// Distinct part sizes, descending.
    std::vector<unsigned> support() const;
    /// Number of times `part` occurs.
    unsigned multiplicity(unsigned part) const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<unsigned> parts_;
    unsigned total_ = 0;
};

/// All partitions of n in reverse-lexicographic order ({n} first, {1,...,1} last).
std::vector<Partition> partitions(unsigned n);

/// Number of series circuits whose parallel sub-circuit sizes are exactly `p`
/// (for p = {n}, the q_n parallel n-circuits themselves).
///
/// `q[i]` is the number of parallel i-circuits; q[0] is ignored.
BigInt count_by_partition(const Partition& p, std::span<const BigInt> q);

/// Q_n, q_n and optionally the C_i(n) triangle, built once up to max_n.
///
/// C_i(n) is stored only for 1 <= i <= n <= max_n; asking for i > n is a
/// TableUnderflow, not zero.
class CountTable {
public:
    CountTable() = default;
    CountTable(std::vector<BigInt> total, std::vector<BigInt> per_kind);

    std::size_t max_n() const noexcept { return total_.empty() ? 0 : total_.size() - 1; }

    const BigInt& Q(std::size_t n) const;
    const BigInt& q(std::size_t n) const;
    const BigInt& C(std::size_t i, std::size_t n) const;

    std::span<const BigInt> Q_values() const noexcept { return total_; }
    std::span<const BigInt> q_values() const noexcept { return per_kind_; }

    bool has_c_table() const noexcept { return c_max_n_ > 0; }
    std::size_t c_max_n() const noexcept { return c_max_n_; }

    /// Returns a copy with C_i(n) filled for n <= max_n.
    CountTable with_c_table(std::size_t max_n) const;

private:
    friend CountTable c_table(std::size_t max_n, const CountTable& counts);

    std::vector<BigInt> total_;
    std::vector<BigInt> per_kind_;
    // c_[i][n - i] = C_i(n)
    std::vector<std::vector<BigInt>> c_;
    std::size_t c_max_n_ = 0;
};

/// Q_0..Q_N from the O(N^2) recursion
///   n Q_n = -[n=1] + 2 sum_{i<n} Q_i + sum_{i=2}^{n-1} i Q_i sum_{j=1}^{n/i} Q_{n-ij}.
/// Throws InternalConsistencyError if a division by n is ever inexact.
CountTable q_recursive(std::size_t max_n);

/// Q_n via the partition formula, using q_i for i < n from the same pass.
std::vector<BigInt> q_by_partitions(std::size_t max_n);

/// Fill C_i(n) via C_i(n) = C_i(n-i) + Q_{n-i}.
CountTable c_table(std::size_t max_n, const CountTable& counts);

/// C_i(n) = sum_{k=1}^{n/i} Q_{n-ki}, straight from Q.
BigInt c_closed(std::size_t i, std::size_t n, const CountTable& counts);

unsigned divisor_count(unsigned n);

/// n Q_n == 2 C_1(n) - [n=1] + sum_{i=2}^{n-1} i Q_i C_i(n)
bool check_double_count(std::size_t n, const CountTable& counts);

/// sum_i C_i(n) == sum_i d(i) Q_{n-i}
bool check_divisor_identity(std::size_t n, const CountTable& counts);

/// sum_{k=1}^{i} C_i(n+k) == sum_{k=0}^{n} Q_k
bool check_window_identity(std::size_t i, std::size_t n, const CountTable& counts);

} // namespace spnet
