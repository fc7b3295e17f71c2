#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spnet/circuit.hpp"
#include "spnet/numerics/rational.hpp"

namespace spnet {

inline constexpr unsigned kBiscuitBudget = 24;

/// A circuit built from the unit by n-1 steps, each attaching one resistor in
/// series or in parallel. The step sequence identifies the biscuit.
struct Biscuit {
    unsigned n = 1;
    /// Bit (n-2-k) holds step k: 0 = series, 1 = parallel. Earlier steps are
    /// more significant, so numeric order is construction order.
    std::uint32_t word = 0;
    Rational resistance{1};

    CircuitKind kind() const;
};

/// a/b -> (a+b)/b
Rational phi_series(const Rational& r);
/// a/b -> a/(a+b)
Rational phi_parallel(const Rational& r);

/// All 2^(n-1) n-biscuits, ordered by construction word.
std::vector<Biscuit> enumerate_biscuits(unsigned n, unsigned budget = kBiscuitBudget);

struct BiscuitClosedForms {
    unsigned n = 1;
    Rational mean;                            // 3/2 - 2^-n
    Rational total;                           // (3/4) 2^n - 1/2 for n > 1
    std::optional<Rational> series_mean;      // 5/2 - 2^(1-n), n > 1
    std::optional<Rational> parallel_mean;    // 1/2, n > 1
    std::optional<Rational> series_total;     // (5/8) 2^n - 1/2, n > 1
    std::optional<Rational> parallel_total;   // (1/8) 2^n, n > 1
};

BiscuitClosedForms biscuit_closed_forms(unsigned n);

/// Totals and means measured directly over enumerate_biscuits(n), in the
/// same shape as the closed forms. The unit is counted once.
BiscuitClosedForms biscuit_measured(std::span<const Biscuit> biscuits);

/// Averaged harmonic combination <= harmonic combination of the averages:
///   (1/mn) sum_ij 1/(1/a_i + 1/b_j) <= 1/(1/mean(a) + 1/mean(b)).
/// Both sequences must be nonempty and positive.
bool harmonic_combination_inequality(std::span<const Rational> a, std::span<const Rational> b);

} // namespace spnet
