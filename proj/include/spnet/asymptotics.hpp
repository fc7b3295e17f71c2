#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spnet/counting.hpp"
#include "spnet/numerics/big_float.hpp"
#include "spnet/numerics/power_series.hpp"

namespace spnet {

/// Published 16-digit growth constant of Q_n.
inline constexpr const char* kGrowthConstant = "3.5608393095389433";

enum class FitMethod { root, extrapolation };

/// Q_n ~ c d^n n^{-3/2}
struct AsymptoticFit {
    FitMethod method = FitMethod::root;
    std::size_t order = 0;
    BigFloat d;
    BigFloat c;
    /// root: |d(order) - d(order/2)|. extrapolation: |Richardson - corrected ratio|.
    BigFloat residual;
    /// root: reciprocal root of the plain truncated polynomial sum Q_k x^k = 2.
    /// extrapolation: the uncorrected ratio Q_{N}/Q_{N-1}.
    BigFloat naive_d;
};

/// Right-hand side of exp(sum_n (Q(x^n) + x^n - 1) / 2n), truncated at order N.
PowerSeries gf_log_form(const CountTable& counts, std::size_t order);

/// prod_n (1 - x^n)^{-q_n}, truncated at order N.
PowerSeries gf_product_form(const CountTable& counts, std::size_t order);

/// Both right-hand sides reproduce Q_0..Q_N exactly.
bool verify_gf_identities(std::size_t order, const CountTable& counts);

/// Floating evaluation of the truncated generating function sum_{k<=order} Q_k x^k.
class GeneratingFunction {
public:
    GeneratingFunction(const CountTable& counts, std::size_t order, mpfr_prec_t precision);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    mpfr_prec_t precision() const noexcept { return precision_; }

    /// Horner evaluation of all order+1 terms.
    BigFloat truncated(const BigFloat& x) const;
    /// Same sum, stopping once terms drop below the working precision.
    /// Only valid where the terms decrease, i.e. x d < 1.
    BigFloat truncated_small(const BigFloat& x) const;
    /// (1 + x)/2 + sum_{j>=2} (Q(x^j) + x^j - 1)/(2j)
    BigFloat root_function(const BigFloat& x) const;

private:
    std::vector<BigFloat> coeffs_;
    mpfr_prec_t precision_;
};

/// F(x) = (1 + x)/2 + sum_{j>=2} (Q(x^j) + x^j - 1)/(2j), using Q truncated at `order`.
/// Q(x) = 2 exactly where F(x) = ln 2.
BigFloat gf_root_function(const BigFloat& x, const CountTable& counts, std::size_t order);

/// Sum_{k<=order} Q_k x^k.
BigFloat truncated_gf(const BigFloat& x, const CountTable& counts, std::size_t order);

/// d as the reciprocal root of Q(x) = 2 on (0, 1/3). Requires order >= 100.
AsymptoticFit estimate_d_root(std::size_t order, const CountTable& counts,
                              mpfr_prec_t precision = kDefaultPrecision);

/// d from the ratio Q_{n+1}/Q_n ((n+1)/n)^{3/2} with one Richardson step in 1/n,
/// c = Q_N d^{-N} N^{3/2}.
AsymptoticFit estimate_d_extrapolate(std::size_t max_n, const CountTable& counts,
                                     mpfr_prec_t precision = kDefaultPrecision);

/// c = Q_n d^{-n} n^{3/2} for each n in [from, to].
std::vector<BigFloat> prefactor_series(std::size_t from, std::size_t to, const CountTable& counts,
                                       const BigFloat& d);

/// |C_i(n)/Q_n - 1/(d^i - 1)| / (1/(d^i - 1))
BigFloat ci_qn_limit_check(std::size_t i, std::size_t n, const CountTable& counts, const BigFloat& d);

/// (5/2) sum_{i=1}^n q_i C_i(n) / Q_n
BigFloat upper_bound(std::size_t n, const CountTable& counts, mpfr_prec_t precision = kDefaultPrecision);

/// (5/2) sum_{i=1}^n q_i / (d^i - 1), the large-n form of upper_bound truncated at n terms.
BigFloat upper_bound_limit(std::size_t terms, const CountTable& counts, const BigFloat& d);

/// H_{n,3/2} = sum_{i=1}^n i^{-3/2}
BigFloat zeta_three_halves_partial(std::size_t n, mpfr_prec_t precision = 64);

} // namespace spnet
