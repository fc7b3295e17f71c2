#include "spnet/numerics/power_series.hpp"

#include <algorithm>

#include "spnet/errors.hpp"

namespace spnet {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("PowerSeries: needs at least one coefficient");
}

PowerSeries PowerSeries::from_integers(std::span<const BigInt> coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::monomial(std::size_t order, std::size_t power, const Rational& c) {
    PowerSeries out(order);
    if (power <= order) out.coeffs_[power] = c;
    return out;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    PowerSeries out(order);
    std::copy_n(coeffs_.begin(), std::min(order, this->order()) + 1, out.coeffs_.begin());
    return out;
}

PowerSeries PowerSeries::substitute_power(std::size_t k) const {
    if (k == 0) throw PreconditionError("substitute_power: k must be positive");
    PowerSeries out(order());
    for (std::size_t i = 0; i * k <= order(); ++i) out.coeffs_[i * k] = coeffs_[i];
    return out;
}

PowerSeries PowerSeries::derivative_times_x() const {
    PowerSeries out(order());
    for (std::size_t k = 1; k <= order(); ++k) out.coeffs_[k] = coeffs_[k] * Rational(static_cast<long>(k));
    return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries out(n);
    for (std::size_t k = 0; k <= n; ++k) {
        mpq_class acc = 0;
        for (std::size_t i = 0; i <= k; ++i) acc += a.coeffs_[i].raw() * b.coeffs_[k - i].raw();
        out.coeffs_[k] = Rational(acc);
    }
    return out;
}

PowerSeries series_exp(const PowerSeries& s) {
    if (!s[0].is_zero()) throw PreconditionError("series_exp: constant term must be zero");
    std::size_t n = s.order();
    std::vector<mpq_class> g(n + 1);
    g[0] = 1;
    // g' = s' g  =>  k g_k = sum_{j=1..k} j s_j g_{k-j}
    for (std::size_t k = 1; k <= n; ++k) {
        mpq_class acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += s[j].raw() * g[k - j] * static_cast<unsigned long>(j);
        acc /= static_cast<unsigned long>(k);
        acc.canonicalize();
        g[k] = acc;
    }
    std::vector<Rational> out;
    out.reserve(n + 1);
    for (auto& v : g) out.emplace_back(v);
    return PowerSeries(std::move(out));
}

PowerSeries series_log(const PowerSeries& s) {
    if (s[0] != Rational(1)) throw PreconditionError("series_log: constant term must be one");
    std::size_t n = s.order();
    std::vector<mpq_class> f(n + 1);
    // s f' = s'  =>  k f_k = k s_k - sum_{j=1..k-1} j f_j s_{k-j}
    for (std::size_t k = 1; k <= n; ++k) {
        mpq_class acc = s[k].raw() * static_cast<unsigned long>(k);
        for (std::size_t j = 1; j < k; ++j) acc -= f[j] * s[k - j].raw() * static_cast<unsigned long>(j);
        acc /= static_cast<unsigned long>(k);
        acc.canonicalize();
        f[k] = acc;
    }
    std::vector<Rational> out;
    out.reserve(n + 1);
    for (auto& v : f) out.emplace_back(v);
    return PowerSeries(std::move(out));
}

PowerSeries euler_product(std::span<const BigInt> exponents) {
    std::size_t n = exponents.size();
    std::vector<BigInt> b(n + 1, 0);
    for (std::size_t d = 1; d <= n; ++d) {
        BigInt term = exponents[d - 1] * static_cast<unsigned long>(d);
        for (std::size_t k = d; k <= n; k += d) b[k] += term;
    }
    std::vector<BigInt> a(n + 1, 0);
    a[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        BigInt acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += b[j] * a[k - j];
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), k))
            throw InternalConsistencyError("euler_product: non-integral coefficient");
        mpz_divexact_ui(a[k].get_mpz_t(), acc.get_mpz_t(), k);
    }
    return PowerSeries::from_integers(a);
}

} // namespace spnet
