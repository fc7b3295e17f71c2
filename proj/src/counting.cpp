#include "spnet/counting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "spnet/errors.hpp"

namespace spnet {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw PreconditionError("Partition: needs at least one part");
    if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
        throw PreconditionError("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::vector<unsigned> Partition::support() const {
    std::vector<unsigned> out;
    std::unique_copy(parts_.begin(), parts_.end(), std::back_inserter(out));
    return out;
}

unsigned Partition::multiplicity(unsigned part) const {
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<Partition> partitions(unsigned n) {
    if (n == 0) throw PreconditionError("partitions: n must be positive");
    std::vector<Partition> out;
    std::vector<unsigned> cur{n};
    for (;;) {
        out.emplace_back(cur);
        // Rightmost part greater than one.
        auto it = std::find_if(cur.rbegin(), cur.rend(), [](unsigned v) { return v > 1; });
        if (it == cur.rend()) break;
        std::size_t pos = static_cast<std::size_t>(cur.rend() - it) - 1;
        unsigned value = cur[pos] - 1;
        unsigned rest = static_cast<unsigned>(cur.size() - pos - 1) + 1;
        cur.resize(pos);
        cur.push_back(value);
        while (rest > 0) {
            unsigned take = std::min(rest, value);
            cur.push_back(take);
            rest -= take;
        }
    }
    return out;
}

namespace {

BigInt factorial(unsigned k) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

// Number of ways to pick a multiset of v items from q kinds, summed over the
// shape t of the multiplicities: C(q,|t|) |t|! / prod_j v_t(j)!.
BigInt shaped_multisets(unsigned v, const BigInt& q) {
    BigInt sum = 0;
    for (const Partition& t : partitions(v)) {
        unsigned distinct = static_cast<unsigned>(t.size());
        BigInt choose;
        mpz_bin_ui(choose.get_mpz_t(), q.get_mpz_t(), distinct);
        if (choose == 0) continue;
        BigInt arrangements = factorial(distinct);
        for (unsigned j : t.support()) arrangements /= factorial(t.multiplicity(j));
        sum += choose * arrangements;
    }
    return sum;
}

} // namespace

BigInt count_by_partition(const Partition& p, std::span<const BigInt> q) {
    BigInt product = 1;
    for (unsigned i : p.support()) {
        if (i >= q.size())
            throw TableUnderflow("count_by_partition: q_" + std::to_string(i) + " not supplied");
        product *= shaped_multisets(p.multiplicity(i), q[i]);
    }
    return product;
}

CountTable::CountTable(std::vector<BigInt> total, std::vector<BigInt> per_kind)
    : total_(std::move(total)), per_kind_(std::move(per_kind)) {
    if (total_.size() != per_kind_.size())
        throw PreconditionError("CountTable: Q and q tables differ in length");
}

const BigInt& CountTable::Q(std::size_t n) const {
    if (n >= total_.size()) throw TableUnderflow("Q_" + std::to_string(n) + " not in table");
    return total_[n];
}

const BigInt& CountTable::q(std::size_t n) const {
    if (n >= per_kind_.size()) throw TableUnderflow("q_" + std::to_string(n) + " not in table");
    return per_kind_[n];
}

const BigInt& CountTable::C(std::size_t i, std::size_t n) const {
    if (i == 0 || i > n) throw TableUnderflow("C_" + std::to_string(i) + "(" + std::to_string(n) + ") is undefined");
    if (n > c_max_n_) throw TableUnderflow("C table filled only to n=" + std::to_string(c_max_n_));
    return c_[i][n - i];
}

CountTable CountTable::with_c_table(std::size_t max_n) const { return c_table(max_n, *this); }

CountTable q_recursive(std::size_t max_n) {
    std::vector<BigInt> Q(max_n + 1);
    std::vector<BigInt> q(max_n + 1);
    std::vector<BigInt> weighted(max_n + 1); // i * Q_i
    Q[0] = q[0] = 1;
    BigInt prefix = 1; // sum_{i<n} Q_i
    BigInt inner, acc;
    for (std::size_t n = 1; n <= max_n; ++n) {
        acc = 2 * prefix;
        if (n == 1) acc -= 1;
        for (std::size_t i = 2; i < n; ++i) {
            inner = 0;
            for (std::size_t m = n - i;; m -= i) {
                inner += Q[m];
                if (m < i) break;
            }
            acc += weighted[i] * inner;
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), n))
            throw InternalConsistencyError("q_recursive: n Q_n not divisible by n at n=" + std::to_string(n));
        mpz_divexact_ui(Q[n].get_mpz_t(), acc.get_mpz_t(), n);
        weighted[n] = Q[n] * static_cast<unsigned long>(n);
        prefix += Q[n];
        if (n == 1) {
            q[n] = 1;
        } else {
            if (mpz_odd_p(Q[n].get_mpz_t()))
                throw InternalConsistencyError("q_recursive: Q_n odd at n=" + std::to_string(n));
            mpz_divexact_ui(q[n].get_mpz_t(), Q[n].get_mpz_t(), 2);
        }
    }
    return CountTable(std::move(Q), std::move(q));
}

std::vector<BigInt> q_by_partitions(std::size_t max_n) {
    std::vector<BigInt> Q(max_n + 1);
    std::vector<BigInt> q(max_n + 1);
    Q[0] = q[0] = 1;
    if (max_n >= 1) Q[1] = q[1] = 1;
    for (std::size_t n = 2; n <= max_n; ++n) {
        // Series n-circuits come from partitions with at least two parts.
        BigInt series = 0;
        for (const Partition& p : partitions(static_cast<unsigned>(n)))
            if (p.size() >= 2) series += count_by_partition(p, std::span<const BigInt>(q.data(), n));
        q[n] = series;
        Q[n] = 2 * series;
    }
    return Q;
}

CountTable c_table(std::size_t max_n, const CountTable& counts) {
    if (max_n > counts.max_n())
        throw TableUnderflow("c_table: Q filled only to n=" + std::to_string(counts.max_n()));
    CountTable out = counts;
    out.c_.assign(max_n + 1, {});
    for (std::size_t i = 1; i <= max_n; ++i) {
        auto& row = out.c_[i];
        row.resize(max_n - i + 1);
        for (std::size_t n = i; n <= max_n; ++n) {
            // C_i(m) is absent for m < i; it contributes nothing here.
            BigInt value = counts.Q(n - i);
            if (n - i >= i) value += row[n - 2 * i];
            row[n - i] = std::move(value);
        }
    }
    out.c_max_n_ = max_n;
    return out;
}

BigInt c_closed(std::size_t i, std::size_t n, const CountTable& counts) {
    if (i == 0 || i > n) throw PreconditionError("c_closed: need 1 <= i <= n");
    BigInt sum = 0;
    for (std::size_t k = 1; k * i <= n; ++k) sum += counts.Q(n - k * i);
    return sum;
}

unsigned divisor_count(unsigned n) {
    if (n == 0) throw PreconditionError("divisor_count: n must be positive");
    unsigned count = 0;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        count += (d * d == n) ? 1 : 2;
    }
    return count;
}

namespace {

BigInt c_value(std::size_t i, std::size_t n, const CountTable& counts) {
    if (counts.has_c_table() && n <= counts.c_max_n()) return counts.C(i, n);
    return c_closed(i, n, counts);
}

} // namespace

bool check_double_count(std::size_t n, const CountTable& counts) {
    if (n == 0) throw PreconditionError("check_double_count: n must be positive");
    BigInt lhs = counts.Q(n) * static_cast<unsigned long>(n);
    BigInt rhs = 2 * c_value(1, n, counts);
    if (n == 1) rhs -= 1;
    for (std::size_t i = 2; i + 1 <= n; ++i)
        rhs += counts.Q(i) * static_cast<unsigned long>(i) * c_value(i, n, counts);
    return lhs == rhs;
}

bool check_divisor_identity(std::size_t n, const CountTable& counts) {
    if (n == 0) throw PreconditionError("check_divisor_identity: n must be positive");
    BigInt lhs = 0, rhs = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        lhs += c_value(i, n, counts);
        rhs += counts.Q(n - i) * divisor_count(static_cast<unsigned>(i));
    }
    return lhs == rhs;
}

bool check_window_identity(std::size_t i, std::size_t n, const CountTable& counts) {
    if (i == 0) throw PreconditionError("check_window_identity: i must be positive");
    BigInt lhs = 0, rhs = 0;
    for (std::size_t k = 1; k <= i; ++k) {
        // C_i(n+k) is undefined when n+k < i; the identity then only sums defined terms.
        if (n + k >= i) lhs += c_value(i, n + k, counts);
    }
    for (std::size_t k = 0; k <= n; ++k) rhs += counts.Q(k);
    return lhs == rhs;
}

} // namespace spnet
