#include "spnet/float_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spnet/errors.hpp"

namespace spnet {

namespace {

constexpr std::uint64_t kEmpty = std::numeric_limits<std::uint64_t>::max();

std::uint64_t quantize(double value) {
    return static_cast<std::uint64_t>(std::llround(std::ldexp(value, kFloatKeyFractionBits)));
}

std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw InternalConsistencyError("float_distributions: count overflow");
    return out;
}

// Open-addressing map from quantized key to (first value seen, multiplicity).
class FlatTable {
public:
    void add(double value, std::uint64_t count) {
        if ((size_ + 1) * 10 > keys_.size() * 7) grow();
        std::uint64_t key = quantize(value);
        std::size_t mask = keys_.size() - 1;
        for (std::size_t slot = mix(key) & mask;; slot = (slot + 1) & mask) {
            if (keys_[slot] == key) {
                counts_[slot] += count;
                return;
            }
            if (keys_[slot] == kEmpty) {
                keys_[slot] = key;
                values_[slot] = value;
                counts_[slot] = count;
                ++size_;
                return;
            }
        }
    }

    bool empty() const { return size_ == 0; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t s = 0; s < keys_.size(); ++s)
            if (keys_[s] != kEmpty) f(values_[s], counts_[s]);
    }

    std::vector<std::pair<double, std::uint64_t>> drain() {
        std::vector<std::pair<double, std::uint64_t>> out;
        out.reserve(size_);
        for (std::size_t s = 0; s < keys_.size(); ++s)
            if (keys_[s] != kEmpty) out.emplace_back(values_[s], counts_[s]);
        std::sort(out.begin(), out.end());
        *this = FlatTable();
        return out;
    }

private:
    void grow() {
        std::size_t cap = keys_.empty() ? 64 : keys_.size() * 2;
        std::vector<std::uint64_t> keys(cap, kEmpty);
        std::vector<double> values(cap);
        std::vector<std::uint64_t> counts(cap);
        std::size_t mask = cap - 1;
        for (std::size_t s = 0; s < keys_.size(); ++s) {
            if (keys_[s] == kEmpty) continue;
            std::size_t slot = mix(keys_[s]) & mask;
            while (keys[slot] != kEmpty) slot = (slot + 1) & mask;
            keys[slot] = keys_[s];
            values[slot] = values_[s];
            counts[slot] = counts_[s];
        }
        keys_.swap(keys);
        values_.swap(values);
        counts_.swap(counts);
    }

    std::vector<std::uint64_t> keys_;
    std::vector<double> values_;
    std::vector<std::uint64_t> counts_;
    std::size_t size_ = 0;
};

std::uint64_t multichoose_u64(std::uint64_t q, unsigned m) {
    // C(q+m-1, m) built incrementally; each prefix is itself an integer.
    unsigned __int128 acc = 1;
    for (unsigned j = 1; j <= m; ++j) {
        acc = acc * (q + j - 1) / j;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw InternalConsistencyError("float_distributions: multiset weight overflow");
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace

std::vector<FloatLevel> float_distributions(unsigned max_n, unsigned budget) {
    if (max_n == 0) throw PreconditionError("float_distributions: max_n must be positive");
    if (max_n > budget) throw BudgetExceeded("distributions (float)", max_n, budget);

    using Entries = std::vector<std::pair<double, std::uint64_t>>;
    std::vector<FlatTable> building(max_n + 1);
    std::vector<Entries> done(max_n + 1);
    done[0] = {{0.0, 1}};

    // The top level is only ever a destination, so keep running sums instead.
    std::uint64_t top_count = 0;
    long double top_sum = 0, top_inverse_sum = 0;

    std::vector<FloatLevel> out;
    for (unsigned n = 1; n <= max_n; ++n) {
        FloatLevel level;
        level.n = n;
        if (n == max_n && n > 1) {
            level.q = top_count;
            level.R_series = top_sum;
            level.R_parallel = top_inverse_sum;
            out.push_back(std::move(level));
            break;
        }
        // Every atom so far has size < n, so these multisets have >= 2 members.
        Entries series = n == 1 ? Entries{{1.0, 1}} : building[n].drain();
        for (const auto& [r, m] : series) {
            level.q += m;
            level.R_series += static_cast<long double>(r) * m;
            level.R_parallel += static_cast<long double>(m) / r;
        }
        level.distinct_keys = series.size();
        level.series_entries = series;
        out.push_back(std::move(level));
        if (n == max_n) break;

        Entries& partial = done[n];
        partial = n == 1 ? Entries{} : series;
        for (const auto& [series_r, q] : series) {
            const double r = 1.0 / series_r; // parallel class resistance
            for (unsigned total = max_n; total > n; --total) {
                for (unsigned m = 1; m * n <= total; ++m) {
                    const unsigned from = total - m * n;
                    const std::uint64_t weight = multichoose_u64(q, m);
                    const double shift = r * m;
                    // Levels above n are still accumulating multisets of earlier classes.
                    auto emit = [&](double key, std::uint64_t mult) {
                        const std::uint64_t c = checked_mul(mult, weight);
                        if (total == max_n) {
                            const long double v = static_cast<long double>(key) + shift;
                            top_count += c;
                            top_sum += v * c;
                            top_inverse_sum += c / v;
                        } else {
                            building[total].add(key + shift, c);
                        }
                    };
                    if (from <= n) {
                        for (const auto& [key, mult] : done[from]) emit(key, mult);
                    } else {
                        building[from].for_each(emit);
                    }
                }
            }
            // The class itself as a one-member multiset of size n.
            partial.emplace_back(r, q);
        }
    }
    return out;
}

} // namespace spnet
