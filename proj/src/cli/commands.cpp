#include "spnet/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "spnet/asymptotics.hpp"
#include "spnet/biscuits.hpp"
#include "spnet/circuit.hpp"
#include "spnet/counting.hpp"
#include "spnet/distribution.hpp"
#include "spnet/errors.hpp"
#include "spnet/float_distribution.hpp"

namespace spnet::cli {

namespace {

constexpr int kPlaces = 6;

std::string decimal(const Rational& r) { return r.to_decimal(kPlaces); }
std::string decimal(long double x) { return Rational::from_double(static_cast<double>(x)).to_decimal(kPlaces); }
std::string str(const BigInt& v) { return v.get_str(); }
std::string str(std::size_t v) { return std::to_string(v); }

std::string format_k(double k) {
    std::ostringstream os;
    os << k;
    return os.str();
}

struct CommandSpec {
    const char* name;
    unsigned default_max_n;
    CommandResult (*run)(const RunConfig&);
};

// ---------------------------------------------------------------- count

CommandResult cmd_count(const RunConfig& config) {
    const unsigned n_max = *config.max_n;
    if (n_max == 0) throw PreconditionError("count: --max-n must be positive");
    const CountTable counts = q_recursive(n_max);
    CommandResult result;
    result.table.header = {"n", "Q", "q"};
    for (unsigned n = 1; n <= n_max; ++n) result.table.add_row({str(n), str(counts.Q(n)), str(counts.q(n))});
    return result;
}

// --------------------------------------------------------------- ctable

CommandResult cmd_ctable(const RunConfig& config) {
    const unsigned n_max = *config.max_n;
    if (n_max == 0) throw PreconditionError("ctable: --max-n must be positive");
    const CountTable counts = q_recursive(n_max).with_c_table(n_max);

    CommandResult result;
    auto& header = result.table.header;
    header = {"view", "i"};
    for (unsigned n = 1; n <= n_max; ++n) header.push_back("n=" + std::to_string(n));
    header.push_back("Q_i");

    for (unsigned i = 1; i <= n_max; ++i) {
        std::vector<std::string> row = {"C", str(i)};
        for (unsigned n = 1; n <= n_max; ++n) row.push_back(n >= i ? str(counts.C(i, n)) : "");
        row.push_back("");
        result.table.add_row(std::move(row));
    }
    // Row i holds C_{n-i}(n), which settles at Q_i once n > 2i.
    for (unsigned i = 0; i < n_max; ++i) {
        std::vector<std::string> row = {"reflected", str(i)};
        for (unsigned n = 1; n <= n_max; ++n) row.push_back(n > i ? str(counts.C(n - i, n)) : "");
        row.push_back(str(counts.Q(i)));
        result.table.add_row(std::move(row));
    }
    return result;
}

// ----------------------------------------------------------- resistance

void table_typo_notes(unsigned n, const std::string& R, const std::string& R_series,
                      std::vector<std::string>& notes) {
    if (n == 4)
        notes.push_back("note: n=4 published R = 1.30e1 disagrees with computed R = " + R +
                        " (Q=10, M=1.350, 10.5 + 3.0 = 13.5); data row keeps the computed value");
    if (n == 8)
        notes.push_back("note: n=8 published series total 5.13e2 disagrees with computed " + R_series +
                        " (R = Rs + Rp = 677.43 with Rp = 165.27)");
    if (n == 13)
        notes.push_back("note: n=13 published series total 1.31e6 exceeds the total R; computed value " +
                        R_series + " matches 1.31e5");
}

unsigned exact_budget(const RunConfig& config) {
    return config.budget_override.value_or(kExactDistributionBudget);
}

unsigned float_budget(const RunConfig& config) {
    return config.budget_override.value_or(kFloatDistributionBudget);
}

CommandResult cmd_resistance(const RunConfig& config) {
    const unsigned n_max = *config.max_n;
    if (n_max == 0) throw PreconditionError("resistance: --max-n must be positive");
    CommandResult result;

    if (config.mode == Mode::exact) {
        result.table.header = {"n", "Q", "R_num", "R_den", "M_decimal", "Rs_num", "Rs_den", "Rp_num", "Rp_den"};
        const CountTable counts = q_recursive(n_max).with_c_table(n_max);
        const DistributionSet dists = distributions(n_max, counts, exact_budget(config));
        for (unsigned n = 1; n <= n_max; ++n) {
            const SummaryRow row = summary(n, dists, counts);
            result.table.add_row({str(n), str(row.Q), str(row.R.numerator()), str(row.R.denominator()),
                                  decimal(row.M), str(row.R_series.numerator()),
                                  str(row.R_series.denominator()), str(row.R_parallel.numerator()),
                                  str(row.R_parallel.denominator())});
            table_typo_notes(n, row.R.to_fraction_string(), row.R_series.to_decimal(2), result.notes);
        }
        return result;
    }

    result.table.header = {"n", "Q", "R_num", "R_den", "M_decimal", "Rs_num", "Rs_den", "Rp_num", "Rp_den", "mode"};
    for (const FloatLevel& level : float_distributions(n_max, float_budget(config))) {
        // Unit circuit: counted once although it is both series and parallel.
        const long double Rp = level.n == 1 ? 1.0L : level.R_parallel;
        result.table.add_row({str(level.n), std::to_string(level.Q()), decimal(level.R()), "",
                              decimal(level.M()), decimal(level.R_series), "", decimal(Rp), "", "float"});
        table_typo_notes(level.n, decimal(level.R()), decimal(level.R_series), result.notes);
    }
    return result;
}

// ------------------------------------------------------------- plotdata

std::vector<std::pair<unsigned, std::string>> mean_series(const RunConfig& config) {
    const unsigned n_max = *config.max_n;
    if (n_max == 0) throw PreconditionError("--max-n must be positive");
    std::vector<std::pair<unsigned, std::string>> out;
    if (config.mode == Mode::exact) {
        const CountTable counts = q_recursive(n_max);
        const DistributionSet dists = distributions(n_max, counts, exact_budget(config));
        for (unsigned n = 1; n <= n_max; ++n) out.emplace_back(n, decimal(summary(n, dists, counts).M));
    } else {
        for (const FloatLevel& level : float_distributions(n_max, float_budget(config)))
            out.emplace_back(level.n, decimal(level.M()));
    }
    return out;
}

CommandResult cmd_plotdata(const RunConfig& config) {
    CommandResult result;
    result.table.header = {"n", "M_n", "baseline"};
    const auto means = mean_series(config);
    for (const auto& [n, m] : means) result.table.add_row({str(n), m, "1.000000"});

    bool decreasing = true;
    for (std::size_t i = 3; i < means.size(); ++i)
        decreasing = decreasing && std::stod(means[i].second) < std::stod(means[i - 1].second);
    result.notes.push_back(std::string("trend: M_n ") + (decreasing ? "decreases" : "does not decrease") +
                           " monotonically from n=3 to n=" + str(means.size()));
    return result;
}

// --------------------------------------------------------------- verify

using Checks = std::vector<std::pair<std::string, bool>>;

template <class F>
bool guarded(F&& f) {
    try {
        return f();
    } catch (const InternalConsistencyError&) {
        return false;
    }
}

Checks suite_identities(unsigned n_max) {
    Checks checks;
    const CountTable counts = q_recursive(n_max).with_c_table(n_max);

    bool closed = true, double_count = true, divisor = true, window = true;
    for (unsigned n = 1; n <= n_max; ++n) {
        for (unsigned i = 1; i <= n; ++i) closed = closed && counts.C(i, n) == c_closed(i, n, counts);
        double_count = double_count && check_double_count(n, counts);
        divisor = divisor && check_divisor_identity(n, counts);
        for (unsigned i = 1; i <= std::min(n, 10u); ++i) window = window && check_window_identity(i, n, counts);
    }
    checks.emplace_back("C_i(n) recurrence equals closed form, n<=" + str(n_max), closed);
    checks.emplace_back("double count sum_i q_i C_i(n) i = n Q_n", double_count);
    checks.emplace_back("divisor identity", divisor);
    checks.emplace_back("window identity, i<=10", window);

    const unsigned partition_n = std::min(n_max, 20u);
    const auto by_partitions = q_by_partitions(partition_n);
    bool partition_ok = true;
    for (unsigned n = 1; n <= partition_n; ++n) partition_ok = partition_ok && by_partitions[n] == counts.Q(n);
    checks.emplace_back("partition formula equals recursion, n<=" + str(partition_n), partition_ok);

    const unsigned dist_n = std::min(n_max, kExactDistributionBudget);
    checks.emplace_back("R_n = sum_i Rp_i C_i(n), n<=" + str(dist_n), guarded([&] {
                            const DistributionSet dists = distributions(dist_n, counts);
                            for (unsigned n = 1; n <= dist_n; ++n) summary(n, dists, counts);
                            return true;
                        }));
    checks.emplace_back("generating function log and product forms, order " + str(n_max),
                        guarded([&] { return verify_gf_identities(n_max, counts); }));
    return checks;
}

std::map<Rational, BigInt> resistance_multiset(const std::vector<Circuit>& circuits) {
    std::map<Rational, BigInt> out;
    for (const Circuit& c : circuits) out[resistance(c)] += 1;
    return out;
}

Checks suite_oracle(unsigned n_max) {
    Checks checks;
    const CountTable counts = q_recursive(n_max);
    const DistributionSet dists = distributions(n_max, counts, std::max(n_max, kExactDistributionBudget));
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto series = enumerate_series(n, std::max(n_max, kEnumerateBudget));
        const auto parallel = enumerate_parallel(n, std::max(n_max, kEnumerateBudget));
        const bool ok = resistance_multiset(series) == dists.at(n).series.entries &&
                        resistance_multiset(parallel) == dists.at(n).parallel.entries &&
                        enumerate(n, std::max(n_max, kEnumerateBudget)).size() == counts.Q(n);
        checks.emplace_back("distribution equals enumeration, n=" + str(n), ok);
    }
    return checks;
}

Checks suite_biscuits(unsigned n_max) {
    Checks checks;
    bool closed = true, unique = true;
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto biscuits = enumerate_biscuits(n, std::max(n_max, kBiscuitBudget));
        const BiscuitClosedForms measured = biscuit_measured(biscuits);
        const BiscuitClosedForms expected = biscuit_closed_forms(n);
        closed = closed && measured.mean == expected.mean && measured.total == expected.total &&
                 measured.series_mean == expected.series_mean &&
                 measured.parallel_mean == expected.parallel_mean &&
                 measured.series_total == expected.series_total &&
                 measured.parallel_total == expected.parallel_total;
        std::vector<Rational> values;
        values.reserve(biscuits.size());
        for (const Biscuit& b : biscuits) values.push_back(b.resistance);
        std::sort(values.begin(), values.end());
        unique = unique && std::adjacent_find(values.begin(), values.end()) == values.end() &&
                 values.size() == (std::size_t{1} << (n - 1));
    }
    checks.emplace_back("biscuit totals and means equal closed forms, n<=" + str(n_max), closed);
    checks.emplace_back("2^(n-1) distinct biscuit resistances, n<=" + str(n_max), unique);
    return checks;
}

Checks suite_bounds(unsigned n_max) {
    Checks checks;
    const unsigned inversion_n = std::min(n_max, 8u);
    bool inversion = true;
    for (unsigned n = 1; n <= inversion_n; ++n)
        for (const Circuit& c : enumerate(n)) inversion = inversion && resistance(c) * resistance(invert(c)) == 1;
    checks.emplace_back("r(c) r(c*) = 1, n<=" + str(inversion_n), inversion);

    const unsigned dist_n = std::min(n_max, kExactDistributionBudget);
    const CountTable counts = q_recursive(dist_n);
    const DistributionSet dists = distributions(dist_n, counts);

    const unsigned range_n = std::min(dist_n, 10u);
    bool range = true;
    for (unsigned n = 2; n <= range_n; ++n) {
        const auto& s = dists.at(n).series;
        const auto& p = dists.at(n).parallel;
        const Rational min_series = Rational(1) / Rational(n / 2) + Rational(1) / Rational((n + 1) / 2);
        range = range && s.min_key() >= Rational(4) / Rational(n) && s.min_key() == min_series &&
                s.max_key() == Rational(n) && p.min_key() == Rational(1) / Rational(n) &&
                p.max_key() <= Rational(n) / Rational(4) && p.max_key() == min_series.reciprocal();
    }
    checks.emplace_back("resistance range bounds attained, 2<=n<=" + str(range_n), range);

    const unsigned geo_n = std::min(dist_n, 12u);
    bool geometric = true;
    for (unsigned n = 1; n <= geo_n; ++n) geometric = geometric && geometric_mean_check(n, dists);
    checks.emplace_back("product of all resistances is 1, n<=" + str(geo_n), geometric);

    std::string mean_violations;
    bool series_dominates = true;
    for (unsigned n = 2; n <= dist_n; ++n) {
        const SummaryRow row = summary(n, dists, counts);
        if (!(row.M_parallel > Rational(1, 2) && row.M_parallel < Rational(5, 2)))
            mean_violations += " n=" + str(n) + " mean=" + row.M_parallel.to_fraction_string();
        series_dominates = series_dominates && row.R_parallel <= row.R_series;
    }
    checks.emplace_back("1/2 < parallel mean < 5/2, 2<=n<=" + str(dist_n) +
                            (mean_violations.empty() ? "" : ";" + mean_violations),
                        mean_violations.empty());
    checks.emplace_back("parallel total <= series total, 2<=n<=" + str(dist_n), series_dominates);
    return checks;
}

Checks suite_gf(unsigned n_max) {
    const CountTable counts = q_recursive(n_max);
    return {{"generating function log and product forms, order " + str(n_max),
             guarded([&] { return verify_gf_identities(n_max, counts); })}};
}

struct Suite {
    const char* name;
    unsigned default_max_n;
    Checks (*run)(unsigned);
};

constexpr Suite kSuites[] = {
    {"identities", 60, suite_identities},
    {"oracle", 10, suite_oracle},
    {"biscuits", 20, suite_biscuits},
    {"bounds", 13, suite_bounds},
    {"gf", 60, suite_gf},
};

CommandResult cmd_verify(const RunConfig& config) {
    CommandResult result;
    result.table.header = {"suite", "check", "result"};
    bool matched = false;
    for (const Suite& suite : kSuites) {
        if (config.suite != "all" && config.suite != suite.name) continue;
        matched = true;
        const unsigned n_max = config.max_n.value_or(suite.default_max_n);
        for (const auto& [name, ok] : suite.run(n_max)) {
            result.table.add_row({suite.name, name, ok ? "PASS" : "FAIL"});
            if (!ok) result.exit_code = kExitVerificationFailure;
        }
    }
    if (!matched) throw PreconditionError("verify: unknown suite '" + config.suite + "'");
    return result;
}

// ---------------------------------------------------------- asymptotics

CommandResult cmd_asymptotics(const RunConfig& config) {
    const unsigned n_max = *config.max_n;
    if (n_max < 11) throw PreconditionError("asymptotics: --max-n must be at least 11");
    const std::size_t order = config.root_order;
    const CountTable counts = q_recursive(std::max<std::size_t>(n_max, order));

    const AsymptoticFit root = estimate_d_root(order, counts, config.precision);
    const AsymptoticFit extrapolated = estimate_d_extrapolate(n_max, counts, config.precision);

    CommandResult result;
    result.table.header = {"quantity", "value"};
    auto add = [&](std::string name, std::string value) { result.table.add_row({std::move(name), std::move(value)}); };
    add("d_root(order=" + str(order) + ")", root.d.to_string(20));
    add("d_root_residual", root.residual.to_string(3));
    add("d_truncated_sum(order=" + str(order) + ")", root.naive_d.to_string(10));
    add("d_ratio(N=" + str(n_max) + ")", extrapolated.naive_d.to_string(10));
    add("d_extrapolated(N=" + str(n_max) + ")", extrapolated.d.to_string(10));
    add("c_root(order=" + str(order) + ")", root.c.to_string(10));
    add("c_extrapolated(N=" + str(n_max) + ")", extrapolated.c.to_string(10));
    add("upper_bound(n=" + str(n_max) + ")", upper_bound(n_max, counts, config.precision).to_fixed(6));
    add("upper_bound_small_i_terms(5/2 sum q_i/(d^i-1))", upper_bound_limit(n_max, counts, root.d).to_fixed(6));
    for (unsigned i = 1; i <= 10; ++i)
        add("C_" + str(i) + "/Q_n relative error vs 1/(d^i-1)", ci_qn_limit_check(i, n_max, counts, root.d).to_string(4));
    return result;
}

// ---------------------------------------------------------- kresistance

CommandResult cmd_kresistance(const RunConfig& config) {
    const unsigned n_max = *config.max_n;
    if (n_max == 0) throw PreconditionError("kresistance: --max-n must be positive");
    for (double k : config.k)
        if (k == 0 || !std::isfinite(k)) throw PreconditionError("kresistance: k must be finite and nonzero");

    const CountTable counts = q_recursive(n_max);
    const DistributionSet dists = distributions(n_max, counts, exact_budget(config));
    CommandResult result;
    result.table.header = {"n"};
    for (double k : config.k) result.table.header.push_back("k=" + format_k(k));
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<std::string> row = {str(n)};
        for (double k : config.k) row.push_back(decimal(static_cast<long double>(mean_k(n, k, dists))));
        result.table.add_row(std::move(row));
    }
    return result;
}

// ------------------------------------------------------------- biscuits

CommandResult cmd_biscuits(const RunConfig& config) {
    const unsigned n_max = *config.max_n;
    if (n_max == 0) throw PreconditionError("biscuits: --max-n must be positive");
    CommandResult result;
    result.table.header = {"n", "count", "mean", "series_mean", "parallel_mean",
                           "total", "series_total", "parallel_total", "closed_forms"};
    auto opt = [](const std::optional<Rational>& r) { return r ? r->to_fraction_string() : std::string(); };
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto biscuits = enumerate_biscuits(n, config.budget_override.value_or(kBiscuitBudget));
        const BiscuitClosedForms m = biscuit_measured(biscuits);
        const BiscuitClosedForms e = biscuit_closed_forms(n);
        const bool match = m.mean == e.mean && m.total == e.total && m.series_mean == e.series_mean &&
                           m.parallel_mean == e.parallel_mean && m.series_total == e.series_total &&
                           m.parallel_total == e.parallel_total;
        result.table.add_row({str(n), str(biscuits.size()), m.mean.to_fraction_string(), opt(m.series_mean),
                              opt(m.parallel_mean), m.total.to_fraction_string(), opt(m.series_total),
                              opt(m.parallel_total), match ? "match" : "MISMATCH"});
        if (!match) result.exit_code = kExitVerificationFailure;
    }
    return result;
}

// ------------------------------------------------------------- circuits

CommandResult cmd_circuits(const RunConfig& config) {
    const unsigned n = *config.max_n;
    if (n == 0) throw PreconditionError("circuits: --max-n must be positive");
    CommandResult result;
    result.table.header = {"circuit", "kind", "resistance"};
    for (const Circuit& c : enumerate(n, config.budget_override.value_or(kEnumerateBudget))) {
        const char* kind = c.is_unit() ? "unit" : (c.kind() == CircuitKind::series ? "series" : "parallel");
        result.table.add_row({serialize(c), kind, resistance(c).to_fraction_string()});
    }
    return result;
}

constexpr CommandSpec kCommands[] = {
    {"count", 12, cmd_count},
    {"ctable", 12, cmd_ctable},
    {"resistance", 13, cmd_resistance},
    {"plotdata", 13, cmd_plotdata},
    {"verify", 0, cmd_verify},
    {"asymptotics", 2500, cmd_asymptotics},
    {"kresistance", 13, cmd_kresistance},
    {"biscuits", 20, cmd_biscuits},
    {"circuits", 4, cmd_circuits},
};

const CommandSpec& find_command(const std::string& name) {
    for (const CommandSpec& spec : kCommands)
        if (name == spec.name) return spec;
    throw PreconditionError("unknown command '" + name + "'");
}

} // namespace

std::string RunConfig::describe() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["max_n"] = max_n ? nlohmann::ordered_json(*max_n) : nlohmann::ordered_json("per suite");
    j["mode"] = mode == Mode::exact ? "exact" : "float";
    j["format"] = format == Format::csv ? "csv" : (format == Format::json ? "json" : "text");
    j["out"] = out.empty() ? "-" : out;
    j["precision"] = precision;
    j["k"] = k;
    j["suite"] = suite;
    j["budget_override"] = budget_override ? nlohmann::ordered_json(*budget_override) : nlohmann::ordered_json();
    j["root_order"] = root_order;
    return j.dump();
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const CommandSpec& spec : kCommands) out.emplace_back(spec.name);
        return out;
    }();
    return names;
}

RunConfig resolve_defaults(RunConfig config) {
    const CommandSpec& spec = find_command(config.command);
    if (!config.max_n && config.command != "verify") {
        unsigned n = spec.default_max_n;
        if (config.mode == Mode::float_ && (config.command == "resistance" || config.command == "plotdata"))
            n = kFloatDistributionBudget;
        config.max_n = n;
    }
    return config;
}

CommandResult run_command(const RunConfig& config) {
    const RunConfig resolved = resolve_defaults(config);
    return find_command(resolved.command).run(resolved);
}

std::string render(const Table& table, Format format) {
    switch (format) {
    case Format::csv: return to_csv(table);
    case Format::json: return to_json(table);
    case Format::text: return to_text(table);
    }
    return {};
}

void write_atomically(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path temp = target;
    temp += ".tmp";
    {
        std::ofstream os(temp, std::ios::binary | std::ios::trunc);
        if (!os) throw PreconditionError("cannot open " + temp.string() + " for writing");
        os << content;
        if (!os.flush()) throw PreconditionError("write to " + temp.string() + " failed");
    }
    std::filesystem::rename(temp, target);
}

} // namespace spnet::cli
