#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spnet/numerics/rational.hpp"

namespace spnet {

enum class CircuitKind { unit, series, parallel };

inline constexpr unsigned kEnumerateBudget = 12;
inline constexpr unsigned kOmnicircuitBudget = 8;

/// Unvalidated tree, as a user or parser would write it.
struct RawCircuit {
    CircuitKind kind = CircuitKind::unit;
    std::vector<RawCircuit> children;
};

/// A series-parallel network of unit resistors in canonical alternating form.
///
/// Series nodes hold unit or parallel children, parallel nodes hold unit or
/// series children, every non-unit node has at least two children, and
/// children are sorted by their serialization. Two circuits are the same
/// network iff their serializations are equal. Nodes are immutable and shared.
class Circuit {
public:
    /// The single resistor.
    Circuit();

    static Circuit unit() { return Circuit(); }
    static Circuit series(std::vector<Circuit> children);
    static Circuit parallel(std::vector<Circuit> children);

    CircuitKind kind() const noexcept;
    /// The unit counts as both series and parallel.
    bool is_series() const noexcept { return kind() != CircuitKind::parallel; }
    bool is_parallel() const noexcept { return kind() != CircuitKind::series; }
    bool is_unit() const noexcept { return kind() == CircuitKind::unit; }

    std::span<const Circuit> children() const noexcept;
    /// Number of resistors.
    unsigned size() const noexcept;
    /// Canonical serialization; also the ordering key.
    const std::string& key() const noexcept;

    struct Node;

    friend bool operator==(const Circuit& a, const Circuit& b) { return a.key() == b.key(); }
    friend std::strong_ordering operator<=>(const Circuit& a, const Circuit& b) { return a.key() <=> b.key(); }

private:
    explicit Circuit(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Circuit make(CircuitKind kind, std::vector<Circuit> children);

    std::shared_ptr<const Node> node_;
};

/// Validates alternation and arity, sorts children recursively.
Circuit canonicalize(const RawCircuit& tree);

/// All n-circuits, each once, sorted by serialization. Size is Q_n.
std::vector<Circuit> enumerate(unsigned n, unsigned budget = kEnumerateBudget);

/// Only series (resp. parallel) n-circuits; the unit is both.
std::vector<Circuit> enumerate_series(unsigned n, unsigned budget = kEnumerateBudget);
std::vector<Circuit> enumerate_parallel(unsigned n, unsigned budget = kEnumerateBudget);

Rational resistance(const Circuit& c);

/// Swap series and parallel at every level.
Circuit invert(const Circuit& c);

/// Unit is 0, otherwise one more than the deepest child.
unsigned depth(const Circuit& c);

/// Series connection of every n-circuit, flattened into a single series node
/// whose children are parallel circuits or units. omnicircuit(1) is the unit.
Circuit omnicircuit(unsigned n, unsigned budget = kOmnicircuitBudget);

/// Number of children of `c` equal to `child`.
std::size_t child_multiplicity(const Circuit& c, const Circuit& child);

/// Direct recursive k-resistance (power-mean generalization); k != 0.
double k_resistance(const Circuit& c, double k);

/// k-resistance evaluated as resistance(c)^(1/k).
double k_resistance_by_power(const Circuit& c, double k);

/// circuit := "*" | "S(" list ")" | "P(" list ")" ; list := circuit ("," circuit)*
std::string serialize(const Circuit& c);
/// Accepts children in any order and returns the canonical circuit.
Circuit parse_circuit(std::string_view text);

/// One circuit per line, LF terminated.
void write_circuits(std::ostream& os, std::span<const Circuit> circuits);
std::vector<Circuit> read_circuits(std::istream& is);

} // namespace spnet
