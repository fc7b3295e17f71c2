#include "spnet/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <map>
#include <ostream>

#include "spnet/counting.hpp"
#include "spnet/errors.hpp"

namespace spnet {

struct Circuit::Node {
    CircuitKind kind = CircuitKind::unit;
    std::vector<Circuit> children;
    unsigned size = 1;
    std::string key = "*";
};

namespace {

const std::shared_ptr<const Circuit::Node>& unit_node();

} // namespace

Circuit::Circuit() : node_(unit_node()) {}

namespace {

const std::shared_ptr<const Circuit::Node>& unit_node() {
    static const std::shared_ptr<const Circuit::Node> node = std::make_shared<const Circuit::Node>();
    return node;
}

const char* kind_name(CircuitKind k) {
    switch (k) {
    case CircuitKind::unit: return "unit";
    case CircuitKind::series: return "series";
    case CircuitKind::parallel: return "parallel";
    }
    return "?";
}

} // namespace

Circuit Circuit::make(CircuitKind kind, std::vector<Circuit> children) {
    if (children.size() < 2)
        throw AlternationError(std::string(kind_name(kind)) + " node needs at least two children");
    for (const Circuit& child : children) {
        if (child.kind() == kind)
            throw AlternationError(std::string(kind_name(kind)) + " node cannot hold a " + kind_name(kind) +
                                   " child");
    }
    std::sort(children.begin(), children.end());

    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->size = 0;
    node->key = kind == CircuitKind::series ? "S(" : "P(";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) node->key += ',';
        node->key += children[i].key();
        node->size += children[i].size();
    }
    node->key += ')';
    node->children = std::move(children);
    return Circuit(std::move(node));
}

Circuit Circuit::series(std::vector<Circuit> children) { return make(CircuitKind::series, std::move(children)); }

Circuit Circuit::parallel(std::vector<Circuit> children) { return make(CircuitKind::parallel, std::move(children)); }

CircuitKind Circuit::kind() const noexcept { return node_->kind; }
std::span<const Circuit> Circuit::children() const noexcept { return node_->children; }
unsigned Circuit::size() const noexcept { return node_->size; }
const std::string& Circuit::key() const noexcept { return node_->key; }

Circuit canonicalize(const RawCircuit& tree) {
    if (tree.kind == CircuitKind::unit) {
        if (!tree.children.empty()) throw AlternationError("unit node cannot have children");
        return Circuit::unit();
    }
    std::vector<Circuit> children;
    children.reserve(tree.children.size());
    for (const RawCircuit& child : tree.children) children.push_back(canonicalize(child));
    return tree.kind == CircuitKind::series ? Circuit::series(std::move(children))
                                            : Circuit::parallel(std::move(children));
}

namespace {

// Every multiset of `count` elements from `pool`, as non-decreasing index tuples.
void for_each_multiset(const std::vector<Circuit>& pool, unsigned count,
                       const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(count, 0);
    if (pool.empty()) return;
    for (;;) {
        visit(idx);
        // Advance the rightmost index that can still grow.
        std::size_t pos = count;
        while (pos > 0 && idx[pos - 1] + 1 == pool.size()) --pos;
        if (pos == 0) return;
        std::size_t next = idx[pos - 1] + 1;
        for (std::size_t k = pos - 1; k < count; ++k) idx[k] = next;
    }
}

class Enumerator {
public:
    // Parallel i-circuits, with the unit standing in for i = 1.
    const std::vector<Circuit>& parallel(unsigned i) {
        ensure(i);
        return parallel_[i];
    }
    const std::vector<Circuit>& series(unsigned i) {
        ensure(i);
        return series_[i];
    }

private:
    void ensure(unsigned n) {
        while (series_.size() <= n) build(static_cast<unsigned>(series_.size()));
    }

    void build(unsigned n) {
        if (n == 0) {
            series_.emplace_back();
            parallel_.emplace_back();
            return;
        }
        if (n == 1) {
            series_.push_back({Circuit::unit()});
            parallel_.push_back({Circuit::unit()});
            return;
        }
        std::vector<Circuit> out;
        for (const Partition& p : partitions(n)) {
            if (p.size() < 2) continue;
            // One list of child-multisets per distinct part size.
            std::vector<std::vector<std::vector<Circuit>>> choices;
            for (unsigned part : p.support()) {
                const auto& pool = parallel_[part];
                std::vector<std::vector<Circuit>> options;
                for_each_multiset(pool, p.multiplicity(part), [&](const std::vector<std::size_t>& idx) {
                    std::vector<Circuit> pick;
                    pick.reserve(idx.size());
                    for (std::size_t k : idx) pick.push_back(pool[k]);
                    options.push_back(std::move(pick));
                });
                choices.push_back(std::move(options));
            }
            std::vector<std::size_t> at(choices.size(), 0);
            for (;;) {
                std::vector<Circuit> kids;
                for (std::size_t g = 0; g < choices.size(); ++g)
                    kids.insert(kids.end(), choices[g][at[g]].begin(), choices[g][at[g]].end());
                out.push_back(Circuit::series(std::move(kids)));
                std::size_t g = choices.size();
                while (g > 0 && ++at[g - 1] == choices[g - 1].size()) at[--g] = 0;
                if (g == 0) break;
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());

        std::vector<Circuit> inverted;
        inverted.reserve(out.size());
        for (const Circuit& c : out) inverted.push_back(invert(c));
        std::sort(inverted.begin(), inverted.end());

        series_.push_back(std::move(out));
        parallel_.push_back(std::move(inverted));
    }

    std::vector<std::vector<Circuit>> series_;
    std::vector<std::vector<Circuit>> parallel_;
};

void check_budget(const char* what, unsigned n, unsigned budget) {
    if (n == 0) throw PreconditionError(std::string(what) + ": n must be positive");
    if (n > budget) throw BudgetExceeded(what, n, budget);
}

} // namespace

std::vector<Circuit> enumerate_series(unsigned n, unsigned budget) {
    check_budget("enumerate", n, budget);
    Enumerator e;
    return e.series(n);
}

std::vector<Circuit> enumerate_parallel(unsigned n, unsigned budget) {
    check_budget("enumerate", n, budget);
    Enumerator e;
    return e.parallel(n);
}

std::vector<Circuit> enumerate(unsigned n, unsigned budget) {
    check_budget("enumerate", n, budget);
    Enumerator e;
    if (n == 1) return {Circuit::unit()};
    std::vector<Circuit> out = e.series(n);
    const auto& par = e.parallel(n);
    out.insert(out.end(), par.begin(), par.end());
    std::sort(out.begin(), out.end());
    return out;
}

Rational resistance(const Circuit& c) {
    switch (c.kind()) {
    case CircuitKind::unit: return Rational(1);
    case CircuitKind::series: {
        Rational sum;
        for (const Circuit& child : c.children()) sum += resistance(child);
        return sum;
    }
    case CircuitKind::parallel: {
        Rational sum;
        for (const Circuit& child : c.children()) sum += resistance(child).reciprocal();
        return sum.reciprocal();
    }
    }
    return Rational(1);
}

Circuit invert(const Circuit& c) {
    if (c.is_unit()) return c;
    std::vector<Circuit> kids;
    kids.reserve(c.children().size());
    for (const Circuit& child : c.children()) kids.push_back(invert(child));
    return c.kind() == CircuitKind::series ? Circuit::parallel(std::move(kids)) : Circuit::series(std::move(kids));
}

unsigned depth(const Circuit& c) {
    unsigned deepest = 0;
    for (const Circuit& child : c.children()) deepest = std::max(deepest, depth(child) + 1);
    return deepest;
}

Circuit omnicircuit(unsigned n, unsigned budget) {
    check_budget("omnicircuit", n, budget);
    if (n == 1) return Circuit::unit();
    Enumerator e;
    std::vector<Circuit> kids = e.parallel(n);
    for (const Circuit& s : e.series(n))
        kids.insert(kids.end(), s.children().begin(), s.children().end());
    return Circuit::series(std::move(kids));
}

std::size_t child_multiplicity(const Circuit& c, const Circuit& child) {
    auto kids = c.children();
    auto range = std::equal_range(kids.begin(), kids.end(), child);
    return static_cast<std::size_t>(range.second - range.first);
}

double k_resistance(const Circuit& c, double k) {
    if (k == 0.0) throw PreconditionError("k_resistance: k must be nonzero");
    if (c.is_unit()) return 1.0;
    const double e = c.kind() == CircuitKind::series ? k : -k;
    double sum = 0.0;
    for (const Circuit& child : c.children()) sum += std::pow(k_resistance(child, k), e);
    return std::pow(sum, 1.0 / e);
}

double k_resistance_by_power(const Circuit& c, double k) {
    if (k == 0.0) throw PreconditionError("k_resistance: k must be nonzero");
    return std::pow(resistance(c).to_double(), 1.0 / k);
}

std::string serialize(const Circuit& c) { return c.key(); }

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Circuit parse_all() {
        RawCircuit raw = parse_node();
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
        return canonicalize(raw);
    }

private:
    RawCircuit parse_node() {
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char ch = text_[pos_];
        if (ch == '*') {
            ++pos_;
            return {};
        }
        if (ch != 'S' && ch != 'P') throw ParseError(std::string("unexpected '") + ch + "'", pos_);
        RawCircuit node;
        node.kind = ch == 'S' ? CircuitKind::series : CircuitKind::parallel;
        ++pos_;
        expect('(');
        node.children.push_back(parse_node());
        while (pos_ < text_.size() && text_[pos_] == ',') {
            ++pos_;
            node.children.push_back(parse_node());
        }
        expect(')');
        return node;
    }

    void expect(char want) {
        if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + want + "' but input ended", pos_);
        if (text_[pos_] != want)
            throw ParseError(std::string("expected '") + want + "' but found '" + text_[pos_] + "'", pos_);
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Circuit parse_circuit(std::string_view text) { return Parser(text).parse_all(); }

void write_circuits(std::ostream& os, std::span<const Circuit> circuits) {
    for (const Circuit& c : circuits) os << c.key() << '\n';
}

std::vector<Circuit> read_circuits(std::istream& is) {
    std::vector<Circuit> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.push_back(parse_circuit(line));
    }
    return out;
}

} // namespace spnet
