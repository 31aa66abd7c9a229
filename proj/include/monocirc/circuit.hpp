#pragma once

/// @file circuit.hpp
/// @brief Monotone circuit IR: fan-in-2 DAG over {OR, AND} with named inputs
///        and an ordered output list.

#include "monocirc/common.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>

namespace monocirc {

enum class GateKind : std::uint8_t { Or, And };

/// Dense node index in topological order: node i < input_count() is input i,
/// node input_count() + t is gate t.
using NodeRef = std::uint32_t;

struct Gate {
    GateKind kind;
    NodeRef left;
    NodeRef right;
};

/// Immutable after construction; concurrent read-only evaluation is safe.
class Circuit {
  public:
    Circuit() = default;

    /// Assembles a circuit without structural checks (used by the JSON reader
    /// and by tests that need to exercise validate() on malformed graphs).
    static Circuit from_parts(std::vector<std::string> inputs, std::vector<Gate> gates,
                              std::vector<NodeRef> outputs, std::string label);

    const std::vector<std::string>& inputs() const { return inputs_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<NodeRef>& outputs() const { return outputs_; }
    const std::string& label() const { return label_; }

    std::size_t input_count() const { return inputs_.size(); }
    std::size_t gate_count() const { return gates_.size(); }
    std::size_t output_count() const { return outputs_.size(); }
    std::size_t node_count() const { return inputs_.size() + gates_.size(); }

    bool is_input_ref(NodeRef r) const { return r < inputs_.size(); }

    /// Gate behind a non-input ref.
    const Gate& gate_at(NodeRef r) const { return gates_[r - inputs_.size()]; }

    /// Values of ALL nodes (inputs then gates) under the given input assignment.
    std::vector<Bit> evaluate(std::span<const Bit> assignment) const;

    /// Same as evaluate() but reuses the caller's buffer (hot loops).
    void evaluate_into(std::span<const Bit> assignment, std::vector<Bit>& values) const;

    /// Projection of node values onto the ordered output list.
    BitVec output_values(std::span<const Bit> node_values) const;

  private:
    friend class CircuitBuilder;

    std::vector<std::string> inputs_;
    std::vector<Gate> gates_;
    std::vector<NodeRef> outputs_;
    std::string label_;
};

enum class NodeKind : std::uint8_t { Input, Or, And };

/// Single-owner builder. References are validated on insertion, so a built
/// circuit is topologically ordered by construction. Optional hash-consing
/// merges structurally identical gates (commutative); it is off by default
/// because exact-gate-count contracts depend on raw counts.
class CircuitBuilder {
  public:
    CircuitBuilder() = default;
    explicit CircuitBuilder(bool dedup) : dedup_(dedup) {}

    void set_dedup(bool on) { dedup_ = on; }
    bool dedup() const { return dedup_; }

    void reserve(std::size_t inputs, std::size_t gates) {
        inputs_.reserve(inputs);
        gates_.reserve(gates);
    }

    NodeRef add_input(std::string name);
    NodeRef add_gate(GateKind kind, NodeRef left, NodeRef right);
    NodeRef add_or(NodeRef a, NodeRef b) { return add_gate(GateKind::Or, a, b); }
    NodeRef add_and(NodeRef a, NodeRef b) { return add_gate(GateKind::And, a, b); }

    /// Generic node insertion; INPUT takes no fan-ins, OR/AND exactly two.
    NodeRef add_node(NodeKind kind, std::span<const NodeRef> fanins, std::string name = "");

    /// Left-to-right fold: ((r0 op r1) op r2) ...; throws on empty.
    NodeRef add_chain(GateKind kind, std::span<const NodeRef> refs);

    /// Balanced tree over refs; throws on empty.
    NodeRef add_tree(GateKind kind, std::span<const NodeRef> refs);

    void add_output(NodeRef r);

    std::size_t input_count() const { return inputs_.size(); }
    std::size_t gate_count() const { return gates_.size(); }
    std::size_t node_count() const { return inputs_.size() + gates_.size(); }

    /// Moves the accumulated state out; the builder is empty afterwards.
    Circuit build(std::string label);

  private:
    NodeRef check_ref(NodeRef r) const;

    bool dedup_ = false;
    std::vector<std::string> inputs_;
    std::vector<Gate> gates_;
    std::vector<NodeRef> outputs_;
    std::unordered_map<std::uint64_t, NodeRef> structural_;
};

struct CircuitStats {
    std::size_t gate_count = 0;
    std::size_t depth = 0; // edges on the longest input-to-output path
    std::size_t input_count = 0;
    std::size_t output_count = 0;
};

CircuitStats stats(const Circuit& c);

/// Structural check: topological order, reference validity, output validity.
/// Returns human-readable violations (empty for a well-formed circuit).
/// Gate kinds and fan-in arity are fixed by the representation itself.
std::vector<std::string> validate(const Circuit& c);

} // namespace monocirc
