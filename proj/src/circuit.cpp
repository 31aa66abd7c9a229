#include "monocirc/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace monocirc {

Circuit Circuit::from_parts(std::vector<std::string> inputs, std::vector<Gate> gates,
                            std::vector<NodeRef> outputs, std::string label) {
    Circuit c;
    c.inputs_ = std::move(inputs);
    c.gates_ = std::move(gates);
    c.outputs_ = std::move(outputs);
    c.label_ = std::move(label);
    return c;
}

std::vector<Bit> Circuit::evaluate(std::span<const Bit> assignment) const {
    std::vector<Bit> values;
    evaluate_into(assignment, values);
    return values;
}

void Circuit::evaluate_into(std::span<const Bit> assignment, std::vector<Bit>& values) const {
    if (assignment.size() != inputs_.size()) {
        throw std::invalid_argument("evaluate: assignment covers " +
                                    std::to_string(assignment.size()) + " inputs, circuit has " +
                                    std::to_string(inputs_.size()));
    }
    values.resize(node_count());
    std::copy(assignment.begin(), assignment.end(), values.begin());
    std::size_t idx = inputs_.size();
    for (const Gate& g : gates_) {
        const Bit l = values[g.left];
        const Bit r = values[g.right];
        values[idx++] = (g.kind == GateKind::And) ? static_cast<Bit>(l & r)
                                                  : static_cast<Bit>(l | r);
    }
}

BitVec Circuit::output_values(std::span<const Bit> node_values) const {
    BitVec out(outputs_.size());
    for (std::size_t i = 0; i < outputs_.size(); ++i) {
        out[i] = node_values[outputs_[i]];
    }
    return out;
}

NodeRef CircuitBuilder::check_ref(NodeRef r) const {
    if (r >= node_count()) {
        throw std::invalid_argument("dangling node reference " + std::to_string(r) +
                                    " (only " + std::to_string(node_count()) + " nodes exist)");
    }
    return r;
}

NodeRef CircuitBuilder::add_input(std::string name) {
    if (!gates_.empty()) {
        throw std::invalid_argument("add_input: all inputs must precede the first gate");
    }
    inputs_.push_back(std::move(name));
    return static_cast<NodeRef>(inputs_.size() - 1);
}

NodeRef CircuitBuilder::add_gate(GateKind kind, NodeRef left, NodeRef right) {
    check_ref(left);
    check_ref(right);
    if (node_count() >= (1ull << 31)) {
        throw std::length_error("add_gate: circuit too large");
    }
    if (dedup_) {
        const NodeRef a = std::min(left, right);
        const NodeRef b = std::max(left, right);
        const std::uint64_t key = (static_cast<std::uint64_t>(kind == GateKind::And) << 62) |
                                  (static_cast<std::uint64_t>(a) << 31) |
                                  static_cast<std::uint64_t>(b);
        auto it = structural_.find(key);
        if (it != structural_.end()) {
            return it->second;
        }
        gates_.push_back({kind, left, right});
        const NodeRef ref = static_cast<NodeRef>(node_count() - 1);
        structural_.emplace(key, ref);
        return ref;
    }
    gates_.push_back({kind, left, right});
    return static_cast<NodeRef>(node_count() - 1);
}

NodeRef CircuitBuilder::add_node(NodeKind kind, std::span<const NodeRef> fanins,
                                 std::string name) {
    if (kind == NodeKind::Input) {
        if (!fanins.empty()) {
            throw std::invalid_argument("add_node: INPUT takes no fan-ins");
        }
        return add_input(std::move(name));
    }
    if (fanins.size() != 2) {
        throw std::invalid_argument("add_node: OR/AND take exactly two fan-ins, got " +
                                    std::to_string(fanins.size()));
    }
    return add_gate(kind == NodeKind::Or ? GateKind::Or : GateKind::And, fanins[0], fanins[1]);
}

NodeRef CircuitBuilder::add_chain(GateKind kind, std::span<const NodeRef> refs) {
    if (refs.empty()) {
        throw std::invalid_argument("add_chain: empty operand list");
    }
    NodeRef acc = refs[0];
    for (std::size_t i = 1; i < refs.size(); ++i) {
        acc = add_gate(kind, acc, refs[i]);
    }
    return acc;
}

NodeRef CircuitBuilder::add_tree(GateKind kind, std::span<const NodeRef> refs) {
    if (refs.empty()) {
        throw std::invalid_argument("add_tree: empty operand list");
    }
    std::vector<NodeRef> level(refs.begin(), refs.end());
    while (level.size() > 1) {
        std::vector<NodeRef> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            next.push_back(add_gate(kind, level[i], level[i + 1]));
        }
        if (level.size() % 2 == 1) {
            next.push_back(level.back());
        }
        level = std::move(next);
    }
    return level[0];
}

void CircuitBuilder::add_output(NodeRef r) {
    check_ref(r);
    outputs_.push_back(r);
}

Circuit CircuitBuilder::build(std::string label) {
    Circuit c;
    c.inputs_ = std::move(inputs_);
    c.gates_ = std::move(gates_);
    c.outputs_ = std::move(outputs_);
    c.label_ = std::move(label);
    inputs_.clear();
    gates_.clear();
    outputs_.clear();
    structural_.clear();
    return c;
}

CircuitStats stats(const Circuit& c) {
    CircuitStats s;
    s.gate_count = c.gate_count();
    s.input_count = c.input_count();
    s.output_count = c.output_count();
    std::vector<std::uint32_t> depth(c.node_count(), 0);
    const std::size_t base = c.input_count();
    for (std::size_t t = 0; t < c.gate_count(); ++t) {
        const Gate& g = c.gates()[t];
        depth[base + t] = 1 + std::max(depth[g.left], depth[g.right]);
    }
    for (NodeRef out : c.outputs()) {
        s.depth = std::max<std::size_t>(s.depth, depth[out]);
    }
    return s;
}

std::vector<std::string> validate(const Circuit& c) {
    std::vector<std::string> violations;
    const std::size_t base = c.input_count();
    for (std::size_t t = 0; t < c.gate_count(); ++t) {
        const Gate& g = c.gates()[t];
        const NodeRef self = static_cast<NodeRef>(base + t);
        for (NodeRef ref : {g.left, g.right}) {
            if (ref >= c.node_count()) {
                violations.push_back("gate " + std::to_string(t) +
                                     ": dangling reference to node " + std::to_string(ref));
            } else if (ref >= self) {
                violations.push_back("gate " + std::to_string(t) +
                                     ": order violation, references node " + std::to_string(ref) +
                                     " >= its own index " + std::to_string(self));
            }
        }
    }
    for (std::size_t i = 0; i < c.output_count(); ++i) {
        if (c.outputs()[i] >= c.node_count()) {
            violations.push_back("output " + std::to_string(i) + ": invalid node reference " +
                                 std::to_string(c.outputs()[i]));
        }
    }
    return violations;
}

} // namespace monocirc
