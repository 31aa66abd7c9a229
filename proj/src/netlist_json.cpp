#include "monocirc/netlist_json.hpp"

#include "json.hpp"

#include <fstream>
#include <stdexcept>

namespace monocirc {

using ordered_json = nlohmann::ordered_json;

std::string netlist_to_json(const Circuit& c, const std::optional<EncodingInfo>& encoding) {
    ordered_json j;
    j["version"] = 1;
    j["label"] = c.label();
    j["inputs"] = c.inputs();
    ordered_json gates = ordered_json::array();
    for (const Gate& g : c.gates()) {
        gates.push_back({g.kind == GateKind::And ? "and" : "or", g.left, g.right});
    }
    j["gates"] = std::move(gates);
    j["outputs"] = c.outputs();
    if (encoding) {
        ordered_json e;
        e["family"] = encoding->family;
        e["n"] = encoding->n;
        if (encoding->family != "conv") {
            e["q"] = encoding->q;
        }
        if (!encoding->codes.empty()) {
            e["m"] = encoding->m;
            e["codes"] = encoding->codes;
        }
        if (encoding->family == "pi_comparator") {
            ordered_json net = ordered_json::array();
            for (const auto& [u, v] : encoding->network) {
                net.push_back({u, v});
            }
            e["network"] = std::move(net);
        }
        j["encoding"] = std::move(e);
    }
    return j.dump();
}

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw std::runtime_error("netlist: " + msg);
}

std::uint64_t require_uint(const ordered_json& v, const std::string& what) {
    if (!v.is_number_unsigned()) {
        bad(what + " must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

} // namespace

Netlist netlist_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        bad("document must be an object");
    }
    if (!j.contains("version") || !j["version"].is_number_integer() ||
        j["version"].get<int>() != 1) {
        bad("unsupported or missing version (expected 1)");
    }
    if (!j.contains("inputs") || !j["inputs"].is_array()) {
        bad("missing inputs array");
    }
    std::vector<std::string> inputs;
    for (const auto& name : j["inputs"]) {
        if (!name.is_string()) {
            bad("input names must be strings");
        }
        inputs.push_back(name.get<std::string>());
    }
    if (!j.contains("gates") || !j["gates"].is_array()) {
        bad("missing gates array");
    }
    std::vector<Gate> gates;
    gates.reserve(j["gates"].size());
    std::size_t t = 0;
    for (const auto& entry : j["gates"]) {
        if (!entry.is_array() || entry.size() != 3) {
            bad("gate " + std::to_string(t) +
                ": arity violation, expected [kind, left, right]");
        }
        if (!entry[0].is_string()) {
            bad("gate " + std::to_string(t) + ": kind must be a string");
        }
        const std::string kind = entry[0].get<std::string>();
        if (kind != "and" && kind != "or") {
            bad("gate " + std::to_string(t) + ": unknown gate kind '" + kind + "'");
        }
        const std::uint64_t self = inputs.size() + t;
        const std::uint64_t l = require_uint(entry[1], "gate " + std::to_string(t) + " left ref");
        const std::uint64_t r = require_uint(entry[2], "gate " + std::to_string(t) + " right ref");
        if (l >= self || r >= self) {
            bad("gate " + std::to_string(t) + ": order violation, reference >= own index " +
                std::to_string(self));
        }
        gates.push_back({kind == "and" ? GateKind::And : GateKind::Or,
                         static_cast<NodeRef>(l), static_cast<NodeRef>(r)});
        ++t;
    }
    if (!j.contains("outputs") || !j["outputs"].is_array()) {
        bad("missing outputs array");
    }
    std::vector<NodeRef> outputs;
    const std::uint64_t node_count = inputs.size() + gates.size();
    for (const auto& out : j["outputs"]) {
        const std::uint64_t r = require_uint(out, "output ref");
        if (r >= node_count) {
            bad("output reference " + std::to_string(r) + " out of range");
        }
        outputs.push_back(static_cast<NodeRef>(r));
    }
    std::string label;
    if (j.contains("label")) {
        if (!j["label"].is_string()) {
            bad("label must be a string");
        }
        label = j["label"].get<std::string>();
    }

    Netlist netlist;
    netlist.circuit =
        Circuit::from_parts(std::move(inputs), std::move(gates), std::move(outputs), label);
    if (j.contains("encoding")) {
        const auto& e = j["encoding"];
        if (!e.is_object() || !e.contains("family") || !e["family"].is_string() ||
            !e.contains("n")) {
            bad("encoding must be an object with family and n");
        }
        EncodingInfo info;
        info.family = e["family"].get<std::string>();
        info.n = require_uint(e["n"], "encoding.n");
        info.q = e.contains("q") ? require_uint(e["q"], "encoding.q") : 1;
        info.m = e.contains("m") ? require_uint(e["m"], "encoding.m") : 0;
        if (e.contains("codes")) {
            if (!e["codes"].is_array()) {
                bad("encoding.codes must be an array of bitstrings");
            }
            for (const auto& code : e["codes"]) {
                if (!code.is_string()) {
                    bad("encoding.codes entries must be strings");
                }
                info.codes.push_back(code.get<std::string>());
            }
        }
        if (e.contains("network")) {
            if (!e["network"].is_array()) {
                bad("encoding.network must be an array of lane pairs");
            }
            for (const auto& pair : e["network"]) {
                if (!pair.is_array() || pair.size() != 2) {
                    bad("encoding.network entries must be [low, high]");
                }
                info.network.emplace_back(
                    static_cast<std::uint32_t>(require_uint(pair[0], "network lane")),
                    static_cast<std::uint32_t>(require_uint(pair[1], "network lane")));
            }
        }
        netlist.encoding = std::move(info);
    }
    return netlist;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return content;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write file: " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw std::runtime_error("short write: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace monocirc
