#pragma once

/// @file netlist_json.hpp
/// @brief Canonical JSON netlist format.
///
/// Document shape (version 1):
///   {"version":1,"label":...,"inputs":[names],"gates":[["and"|"or",l,r],...],
///    "outputs":[refs],"encoding":{...}}
/// Refs are dense node indices: input j is ref j, gate t is ref inputs+t, and
/// every gate may only reference earlier nodes. Serialization is canonical,
/// so parse + re-serialize reproduces the input byte for byte.

#include "monocirc/circuit.hpp"

#include <filesystem>
#include <optional>
#include <utility>

namespace monocirc {

/// Optional codebook metadata carried inside a netlist.
/// Families: a0 | a1 | custom (codes stored), pi_comparator (network stored,
/// codes reproducible from it), pi1_matrix, conv, matmul.
struct EncodingInfo {
    std::string family;
    std::size_t n = 0;
    std::size_t q = 1;
    std::size_t m = 0;
    std::vector<std::string> codes; // bitstrings, position i = bit i
    std::vector<std::pair<std::uint32_t, std::uint32_t>> network;
};

struct Netlist {
    Circuit circuit;
    std::optional<EncodingInfo> encoding;
};

std::string netlist_to_json(const Circuit& c,
                            const std::optional<EncodingInfo>& encoding = std::nullopt);

/// Throws std::runtime_error with a diagnostic on malformed documents
/// (including fan-in arity and reference-order violations).
Netlist netlist_from_json(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace monocirc
