#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rotset/interlacing_graph.hpp"
#include "rotset/oracle.hpp"

namespace rotset {

enum class Format { json, csv, text, dot };

// Accepts "json", "csv", "text", "dot"; throws ParseError otherwise.
Format parse_format(const std::string& text);

// Comma-separated "a/b" fractions in [0, 1). Throws ParseError.
std::vector<Angle> parse_angle_list(const std::string& text);

// Comma-separated nonnegative decimal integers. Throws ParseError.
std::vector<int> parse_int_list(const std::string& text);

// True when q * log2(d) exceeds 4096 bits, the guard for materializing d^q - 1.
bool exceeds_size_guard(int d, int q);

// One command result. body carries the stable schema:
//   { "schema_version": "1", "command": ..., "parameters": {"d", "p", "q"}, "payload": ... }
// All fractions appear as decimal-string pairs {"num": "...", "den": "..."}.
struct Document {
  nlohmann::ordered_json body;
};

Document orbits_document(int d, int p, int q);
Document from_seq_document(int d, int p, int q, const std::vector<int>& seq);
Document sets_document(int d, int p, int q, std::optional<int> k);
Document verify_document(int d, const std::vector<Angle>& angles);
Document graph_document(int d, int p, int q);
Document count_document(int d, int q, const std::string& method);
Document oracle_document(int d, int p, int q, const OracleBounds& bounds);

// Renders a document byte-deterministically. csv is available for orbits,
// from-seq, sets and count; dot only for graph; json and text for every command.
std::string render(const Document& doc, Format format);

}  // namespace rotset
