#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rotset/documents.hpp"

namespace {

using rotset::Document;
using rotset::Format;

// Exit codes: 0 ok, 1 usage or parse error, 2 bound exceeded, 3 oracle mismatch.
constexpr int kExitUsage = 1;
constexpr int kExitBound = 2;
constexpr int kExitMismatch = 3;

int run(int argc, char** argv) {
  CLI::App app{"exact rotational orbits and rotational sets of angle-multiplying circle maps"};
  app.require_subcommand(1);

  int d = 0, p = 0, q = 0, k = 0;
  std::string format;
  bool force = false;
  std::string seq_text;
  std::string angles_text;
  std::string method = "both";
  rotset::OracleBounds bounds;

  auto add_common = [&](CLI::App* cmd, bool with_p, bool with_q) {
    cmd->add_option("--d", d, "degree (>= 2)")->required();
    if (with_p) cmd->add_option("--p", p, "rotation numerator")->required();
    if (with_q) cmd->add_option("--q", q, "rotation denominator")->required();
    cmd->add_option("--format", format, "output format");
    cmd->add_flag("--force", force, "lift the 4096-bit size guard");
  };

  CLI::App* orbits = app.add_subcommand("orbits", "enumerate all orbits for one rotation number");
  add_common(orbits, true, true);

  CLI::App* sets = app.add_subcommand("sets", "enumerate rotational sets grouped by orbit count");
  add_common(sets, true, true);
  CLI::Option* k_option = sets->add_option("--k", k, "restrict to sets of exactly k orbits");

  CLI::App* verify = app.add_subcommand("verify", "check whether a finite set is rotational");
  verify->add_option("--d", d, "degree (>= 2)")->required();
  verify->add_option("angles", angles_text, "comma-separated fractions a/b")->required();
  verify->add_option("--format", format, "output format");
  verify->add_flag("--force", force, "lift the 4096-bit size guard");

  CLI::App* from_seq = app.add_subcommand("from-seq", "build the orbit of one rep sequence");
  add_common(from_seq, true, true);
  from_seq->add_option("--seq", seq_text, "comma-separated rep sequence")->required();

  CLI::App* graph = app.add_subcommand("graph", "emit the interlacing graph");
  add_common(graph, true, true);

  CLI::App* count = app.add_subcommand("count", "count rotational sets by orbit count");
  count->add_option("--d", d, "degree (>= 2)")->required();
  count->add_option("--q", q, "rotation denominator")->required();
  count->add_option("--method", method, "recursive, closed or both");
  count->add_option("--format", format, "output format");

  CLI::App* oracle = app.add_subcommand("oracle-check", "cross-check against brute-force scans");
  add_common(oracle, true, true);
  oracle->add_option("--bound", bounds.max_denominator, "largest allowed denominator d^q-1");
  oracle->add_option("--subset-bound", bounds.max_subsets, "largest allowed subset count per k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (format.empty()) format = chosen == graph ? "dot" : "json";
  Format fmt = rotset::parse_format(format);

  auto guard = [&](int effective_q) {
    if (!force && rotset::exceeds_size_guard(d, effective_q)) {
      rotset::fail(rotset::ErrorKind::InvalidArgument,
                   "q * log2(d) exceeds 4096 bits; pass --force to proceed");
    }
  };

  Document doc;
  if (chosen == orbits) {
    guard(q);
    doc = rotset::orbits_document(d, p, q);
  } else if (chosen == sets) {
    guard(q);
    std::optional<int> k_value;
    if (k_option->count() > 0) k_value = k;
    doc = rotset::sets_document(d, p, q, k_value);
  } else if (chosen == verify) {
    std::vector<rotset::Angle> angles = rotset::parse_angle_list(angles_text);
    guard(static_cast<int>(angles.size()));
    doc = rotset::verify_document(d, angles);
  } else if (chosen == from_seq) {
    guard(q);
    doc = rotset::from_seq_document(d, p, q, rotset::parse_int_list(seq_text));
  } else if (chosen == graph) {
    guard(q);
    doc = rotset::graph_document(d, p, q);
  } else if (chosen == count) {
    doc = rotset::count_document(d, q, method);
  } else {
    doc = rotset::oracle_document(d, p, q, bounds);
  }

  std::cout << rotset::render(doc, fmt);
  if (chosen == oracle && !doc.body["payload"]["ok"].get<bool>()) return kExitMismatch;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rotset::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == rotset::ErrorKind::BoundExceeded ? kExitBound : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
