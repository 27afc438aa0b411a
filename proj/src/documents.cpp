#include "rotset/documents.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "rotset/counting.hpp"

namespace rotset {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trimmed(const std::string& s) {
  std::size_t first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  std::size_t last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

ordered_json angle_json(const Angle& a) {
  return ordered_json{{"num", a.num().str()}, {"den", a.den().str()}};
}

ordered_json int_array(const std::vector<int>& values) {
  ordered_json arr = ordered_json::array();
  for (int v : values) arr.push_back(v);
  return arr;
}

ordered_json orbit_record(const RepSequence& rep, const RotationalOrbit& orbit) {
  ordered_json record;
  record["rep_sequence"] = int_array(rep.terms);
  record["least_tuple"] = int_array(orbit.least_tuple.digits);
  ordered_json angles = ordered_json::array();
  for (const Angle& a : orbit.angles) angles.push_back(angle_json(a));
  record["angles"] = angles;
  return record;
}

ordered_json set_record(const RotationalSet& set) {
  ordered_json record;
  record["orbit_count"] = set.orbit_count;
  record["raw_shift"] = ordered_json{{"p", set.raw_shift.p_raw}, {"size", set.raw_shift.size}};
  record["reduced"] =
      ordered_json{{"p", set.reduced_rotation.p}, {"q", set.reduced_rotation.q}};
  ordered_json orbits = ordered_json::array();
  for (const RotationalOrbit& orbit : set.orbits) {
    orbits.push_back(orbit_record(least_tuple_to_rep(orbit.least_tuple, set.reduced_rotation), orbit));
  }
  record["orbits"] = orbits;
  return record;
}

ordered_json params_json(int d, std::optional<int> p, std::optional<int> q) {
  ordered_json params;
  params["d"] = d;
  if (p) {
    params["p"] = *p;
  } else {
    params["p"] = nullptr;
  }
  if (q) {
    params["q"] = *q;
  } else {
    params["q"] = nullptr;
  }
  return params;
}

Document make_doc(const std::string& command, ordered_json params, ordered_json payload) {
  Document doc;
  doc.body["schema_version"] = "1";
  doc.body["command"] = command;
  doc.body["parameters"] = std::move(params);
  doc.body["payload"] = std::move(payload);
  return doc;
}

// ---- rendering helpers ----------------------------------------------------

std::string digits_joined(const ordered_json& arr, int d, const char* wide_sep = ",") {
  std::string out;
  bool first = true;
  for (const auto& v : arr) {
    if (!first && d > 10) out += wide_sep;
    out += std::to_string(v.get<int>());
    first = false;
  }
  return out;
}

std::string digits_spaced(const ordered_json& arr) {
  std::string out;
  bool first = true;
  for (const auto& v : arr) {
    if (!first) out += ' ';
    out += std::to_string(v.get<int>());
    first = false;
  }
  return out;
}

std::string angle_text(const ordered_json& record) {
  return record["num"].get<std::string>() + "/" + record["den"].get<std::string>();
}

std::string angles_joined(const ordered_json& arr) {
  std::string out;
  bool first = true;
  for (const auto& record : arr) {
    if (!first) out += ' ';
    out += angle_text(record);
    first = false;
  }
  return out;
}

// Numerators over the common denominator, derived from the reduced records.
std::string common_numerators(const ordered_json& arr, const Int& denom) {
  std::string out;
  bool first = true;
  for (const auto& record : arr) {
    Int num(record["num"].get<std::string>());
    Int den(record["den"].get<std::string>());
    if (!first) out += ' ';
    out += Int(num * (denom / den)).str();
    first = false;
  }
  return out;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string render_orbit_lines(const ordered_json& payload, int d, const std::string& head) {
  std::ostringstream out;
  Int denom(payload["common_denominator"].get<std::string>());
  out << head;
  int index = 0;
  for (const auto& record : payload["orbits"]) {
    out << "[" << index++ << "] rep " << digits_joined(record["rep_sequence"], d) << "\n"
        << "    least tuple " << digits_joined(record["least_tuple"], d) << "\n"
        << "    angles " << angles_joined(record["angles"]) << "\n"
        << "    over " << denom.str() << ": " << common_numerators(record["angles"], denom) << "\n";
  }
  return out.str();
}

std::string render_orbits_csv(const ordered_json& payload) {
  std::ostringstream out;
  Int denom(payload["common_denominator"].get<std::string>());
  out << "index,rep_sequence,least_tuple,angles,common_denominator,common_numerators\n";
  int index = 0;
  for (const auto& record : payload["orbits"]) {
    out << index++ << ',' << csv_field(digits_spaced(record["rep_sequence"])) << ','
        << csv_field(digits_spaced(record["least_tuple"])) << ','
        << csv_field(angles_joined(record["angles"])) << ',' << denom.str() << ','
        << csv_field(common_numerators(record["angles"], denom)) << "\n";
  }
  return out.str();
}

std::string render_set_text(const ordered_json& record, int d, int index) {
  std::ostringstream out;
  out << "[" << index << "] k=" << record["orbit_count"].get<int>() << " raw "
      << record["raw_shift"]["p"].get<int>() << "/" << record["raw_shift"]["size"].get<int>()
      << " reduced " << record["reduced"]["p"].get<int>() << "/"
      << record["reduced"]["q"].get<int>() << "\n";
  int oi = 0;
  for (const auto& orbit : record["orbits"]) {
    out << "    orbit " << oi++ << ": rep " << digits_joined(orbit["rep_sequence"], d) << " least "
        << digits_joined(orbit["least_tuple"], d) << " angles " << angles_joined(orbit["angles"])
        << "\n";
  }
  return out.str();
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  if (text == "dot") return Format::dot;
  fail(ErrorKind::ParseError, "unknown format \"" + text + "\" (expected json, csv, text or dot)");
}

std::vector<Angle> parse_angle_list(const std::string& text) {
  std::vector<Angle> angles;
  for (const std::string& part : split_commas(text)) {
    std::string token = trimmed(part);
    if (token.empty()) fail(ErrorKind::ParseError, "empty entry in angle list");
    angles.push_back(Angle::parse(token));
  }
  return angles;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  for (const std::string& part : split_commas(text)) {
    std::string token = trimmed(part);
    if (token.empty()) fail(ErrorKind::ParseError, "empty entry in integer list");
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        fail(ErrorKind::ParseError, "expected a nonnegative integer, got \"" + token + "\"");
      }
    }
    try {
      values.push_back(std::stoi(token));
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "integer out of range: \"" + token + "\"");
    }
  }
  return values;
}

bool exceeds_size_guard(int d, int q) {
  return static_cast<double>(q) * std::log2(static_cast<double>(d)) > 4096.0;
}

Document orbits_document(int d, int p, int q) {
  RotationNumber rot = RotationNumber::make(p, q);
  std::vector<RepSequence> reps = enumerate_rep_sequences(d, q);
  ordered_json payload;
  payload["rotation"] = ordered_json{{"p", rot.p}, {"q", rot.q}};
  payload["orbit_count"] = static_cast<std::int64_t>(reps.size());
  payload["common_denominator"] = common_denominator(d, q).str();
  ordered_json orbits = ordered_json::array();
  for (const auto& rep : reps) orbits.push_back(orbit_record(rep, orbit_from_rep(rep, rot)));
  payload["orbits"] = orbits;
  return make_doc("orbits", params_json(d, p, q), std::move(payload));
}

Document from_seq_document(int d, int p, int q, const std::vector<int>& seq) {
  RotationNumber rot = RotationNumber::make(p, q);
  RepSequence rep = RepSequence::make(d, seq);
  if (rep.length() != q) {
    fail(ErrorKind::InvalidSequence, "sequence length " + std::to_string(rep.length()) +
                                         " does not match q = " + std::to_string(q));
  }
  ordered_json payload;
  payload["seq"] = int_array(seq);
  payload["common_denominator"] = common_denominator(d, q).str();
  payload["orbit"] = orbit_record(rep, orbit_from_rep(rep, rot));
  return make_doc("from-seq", params_json(d, p, q), std::move(payload));
}

Document sets_document(int d, int p, int q, std::optional<int> k) {
  RotationNumber rot = RotationNumber::make(p, q);
  if (k && (*k < 1 || *k > d - 1)) {
    fail(ErrorKind::InvalidArgument,
         "orbit count k must satisfy 1 <= k <= d-1, got " + std::to_string(*k));
  }
  std::vector<Int> recursive = count_sets_recursive(d, q);
  std::vector<Int> closed = count_sets_closed(d, q);

  ordered_json payload;
  payload["k"] = k ? ordered_json(*k) : ordered_json(nullptr);
  payload["common_denominator"] = common_denominator(d, q).str();

  std::vector<int> wanted;
  if (k) {
    wanted.push_back(*k);
  } else {
    for (int kk = 1; kk <= d - 1; ++kk) wanted.push_back(kk);
  }
  std::vector<std::int64_t> enumerated_counts(d - 1, -1);
  ordered_json sets = ordered_json::array();
  for (int kk : wanted) {
    std::vector<RotationalSet> list = enumerate_sets(d, rot, kk);
    enumerated_counts[kk - 1] = static_cast<std::int64_t>(list.size());
    for (const auto& set : list) sets.push_back(set_record(set));
  }

  ordered_json table = ordered_json::array();
  for (int kk = 1; kk <= d - 1; ++kk) {
    ordered_json row;
    row["k"] = kk;
    row["recursive"] = recursive[kk - 1].str();
    row["closed"] = closed[kk - 1].str();
    row["enumerated"] = enumerated_counts[kk - 1] >= 0 ? ordered_json(enumerated_counts[kk - 1])
                                                       : ordered_json(nullptr);
    table.push_back(row);
  }
  payload["counts"] = table;
  payload["set_count"] = static_cast<std::int64_t>(sets.size());
  payload["sets"] = sets;
  return make_doc("sets", params_json(d, p, q), std::move(payload));
}

Document verify_document(int d, const std::vector<Angle>& angles) {
  if (d < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  if (angles.empty()) fail(ErrorKind::InvalidArgument, "verify requires at least one angle");
  std::vector<Angle> input = angles;
  std::sort(input.begin(), input.end());
  input.erase(std::unique(input.begin(), input.end()), input.end());

  ordered_json payload;
  ordered_json input_json = ordered_json::array();
  for (const Angle& a : input) input_json.push_back(angle_json(a));
  payload["input"] = input_json;
  payload["input_count"] = static_cast<std::int64_t>(input.size());

  auto det = detect_rotation(d, input);
  payload["rotational"] = det.has_value();
  if (!det) {
    payload["raw_shift"] = nullptr;
    payload["reduced"] = nullptr;
    payload["orbit_count"] = nullptr;
    payload["orbits"] = nullptr;
  } else {
    RotationalSet set = verify_set(d, input);
    payload["raw_shift"] = ordered_json{{"p", set.raw_shift.p_raw}, {"size", set.raw_shift.size}};
    payload["reduced"] =
        ordered_json{{"p", set.reduced_rotation.p}, {"q", set.reduced_rotation.q}};
    payload["orbit_count"] = set.orbit_count;
    ordered_json orbits = ordered_json::array();
    for (const RotationalOrbit& orbit : set.orbits) {
      orbits.push_back(
          orbit_record(least_tuple_to_rep(orbit.least_tuple, set.reduced_rotation), orbit));
    }
    payload["orbits"] = orbits;
  }
  return make_doc("verify", params_json(d, std::nullopt, std::nullopt), std::move(payload));
}

Document graph_document(int d, int p, int q) {
  RotationNumber rot = RotationNumber::make(p, q);
  InterlacingGraph graph = build_graph(d, rot);
  ordered_json payload;
  payload["rotation"] = ordered_json{{"p", rot.p}, {"q", rot.q}};
  payload["vertex_count"] = static_cast<std::int64_t>(graph.vertices.size());
  payload["edge_count"] = static_cast<std::int64_t>(graph.edges.size());
  ordered_json vertices = ordered_json::array();
  for (const auto& rep : graph.vertices) vertices.push_back(rep_label(rep));
  payload["vertices"] = vertices;
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : graph.edges) edges.push_back(ordered_json::array({u, v}));
  payload["edges"] = edges;
  ordered_json clique_counts;
  ordered_json cliques;
  for (const auto& [size, list] : graph.cliques_by_size) {
    std::string key = std::to_string(size);
    clique_counts[key] = static_cast<std::int64_t>(list.size());
    ordered_json entries = ordered_json::array();
    for (const auto& clique : list) {
      ordered_json entry = ordered_json::array();
      for (int v : clique) entry.push_back(v);
      entries.push_back(entry);
    }
    cliques[key] = entries;
  }
  payload["clique_counts"] = clique_counts;
  payload["cliques"] = cliques;
  return make_doc("graph", params_json(d, p, q), std::move(payload));
}

Document count_document(int d, int q, const std::string& method) {
  if (method != "recursive" && method != "closed" && method != "both") {
    fail(ErrorKind::ParseError,
         "unknown method \"" + method + "\" (expected recursive, closed or both)");
  }
  if (d < 2) fail(ErrorKind::InvalidArgument, "degree must be at least 2");
  bool want_recursive = method != "closed";
  bool want_closed = method != "recursive";
  std::vector<Int> recursive, closed;
  if (want_recursive) recursive = count_sets_recursive(d, q);
  if (want_closed) closed = count_sets_closed(d, q);
  if (method == "both" && recursive != closed) {
    fail(ErrorKind::InternalError, "recursive and closed counts disagree");
  }
  ordered_json payload;
  payload["method"] = method;
  payload["orbit_count"] = count_orbits(d, q).str();
  ordered_json table = ordered_json::array();
  Int total_recursive = 0, total_closed = 0;
  for (int k = 1; k <= d - 1; ++k) {
    ordered_json row;
    row["k"] = k;
    if (want_recursive) {
      row["recursive"] = recursive[k - 1].str();
      total_recursive += recursive[k - 1];
    }
    if (want_closed) {
      row["closed"] = closed[k - 1].str();
      total_closed += closed[k - 1];
    }
    table.push_back(row);
  }
  payload["table"] = table;
  ordered_json total;
  if (want_recursive) total["recursive"] = total_recursive.str();
  if (want_closed) total["closed"] = total_closed.str();
  payload["total"] = total;
  return make_doc("count", params_json(d, std::nullopt, q), std::move(payload));
}

Document oracle_document(int d, int p, int q, const OracleBounds& bounds) {
  RotationNumber rot = RotationNumber::make(p, q);
  OracleReport report = cross_check(d, rot, bounds);
  std::vector<Int> expected = count_sets_recursive(d, q);
  ordered_json payload;
  payload["bounds"] = ordered_json{{"max_denominator", bounds.max_denominator},
                                   {"max_subsets", bounds.max_subsets}};
  payload["orbits_found"] = report.orbits_found;
  payload["expected_orbits"] = count_orbits(d, q).str();
  ordered_json found = ordered_json::array();
  for (std::int64_t c : report.sets_found_by_k) found.push_back(c);
  payload["sets_found_by_k"] = found;
  ordered_json expected_json = ordered_json::array();
  for (const Int& c : expected) expected_json.push_back(c.str());
  payload["expected_sets"] = expected_json;
  ordered_json mismatches = ordered_json::array();
  for (const std::string& m : report.mismatches) mismatches.push_back(m);
  payload["mismatches"] = mismatches;
  payload["ok"] = report.ok();
  return make_doc("oracle-check", params_json(d, p, q), std::move(payload));
}

std::string render(const Document& doc, Format format) {
  if (format == Format::json) return doc.body.dump(2) + "\n";

  const std::string command = doc.body["command"].get<std::string>();
  const ordered_json& params = doc.body["parameters"];
  const ordered_json& payload = doc.body["payload"];
  int d = params["d"].get<int>();

  if (format == Format::dot) {
    if (command != "graph") {
      fail(ErrorKind::ParseError, "dot output is only available for the graph command");
    }
    std::ostringstream out;
    out << "graph rotset {\n";
    for (const auto& label : payload["vertices"]) {
      out << "  \"" << label.get<std::string>() << "\";\n";
    }
    for (const auto& edge : payload["edges"]) {
      out << "  \"" << payload["vertices"][edge[0].get<int>()].get<std::string>() << "\" -- \""
          << payload["vertices"][edge[1].get<int>()].get<std::string>() << "\";\n";
    }
    out << "}\n";
    return out.str();
  }

  if (format == Format::csv) {
    std::ostringstream out;
    if (command == "orbits") return render_orbits_csv(payload);
    if (command == "from-seq") {
      ordered_json wrapped;
      wrapped["common_denominator"] = payload["common_denominator"];
      wrapped["orbits"] = ordered_json::array({payload["orbit"]});
      return render_orbits_csv(wrapped);
    }
    if (command == "sets") {
      out << "index,orbit_count,raw_p,raw_size,reduced_p,reduced_q,rep_sequences,angles\n";
      int index = 0;
      for (const auto& record : payload["sets"]) {
        std::string reps;
        std::string angles;
        bool first = true;
        for (const auto& orbit : record["orbits"]) {
          if (!first) reps += '|';
          reps += digits_joined(orbit["rep_sequence"], d);
          for (const auto& a : orbit["angles"]) {
            if (!angles.empty()) angles += ' ';
            angles += angle_text(a);
          }
          first = false;
        }
        out << index++ << ',' << record["orbit_count"].get<int>() << ','
            << record["raw_shift"]["p"].get<int>() << ',' << record["raw_shift"]["size"].get<int>()
            << ',' << record["reduced"]["p"].get<int>() << ',' << record["reduced"]["q"].get<int>()
            << ',' << csv_field(reps) << ',' << csv_field(angles) << "\n";
      }
      return out.str();
    }
    if (command == "count") {
      bool recursive = payload["method"] != "closed";
      bool closed = payload["method"] != "recursive";
      out << "k";
      if (recursive) out << ",recursive";
      if (closed) out << ",closed";
      out << "\n";
      for (const auto& row : payload["table"]) {
        out << row["k"].get<int>();
        if (recursive) out << ',' << row["recursive"].get<std::string>();
        if (closed) out << ',' << row["closed"].get<std::string>();
        out << "\n";
      }
      out << "total";
      if (recursive) out << ',' << payload["total"]["recursive"].get<std::string>();
      if (closed) out << ',' << payload["total"]["closed"].get<std::string>();
      out << "\n";
      return out.str();
    }
    fail(ErrorKind::ParseError, "csv output is not available for the " + command + " command");
  }

  // text
  std::ostringstream out;
  if (command == "orbits") {
    std::ostringstream head;
    head << "orbits: degree " << d << ", rotation " << params["p"].get<int>() << "/"
         << params["q"].get<int>() << "\n"
         << "orbit count: " << payload["orbit_count"].get<std::int64_t>() << "\n"
         << "common denominator: " << payload["common_denominator"].get<std::string>() << "\n";
    return render_orbit_lines(payload, d, head.str());
  }
  if (command == "from-seq") {
    ordered_json wrapped;
    wrapped["common_denominator"] = payload["common_denominator"];
    wrapped["orbits"] = ordered_json::array({payload["orbit"]});
    std::ostringstream head;
    head << "from-seq: degree " << d << ", rotation " << params["p"].get<int>() << "/"
         << params["q"].get<int>() << ", seq " << digits_joined(payload["seq"], d) << "\n"
         << "common denominator: " << payload["common_denominator"].get<std::string>() << "\n";
    return render_orbit_lines(wrapped, d, head.str());
  }
  if (command == "sets") {
    out << "sets: degree " << d << ", rotation " << params["p"].get<int>() << "/"
        << params["q"].get<int>() << "\n";
    out << "counts:";
    for (const auto& row : payload["counts"]) {
      out << " k=" << row["k"].get<int>() << " recursive " << row["recursive"].get<std::string>()
          << " closed " << row["closed"].get<std::string>();
      if (!row["enumerated"].is_null()) {
        out << " enumerated " << row["enumerated"].get<std::int64_t>();
      }
      out << ";";
    }
    out << "\n"
        << "common denominator: " << payload["common_denominator"].get<std::string>() << "\n"
        << "set count: " << payload["set_count"].get<std::int64_t>() << "\n";
    int index = 0;
    for (const auto& record : payload["sets"]) out << render_set_text(record, d, index++);
    return out.str();
  }
  if (command == "verify") {
    out << "verify: degree " << d << ", " << payload["input_count"].get<std::int64_t>()
        << " distinct angles\n";
    out << "rotational: " << (payload["rotational"].get<bool>() ? "yes" : "no") << "\n";
    if (payload["rotational"].get<bool>()) {
      out << "raw shift: " << payload["raw_shift"]["p"].get<int>() << " over "
          << payload["raw_shift"]["size"].get<int>() << "\n"
          << "rotation number: " << payload["reduced"]["p"].get<int>() << "/"
          << payload["reduced"]["q"].get<int>() << "\n"
          << "orbits: " << payload["orbit_count"].get<int>() << "\n";
      int index = 0;
      for (const auto& orbit : payload["orbits"]) {
        out << "orbit " << index++ << ": rep " << digits_joined(orbit["rep_sequence"], d)
            << " least " << digits_joined(orbit["least_tuple"], d) << " angles "
            << angles_joined(orbit["angles"]) << "\n";
      }
    }
    return out.str();
  }
  if (command == "graph") {
    out << "graph: degree " << d << ", rotation " << params["p"].get<int>() << "/"
        << params["q"].get<int>() << "\n"
        << "vertices: " << payload["vertex_count"].get<std::int64_t>() << "\n"
        << "edges: " << payload["edge_count"].get<std::int64_t>() << "\n"
        << "cliques:";
    for (const auto& [key, value] : payload["clique_counts"].items()) {
      out << " k=" << key << " " << value.get<std::int64_t>() << ";";
    }
    out << "\n";
    for (const auto& label : payload["vertices"]) {
      out << "vertex: " << label.get<std::string>() << "\n";
    }
    for (const auto& edge : payload["edges"]) {
      out << "edge: " << payload["vertices"][edge[0].get<int>()].get<std::string>() << " -- "
          << payload["vertices"][edge[1].get<int>()].get<std::string>() << "\n";
    }
    return out.str();
  }
  if (command == "count") {
    out << "count: degree " << d << ", denominator " << params["q"].get<int>() << "\n"
        << "orbit count: " << payload["orbit_count"].get<std::string>() << "\n";
    for (const auto& row : payload["table"]) {
      out << "k=" << row["k"].get<int>() << ":";
      if (row.contains("recursive")) out << " recursive " << row["recursive"].get<std::string>();
      if (row.contains("closed")) out << " closed " << row["closed"].get<std::string>();
      out << "\n";
    }
    out << "total:";
    if (payload["total"].contains("recursive")) {
      out << " recursive " << payload["total"]["recursive"].get<std::string>();
    }
    if (payload["total"].contains("closed")) {
      out << " closed " << payload["total"]["closed"].get<std::string>();
    }
    out << "\n";
    return out.str();
  }
  if (command == "oracle-check") {
    out << "oracle-check: degree " << d << ", rotation " << params["p"].get<int>() << "/"
        << params["q"].get<int>() << "\n"
        << "bounds: denominator " << payload["bounds"]["max_denominator"].get<std::int64_t>()
        << ", subsets " << payload["bounds"]["max_subsets"].get<std::int64_t>() << "\n"
        << "orbits found: " << payload["orbits_found"].get<std::int64_t>() << " (expected "
        << payload["expected_orbits"].get<std::string>() << ")\n"
        << "sets found:";
    for (std::size_t k = 0; k < payload["sets_found_by_k"].size(); ++k) {
      out << " k=" << (k + 1) << " " << payload["sets_found_by_k"][k].get<std::int64_t>()
          << " (expected " << payload["expected_sets"][k].get<std::string>() << ");";
    }
    out << "\n";
    for (const auto& m : payload["mismatches"]) {
      out << "mismatch: " << m.get<std::string>() << "\n";
    }
    out << "result: " << (payload["ok"].get<bool>() ? "ok" : "mismatch") << "\n";
    return out.str();
  }
  fail(ErrorKind::InternalError, "no text renderer for command " + command);
}

}  // namespace rotset
