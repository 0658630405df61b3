#include "asymclust/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "asymclust/clustering.hpp"
#include "asymclust/error.hpp"

namespace asymclust {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Files

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path.string() + "'");
}

// ---------------------------------------------------------------------------
// CSV

namespace {

struct CsvLine {
  std::size_t number = 0;  // 1-based
  std::vector<std::string> fields;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// RFC 4180 style fields: double quotes may wrap a field, "" escapes a quote.
std::vector<std::string> split_csv(std::string_view line, std::size_t number) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false, was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && trim(field).empty()) {
      quoted = was_quoted = true;
      field.clear();
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : trim(field));
      field.clear();
      was_quoted = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "unterminated quoted field", {}, {}, number);
  fields.push_back(was_quoted ? field : trim(field));
  return fields;
}

std::vector<CsvLine> csv_lines(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<CsvLine> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++number;
    if (trim(raw).empty()) continue;
    lines.push_back({number, split_csv(raw, number)});
  }
  return lines;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos && trim(s) == s) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string matrix_csv(const std::vector<std::string>& labels, const Matrix& m) {
  std::string out = csv_row(labels);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      out += format_number(m(i, j));
    }
    out += '\n';
  }
  return out;
}

// Re-throws a Network validation error annotated with its source line.
Network build_network(std::vector<std::string> labels, const std::vector<std::vector<double>>& rows,
                      const std::vector<std::size_t>& row_lines, std::size_t header_line) {
  try {
    return Network(std::move(labels), rows);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DuplicateLabel) throw e.with_line(header_line);
    if (e.row() && *e.row() < row_lines.size()) throw e.with_line(row_lines[*e.row()]);
    throw;
  }
}

}  // namespace

Network parse_matrix_csv(std::string_view text) {
  const auto lines = csv_lines(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty matrix file", {}, {}, 1);
  std::vector<std::string> labels = lines.front().fields;
  const std::size_t n = labels.size();
  if (lines.size() - 1 != n) {
    throw Error(ErrorCode::NonSquare,
                std::to_string(lines.size() - 1) + " data rows for " + std::to_string(n) + " labels",
                {}, {}, lines.back().number);
  }
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> row_lines;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& line = lines[r];
    if (line.fields.size() != n) {
      throw Error(ErrorCode::NonSquare,
                  std::to_string(line.fields.size()) + " fields, expected " + std::to_string(n),
                  r - 1, {}, line.number);
    }
    auto& row = rows.emplace_back(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!parse_number(line.fields[j], row[j])) {
        throw Error(ErrorCode::ParseError, "not a number: '" + line.fields[j] + "'", r - 1, j,
                    line.number);
      }
    }
    row_lines.push_back(line.number);
  }
  return build_network(std::move(labels), rows, row_lines, lines.front().number);
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::vector<std::string> json_labels(const json& doc) {
  if (!doc.is_object() || !doc.contains("labels") || !doc["labels"].is_array())
    throw Error(ErrorCode::ParseError, "expected an object with a \"labels\" array");
  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw Error(ErrorCode::ParseError, "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

}  // namespace

Network parse_matrix_json(std::string_view text) {
  const json doc = parse_json(text);
  auto labels = json_labels(doc);
  if (!doc.contains("matrix") || !doc["matrix"].is_array())
    throw Error(ErrorCode::ParseError, "expected a \"matrix\" array");
  std::vector<std::vector<double>> rows;
  for (const auto& r : doc["matrix"]) {
    if (!r.is_array()) throw Error(ErrorCode::ParseError, "matrix rows must be arrays");
    auto& row = rows.emplace_back();
    for (const auto& v : r) {
      if (!v.is_number()) throw Error(ErrorCode::ParseError, "matrix entries must be numbers");
      row.push_back(v.get<double>());
    }
  }
  if (rows.size() != labels.size()) {
    throw Error(ErrorCode::NonSquare,
                std::to_string(rows.size()) + " rows for " + std::to_string(labels.size()) + " labels");
  }
  return Network(std::move(labels), rows);
}

namespace {

bool looks_like_json(const std::filesystem::path& path, std::string_view text) {
  if (path.extension() == ".json") return true;
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{';
}

}  // namespace

Network load_matrix(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  return looks_like_json(path, text) ? parse_matrix_json(text) : parse_matrix_csv(text);
}

// ---------------------------------------------------------------------------
// Edge lists

EdgeList::EdgeList(const std::vector<EdgeRecord>& raw) {
  std::map<std::pair<std::string, std::string>, unsigned long long> sums;
  std::set<std::string> labels;
  for (const auto& r : raw) {
    labels.insert(r.source);
    labels.insert(r.target);
    if (r.source == r.target) continue;
    sums[{r.source, r.target}] += r.count;
  }
  for (auto& [key, count] : sums) records_.push_back({key.first, key.second, count});
  labels_.assign(labels.begin(), labels.end());
}

EdgeList parse_edge_list_csv(std::string_view text) {
  const auto lines = csv_lines(text);
  if (lines.empty()) throw Error(ErrorCode::EmptyEdgeList, "no header");
  const std::vector<std::string> header = {"source", "target", "count"};
  if (lines.front().fields != header) {
    throw Error(ErrorCode::ParseError, "expected header source,target,count", {}, {},
                lines.front().number);
  }
  std::vector<EdgeRecord> raw;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& f = lines[r].fields;
    if (f.size() != 3) {
      throw Error(ErrorCode::ParseError, "expected 3 fields", {}, {}, lines[r].number);
    }
    unsigned long long count = 0;
    const auto [end, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), count);
    if (ec != std::errc{} || end != f[2].data() + f[2].size() || count == 0) {
      throw Error(ErrorCode::ParseError, "count must be a positive integer: '" + f[2] + "'", {}, {},
                  lines[r].number);
    }
    if (f[0].empty() || f[1].empty()) {
      throw Error(ErrorCode::ParseError, "empty node label", {}, {}, lines[r].number);
    }
    raw.push_back({f[0], f[1], count});
  }
  return EdgeList(raw);
}

EdgeList load_edge_list(const std::filesystem::path& path) {
  return parse_edge_list_csv(read_file(path));
}

NormalizationPolicy parse_policy(std::string_view name) {
  if (name == "inverse-normalized") return NormalizationPolicy::InverseNormalized;
  if (name == "scc") return NormalizationPolicy::LargestScc;
  throw Error(ErrorCode::UnknownPolicy, "'" + std::string(name) + "'");
}

std::string_view to_string(NormalizationPolicy p) {
  switch (p) {
    case NormalizationPolicy::InverseNormalized: return "inverse-normalized";
    case NormalizationPolicy::LargestScc: return "scc";
  }
  return "unknown";
}

namespace {

// Tarjan's algorithm, iterative. Returns the component index of every node.
std::vector<std::size_t> strong_components(const std::vector<std::vector<std::size_t>>& adj,
                                           std::size_t& count) {
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = adj.size();
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next edge)
  std::size_t next_index = 0;
  count = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge == 0 && index[v] == unvisited) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (edge < adj[v].size()) {
        const std::size_t w = adj[v][edge++];
        if (index[w] == unvisited) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

}  // namespace

Network counts_to_dissimilarity(const EdgeList& edges, NormalizationPolicy policy) {
  if (edges.empty()) throw Error(ErrorCode::EmptyEdgeList, "no edges");

  std::vector<std::string> labels = edges.labels();
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < labels.size(); ++i) position[labels[i]] = i;

  if (policy == NormalizationPolicy::LargestScc) {
    std::vector<std::vector<std::size_t>> adj(labels.size());
    for (const auto& r : edges.records()) adj[position[r.source]].push_back(position[r.target]);
    std::size_t count = 0;
    const auto comp = strong_components(adj, count);
    std::vector<std::size_t> sizes(count, 0);
    for (std::size_t c : comp) ++sizes[c];
    // Largest component; ties go to the one holding the smallest label.
    std::size_t best = comp[0];
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (sizes[comp[i]] > sizes[best]) best = comp[i];
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (comp[i] == best) kept.push_back(labels[i]);
    labels = std::move(kept);
    position.clear();
    for (std::size_t i = 0; i < labels.size(); ++i) position[labels[i]] = i;
  }

  const std::size_t n = labels.size();
  constexpr double missing = -1.0;
  Matrix raw(n, missing);
  double max_finite = 0.0;
  for (const auto& r : edges.records()) {
    auto s = position.find(r.source), t = position.find(r.target);
    if (s == position.end() || t == position.end()) continue;
    const double v = 1.0 / static_cast<double>(r.count);
    raw(s->second, t->second) = v;
    max_finite = std::max(max_finite, v);
  }
  const double cap = max_finite > 0.0 ? 2.0 * max_finite : 1.0;
  double global_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        raw(i, j) = 0.0;
        continue;
      }
      if (raw(i, j) == missing) raw(i, j) = cap;
      global_max = std::max(global_max, raw(i, j));
    }
  }
  if (global_max > 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) raw(i, j) /= global_max;
  }
  return Network(std::move(labels), std::move(raw));
}

// ---------------------------------------------------------------------------
// Trust bounds and comparison

std::string_view to_string(TrustClass c) {
  switch (c) {
    case TrustClass::CertainIn: return "CERTAIN-IN";
    case TrustClass::CertainOut: return "CERTAIN-OUT";
    case TrustClass::Ambiguous: return "AMBIGUOUS";
  }
  return "unknown";
}

TrustReport trust_bounds(const Network& net, double delta) {
  const auto lower = nonreciprocal(net);
  const auto upper = reciprocal(net);
  TrustReport report;
  report.labels = net.labels();
  report.delta = delta;
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      TrustPair p{i, j, lower(i, j), upper(i, j), TrustClass::Ambiguous};
      if (p.upper <= delta) {
        p.classification = TrustClass::CertainIn;
      } else if (p.lower > delta) {
        p.classification = TrustClass::CertainOut;
      }
      report.pairs.push_back(p);
    }
  }
  report.nonreciprocal_cut = cut(ultrametric_to_dendrogram(lower), delta);
  report.reciprocal_cut = cut(ultrametric_to_dendrogram(upper), delta);
  return report;
}

Comparison compare(const UltrametricMatrix& a, const UltrametricMatrix& b,
                   const std::vector<double>& extra_resolutions) {
  for (const auto* u : {&a, &b}) {
    if (u->labels.size() != u->values.size())
      throw Error(ErrorCode::LabelMismatch, "label count does not match matrix dimension");
    if (auto v = ultrametric_violation(u->values)) throw Error(ErrorCode::NotUltrametric, v->describe());
  }
  const std::size_t n = a.size();
  std::map<std::string, std::size_t> in_b;
  for (std::size_t i = 0; i < b.size(); ++i) in_b[b.labels[i]] = i;
  std::vector<std::size_t> to_b(n);
  if (b.size() != n) throw Error(ErrorCode::LabelMismatch, "inputs have different node counts");
  for (std::size_t i = 0; i < n; ++i) {
    auto it = in_b.find(a.labels[i]);
    if (it == in_b.end()) throw Error(ErrorCode::LabelMismatch, "label '" + a.labels[i] + "' missing");
    to_b[i] = it->second;
  }

  Comparison c;
  std::set<double> levels(extra_resolutions.begin(), extra_resolutions.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = a(i, j), y = b(to_b[i], to_b[j]);
      c.max_abs_difference = std::max(c.max_abs_difference, std::abs(x - y));
      levels.insert(x);
      levels.insert(y);
    }
  }
  const std::size_t pairs = n * (n - 1) / 2;
  for (double delta : levels) {
    std::size_t agree = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        agree += (a(i, j) <= delta) == (b(to_b[i], to_b[j]) <= delta);
    const double fraction = pairs ? static_cast<double>(agree) / static_cast<double>(pairs) : 1.0;
    c.levels.push_back({delta, agree == pairs, fraction});
  }
  return c;
}

// ---------------------------------------------------------------------------
// Export

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "newick") return Format::Newick;
  throw Error(ErrorCode::UnsupportedFormat, "'" + std::string(name) + "'");
}

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void unsupported(std::string_view what, Format f) {
  static constexpr std::string_view names[] = {"csv", "json", "newick"};
  throw Error(ErrorCode::UnsupportedFormat,
              std::string(names[static_cast<int>(f)]) + " output for " + std::string(what));
}

json matrix_json(const std::vector<std::string>& labels, const Matrix& m) {
  return json{{"labels", labels}, {"matrix", m.to_rows()}};
}

json partition_json(const Partition& p, const std::vector<std::string>& labels) {
  return json{{"resolution", p.resolution}, {"blocks", block_labels(p, labels)}};
}

json report_json(const VerificationReport& r) {
  json j{{"check", r.check_name}, {"passed", r.passed}, {"trials", r.trials}};
  if (r.counterexample) {
    j["counterexample"] = json{{"indices", r.counterexample->indices},
                               {"values", r.counterexample->values},
                               {"violated", r.counterexample->violated}};
  }
  if (!r.subchecks.empty()) {
    json subs = json::array();
    for (const auto& s : r.subchecks) subs.push_back(report_json(s));
    j["subchecks"] = std::move(subs);
  }
  return j;
}

void report_rows(const VerificationReport& r, const std::string& prefix, std::string& out) {
  const std::string path = prefix.empty() ? r.check_name : prefix + "/" + r.check_name;
  out += csv_row({path, r.passed ? "true" : "false", std::to_string(r.trials),
                  r.counterexample ? r.counterexample->violated : ""});
  for (const auto& s : r.subchecks) report_rows(s, path, out);
}

}  // namespace

std::string export_text(const UltrametricMatrix& u, Format f) {
  switch (f) {
    case Format::Csv: return matrix_csv(u.labels, u.values);
    case Format::Json: return dump(matrix_json(u.labels, u.values));
    case Format::Newick: break;
  }
  unsupported("an ultrametric", f);
}

std::string export_text(const Network& net, Format f) {
  switch (f) {
    case Format::Csv: return matrix_csv(net.labels(), net.dissim());
    case Format::Json: return dump(matrix_json(net.labels(), net.dissim()));
    case Format::Newick: break;
  }
  unsupported("a network", f);
}

std::string export_text(const Dendrogram& d, Format f) {
  switch (f) {
    case Format::Newick: return to_newick(d) + "\n";
    case Format::Json: {
      json events = json::array();
      for (const auto& e : d.events)
        events.push_back(json{{"resolution", e.resolution}, {"merged", e.merged}, {"new", e.new_cluster}});
      return dump(json{{"labels", d.labels}, {"events", std::move(events)}});
    }
    case Format::Csv: {
      std::string out = csv_row({"resolution", "new", "merged"});
      for (const auto& e : d.events) {
        std::string merged;
        for (std::size_t c : e.merged) merged += (merged.empty() ? "" : " ") + std::to_string(c);
        out += csv_row({format_number(e.resolution), std::to_string(e.new_cluster), merged});
      }
      return out;
    }
  }
  unsupported("a dendrogram", f);
}

std::string export_text(const Partition& p, const std::vector<std::string>& labels, Format f) {
  switch (f) {
    case Format::Json: return dump(partition_json(p, labels));
    case Format::Csv: {
      std::string out = csv_row({"label", "block"});
      for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (std::size_t x : p.blocks[b]) out += csv_row({labels.at(x), std::to_string(b)});
      return out;
    }
    case Format::Newick: break;
  }
  unsupported("a partition", f);
}

std::string export_text(const VerificationReport& r, Format f) {
  switch (f) {
    case Format::Json: return dump(report_json(r));
    case Format::Csv: {
      std::string out = csv_row({"check", "passed", "trials", "violated"});
      report_rows(r, "", out);
      return out;
    }
    case Format::Newick: break;
  }
  unsupported("a verification report", f);
}

std::string export_text(const TrustReport& r, Format f) {
  switch (f) {
    case Format::Json: {
      json pairs = json::array();
      for (const auto& p : r.pairs) {
        pairs.push_back(json{{"a", r.labels[p.first]},
                             {"b", r.labels[p.second]},
                             {"nonreciprocal", p.lower},
                             {"reciprocal", p.upper},
                             {"class", to_string(p.classification)}});
      }
      return dump(json{{"delta", r.delta},
                       {"labels", r.labels},
                       {"pairs", std::move(pairs)},
                       {"nonreciprocal_cut", partition_json(r.nonreciprocal_cut, r.labels)},
                       {"reciprocal_cut", partition_json(r.reciprocal_cut, r.labels)}});
    }
    case Format::Csv: {
      std::string out = csv_row({"a", "b", "nonreciprocal", "reciprocal", "class"});
      for (const auto& p : r.pairs) {
        out += csv_row({r.labels[p.first], r.labels[p.second], format_number(p.lower),
                        format_number(p.upper), std::string(to_string(p.classification))});
      }
      return out;
    }
    case Format::Newick: break;
  }
  unsupported("a trust report", f);
}

std::string export_text(const Comparison& c, Format f) {
  switch (f) {
    case Format::Json: {
      json levels = json::array();
      for (const auto& l : c.levels)
        levels.push_back(json{{"resolution", l.resolution},
                              {"identical", l.identical},
                              {"pair_agreement", l.pair_agreement}});
      return dump(json{{"max_abs_difference", c.max_abs_difference}, {"levels", std::move(levels)}});
    }
    case Format::Csv: {
      std::string out = csv_row({"resolution", "identical", "pair_agreement"});
      for (const auto& l : c.levels)
        out += csv_row({format_number(l.resolution), l.identical ? "true" : "false",
                        format_number(l.pair_agreement)});
      return out;
    }
    case Format::Newick: break;
  }
  unsupported("a comparison", f);
}

// ---------------------------------------------------------------------------
// Tree JSON

Dendrogram parse_dendrogram_json(std::string_view text) {
  const json doc = parse_json(text);
  Dendrogram d{json_labels(doc), {}};
  if (!doc.contains("events") || !doc["events"].is_array())
    throw Error(ErrorCode::ParseError, "expected an \"events\" array");
  for (const auto& e : doc["events"]) {
    if (!e.is_object() || !e.contains("resolution") || !e.contains("merged") || !e.contains("new") ||
        !e["resolution"].is_number() || !e["merged"].is_array() || !e["new"].is_number_unsigned()) {
      throw Error(ErrorCode::ParseError, "events need numeric resolution, merged array and new id");
    }
    MergeEvent ev;
    ev.resolution = e["resolution"].get<double>();
    ev.new_cluster = e["new"].get<std::size_t>();
    for (const auto& c : e["merged"]) {
      if (!c.is_number_unsigned()) throw Error(ErrorCode::ParseError, "cluster ids are non-negative integers");
      ev.merged.push_back(c.get<std::size_t>());
    }
    d.events.push_back(std::move(ev));
  }
  return d;
}

UltrametricMatrix load_ultrametric(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (looks_like_json(path, text)) {
    const json doc = parse_json(text);
    if (doc.is_object() && doc.contains("events")) {
      return dendrogram_to_ultrametric(parse_dendrogram_json(text));
    }
    const Network net = parse_matrix_json(text);
    return {net.labels(), net.dissim()};
  }
  const Network net = parse_matrix_csv(text);
  return {net.labels(), net.dissim()};
}

}  // namespace asymclust
