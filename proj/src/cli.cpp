#include "asymclust/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "asymclust/clustering.hpp"
#include "asymclust/dendrogram.hpp"
#include "asymclust/error.hpp"
#include "asymclust/io.hpp"
#include "asymclust/verify.hpp"

namespace asymclust {

namespace {

constexpr int kExitUsage = 64;

using json = nlohmann::json;

struct ClusterOptions {
  std::string input;
  std::string method = "both";
  std::string output_ultrametric;
  std::string output_tree;
  std::vector<double> cuts;
  std::string format = "json";
};

struct IngestOptions {
  std::string input;
  std::string policy = "inverse-normalized";
  std::string output;
  std::string format = "csv";
};

struct TrustOptions {
  std::string input;
  double delta = 0.0;
  std::string format = "json";
};

struct VerifyOptions {
  std::string suite = "all";
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::size_t bound = kDefaultEnumerationBound;
  std::string format = "json";
};

struct CompareOptions {
  std::string first;
  std::string second;
  std::vector<double> cuts;
  std::string format = "json";
};

// "out.csv" with method "reciprocal" becomes "out.reciprocal.csv" when more
// than one method is written.
std::filesystem::path per_method(const std::string& path, Method m, bool several) {
  std::filesystem::path p(path);
  if (!several) return p;
  auto stem = p.stem().string() + "." + std::string(to_string(m));
  return p.parent_path() / (stem + p.extension().string());
}

bool is_json_path(const std::filesystem::path& p) { return p.extension() == ".json"; }

std::vector<Method> methods_for(const std::string& name) {
  if (name == "both") return {Method::Nonreciprocal, Method::Reciprocal};
  return {parse_method(name)};
}

int run_cluster(const ClusterOptions& o, std::ostream& out) {
  const Network net = load_matrix(o.input);
  const auto methods = methods_for(o.method);
  const Format format = parse_format(o.format);
  if (format == Format::Newick) throw Error(ErrorCode::UnsupportedFormat, "cluster prints csv or json");
  const bool several = methods.size() > 1;

  json results = json::array();
  std::string csv;
  for (Method m : methods) {
    const auto u = run_method(m, net);
    const auto tree = ultrametric_to_dendrogram(u);
    if (!o.output_ultrametric.empty()) {
      const auto path = per_method(o.output_ultrametric, m, several);
      write_file(path, export_text(u, is_json_path(path) ? Format::Json : Format::Csv));
    }
    if (!o.output_tree.empty()) {
      const auto path = per_method(o.output_tree, m, several);
      write_file(path, export_text(tree, is_json_path(path) ? Format::Json : Format::Newick));
    }
    if (format == Format::Csv) {
      csv += "# " + std::string(to_string(m)) + "\n" + export_text(u, Format::Csv);
      for (double delta : o.cuts) {
        csv += "# " + std::string(to_string(m)) + " cut " + format_number(delta) + "\n" +
               export_text(cut(tree, delta), u.labels, Format::Csv);
      }
      continue;
    }
    json cuts = json::array();
    for (double delta : o.cuts) cuts.push_back(json::parse(export_text(cut(tree, delta), u.labels, Format::Json)));
    results.push_back(json{{"method", to_string(m)},
                           {"ultrametric", json::parse(export_text(u, Format::Json))},
                           {"tree", json::parse(export_text(tree, Format::Json))},
                           {"newick", to_newick(tree)},
                           {"cuts", std::move(cuts)}});
  }
  if (format == Format::Csv) {
    out << csv;
  } else {
    out << json{{"labels", net.labels()}, {"results", std::move(results)}}.dump(2) << "\n";
  }
  return kExitOk;
}

int run_ingest(const IngestOptions& o, std::ostream& out) {
  const Network net = counts_to_dissimilarity(load_edge_list(o.input), parse_policy(o.policy));
  Format format = parse_format(o.format);
  if (!o.output.empty()) {
    const std::filesystem::path path(o.output);
    write_file(path, export_text(net, is_json_path(path) ? Format::Json : Format::Csv));
  } else {
    out << export_text(net, format);
  }
  return kExitOk;
}

int run_trust(const TrustOptions& o, std::ostream& out) {
  if (o.delta < 0.0) throw Error(ErrorCode::InvalidMatrix, "--delta must be non-negative");
  out << export_text(trust_bounds(load_matrix(o.input), o.delta), parse_format(o.format));
  return kExitOk;
}

int run_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  SuiteConfig cfg{o.trials, o.seed, o.bound};
  const auto report = run_suite(parse_suite(o.suite), cfg);
  out << export_text(report, parse_format(o.format));
  if (!report.passed) {
    err << "verification failed: " << report.counterexample->violated << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

int run_compare(const CompareOptions& o, std::ostream& out) {
  out << export_text(compare(load_ultrametric(o.first), load_ultrametric(o.second), o.cuts),
                     parse_format(o.format));
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hierarchical clustering of asymmetric dissimilarity networks", "asymclust"};
  app.require_subcommand(1);

  ClusterOptions cluster_opts;
  auto* cluster_cmd = app.add_subcommand("cluster", "Cluster a dissimilarity matrix (CSV or JSON)");
  cluster_cmd->add_option("input", cluster_opts.input, "Matrix file")->required();
  cluster_cmd->add_option("--method", cluster_opts.method, "reciprocal|nonreciprocal|single-linkage|both")
      ->check(CLI::IsMember({"reciprocal", "nonreciprocal", "single-linkage", "single_linkage", "both"}));
  cluster_cmd->add_option("--output-ultrametric", cluster_opts.output_ultrametric,
                          "Write the ultrametric (.json or CSV)");
  cluster_cmd->add_option("--output-tree", cluster_opts.output_tree, "Write the tree (.json or Newick)");
  cluster_cmd->add_option("--cut", cluster_opts.cuts, "Resolutions at which to cut the tree")
      ->check(CLI::NonNegativeNumber);
  cluster_cmd->add_option("--format", cluster_opts.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  IngestOptions ingest_opts;
  auto* ingest_cmd = app.add_subcommand("ingest", "Convert a source,target,count edge list to a matrix");
  ingest_cmd->add_option("input", ingest_opts.input, "Edge-list CSV")->required();
  ingest_cmd->add_option("--policy", ingest_opts.policy, "inverse-normalized|scc")
      ->check(CLI::IsMember({"inverse-normalized", "scc"}));
  ingest_cmd->add_option("--output", ingest_opts.output, "Write the matrix (.json or CSV)");
  ingest_cmd->add_option("--format", ingest_opts.format, "csv|json")->check(CLI::IsMember({"json", "csv"}));

  TrustOptions trust_opts;
  auto* trust_cmd = app.add_subcommand("trust", "Classify pairs against the trust bounds at a resolution");
  trust_cmd->add_option("input", trust_opts.input, "Matrix file")->required();
  trust_cmd->add_option("--delta", trust_opts.delta, "Resolution")->required()->check(CLI::NonNegativeNumber);
  trust_cmd->add_option("--format", trust_opts.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run the axiom, oracle and extremal-bound suites");
  verify_cmd->add_option("--suite", verify_opts.suite, "axioms|oracle|sandwich|all")
      ->check(CLI::IsMember({"axioms", "oracle", "sandwich", "all"}));
  verify_cmd->add_option("--trials", verify_opts.trials, "Random cases per check");
  verify_cmd->add_option("--seed", verify_opts.seed, "RNG seed");
  verify_cmd->add_option("--bound", verify_opts.bound, "Chain enumeration node bound")
      ->check(CLI::Range(2, 10));
  verify_cmd->add_option("--format", verify_opts.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  CompareOptions compare_opts;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two trees or ultrametrics");
  compare_cmd->add_option("first", compare_opts.first, "Tree JSON or ultrametric matrix")->required();
  compare_cmd->add_option("second", compare_opts.second, "Tree JSON or ultrametric matrix")->required();
  compare_cmd->add_option("--cut", compare_opts.cuts, "Extra resolutions to compare at")
      ->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("--format", compare_opts.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cluster_cmd) return run_cluster(cluster_opts, out);
    if (*ingest_cmd) return run_ingest(ingest_opts, out);
    if (*trust_cmd) return run_trust(trust_opts, out);
    if (*verify_cmd) return run_verify(verify_opts, out, err);
    if (*compare_cmd) return run_compare(compare_opts, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace asymclust
