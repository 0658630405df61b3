#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "asymclust/dendrogram.hpp"
#include "asymclust/format.hpp"
#include "asymclust/network.hpp"
#include "asymclust/report.hpp"
#include "asymclust/ultrametric.hpp"

namespace asymclust {

// Matrix CSV: a header row of labels, then n rows of n decimal fields.
// Matrix JSON: {"labels": [...], "matrix": [[...], ...]}.
Network parse_matrix_csv(std::string_view text);
Network parse_matrix_json(std::string_view text);
// Dispatches on the .json extension, otherwise CSV.
Network load_matrix(const std::filesystem::path& path);

struct EdgeRecord {
  std::string source;
  std::string target;
  unsigned long long count = 0;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

// Directed message counts. Self-edges are dropped and duplicate
// (source, target) records summed; records are kept sorted by (source, target).
class EdgeList {
 public:
  EdgeList() = default;
  explicit EdgeList(const std::vector<EdgeRecord>& raw);

  const std::vector<EdgeRecord>& records() const noexcept { return records_; }
  // Every label seen in the raw input, self-edges included, sorted.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool empty() const noexcept { return labels_.empty(); }

 private:
  std::vector<EdgeRecord> records_;
  std::vector<std::string> labels_;
};

// CSV with header `source,target,count`.
EdgeList parse_edge_list_csv(std::string_view text);
EdgeList load_edge_list(const std::filesystem::path& path);

enum class NormalizationPolicy {
  // raw = 1/count; missing pairs get 2 * max finite raw; divide by the max.
  InverseNormalized,
  // As above, restricted to the largest strongly connected component.
  LargestScc,
};
NormalizationPolicy parse_policy(std::string_view name);
std::string_view to_string(NormalizationPolicy p);

Network counts_to_dissimilarity(const EdgeList& edges,
                                NormalizationPolicy policy = NormalizationPolicy::InverseNormalized);

enum class TrustClass { CertainIn, CertainOut, Ambiguous };
std::string_view to_string(TrustClass c);

struct TrustPair {
  std::size_t first = 0;
  std::size_t second = 0;
  double lower = 0.0;  // nonreciprocal
  double upper = 0.0;  // reciprocal
  TrustClass classification = TrustClass::Ambiguous;
};

struct TrustReport {
  std::vector<std::string> labels;
  double delta = 0.0;
  std::vector<TrustPair> pairs;  // i < j, row-major
  Partition nonreciprocal_cut;
  Partition reciprocal_cut;
};

TrustReport trust_bounds(const Network& net, double delta);

struct Comparison {
  double max_abs_difference = 0.0;
  struct Level {
    double resolution = 0.0;
    bool identical = false;
    double pair_agreement = 1.0;  // fraction of unordered pairs on which the cuts agree
  };
  std::vector<Level> levels;
};

// Second ultrametric may list the same labels in another order. Levels cover
// every distinct value of either input plus extra_resolutions, ascending.
Comparison compare(const UltrametricMatrix& a, const UltrametricMatrix& b,
                   const std::vector<double>& extra_resolutions = {});

enum class Format { Csv, Json, Newick };
Format parse_format(std::string_view name);

std::string export_text(const UltrametricMatrix& u, Format f);
std::string export_text(const Dendrogram& d, Format f);
std::string export_text(const Partition& p, const std::vector<std::string>& labels, Format f);
std::string export_text(const VerificationReport& r, Format f);
std::string export_text(const TrustReport& r, Format f);
std::string export_text(const Comparison& c, Format f);
std::string export_text(const Network& net, Format f);

// Tree JSON {"labels", "events": [{"resolution", "merged", "new"}]}.
Dendrogram parse_dendrogram_json(std::string_view text);

// Loads either a tree JSON (has "events") or a matrix file as an ultrametric.
UltrametricMatrix load_ultrametric(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace asymclust
