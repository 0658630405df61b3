#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "asymclust/report.hpp"
#include "asymclust/ultrametric.hpp"

namespace asymclust {

// Cluster identifiers: 0..n-1 are the singleton clusters {x_i}; every event
// introduces new_cluster, a fresh identifier (n, n+1, ... for dendrograms
// built here).
struct MergeEvent {
  double resolution = 0.0;
  std::vector<std::size_t> merged;
  std::size_t new_cluster = 0;

  friend bool operator==(const MergeEvent&, const MergeEvent&) = default;
};

// Merge tree indexed by resolution. Events are ordered by non-decreasing
// resolution; several clusters forming at the same resolution give several
// events, and an event may unite more than two clusters.
struct Dendrogram {
  std::vector<std::string> labels;
  std::vector<MergeEvent> events;

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;
};

struct Partition {
  double resolution = 0.0;
  // Node indices per block; blocks ordered by least member, members ascending.
  std::vector<std::vector<std::size_t>> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Throws Error(NotUltrametric) if u fails the ultrametric conditions.
Dendrogram ultrametric_to_dendrogram(const UltrametricMatrix& u);

// Throws Error(InvalidDendrogram) if validate_dendrogram fails.
UltrametricMatrix dendrogram_to_ultrametric(const Dendrogram& d);

// Clusters present once every event with resolution <= delta is applied.
Partition cut(const Dendrogram& d, double delta);

// Subchecks "structure", "D1" (singletons at 0, a single cluster at the end)
// and "D2" (clusters only merge, in resolution order).
VerificationReport validate_dendrogram(const Dendrogram& d);

std::string to_newick(const Dendrogram& d);

// Partition blocks rendered as label lists.
std::vector<std::vector<std::string>> block_labels(const Partition& p,
                                                   const std::vector<std::string>& labels);

// True iff every block of fine lies inside some block of coarse.
bool refines(const Partition& fine, const Partition& coarse);

}  // namespace asymclust
