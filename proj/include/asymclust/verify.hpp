#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "asymclust/clustering.hpp"
#include "asymclust/network.hpp"
#include "asymclust/report.hpp"
#include "asymclust/ultrametric.hpp"

namespace asymclust {

inline constexpr std::size_t kDefaultEnumerationBound = 8;

VerificationReport check_ultrametric(const Matrix& m);

// Every off-diagonal value of output must occur among source's off-diagonal
// entries.
VerificationReport check_value_provenance(const Matrix& output, const Matrix& source);

// Exact directed minimax cost by enumerating every simple chain from i to j.
// Independent of minimax_closure. Throws Error(TooLarge) when n > bound.
double brute_force_directed_cost(const Network& net, std::size_t i, std::size_t j,
                                 std::size_t bound = kDefaultEnumerationBound);

// Method output assembled from brute-force chain costs only.
UltrametricMatrix brute_force_method(const Network& net, Method method,
                                     std::size_t bound = kDefaultEnumerationBound);
UltrametricMatrix brute_force_method(const Network& net, std::string_view name,
                                     std::size_t bound = kDefaultEnumerationBound);

// Value axiom on the two-node network p->q = alpha, q->p = beta.
VerificationReport check_axiom_value(Method method, double alpha, double beta);
VerificationReport check_axiom_value(std::string_view name, double alpha, double beta);

// phi: X -> Y with A_X(x,x') >= A_Y(phi(x), phi(x')) for all x, x'.
struct NodeMap {
  Network source;
  Network target;
  std::vector<std::size_t> mapping;  // source index -> target index
};

bool is_dissimilarity_reducing(const NodeMap& map) noexcept;

// Seeded random surjection onto 1..n target nodes; the target dissimilarity
// between distinct images is the minimum over their preimage pairs, so the
// map is reducing by construction.
NodeMap generate_reducing_map(const Network& net, std::uint64_t seed);

// Builds a NodeMap from an explicit mapping and target; throws
// Error(InvalidMatrix) if it is not dissimilarity reducing.
NodeMap make_node_map(Network source, Network target, std::vector<std::size_t> mapping);

// Transformation axiom: u_X(x,x') >= u_Y(phi(x), phi(x')) for every pair.
VerificationReport check_axiom_transformation(Method method, const NodeMap& map);
VerificationReport check_axiom_transformation(std::string_view name, const NodeMap& map);

// nonreciprocal(net) <= candidate <= reciprocal(net) entrywise. Throws
// Error(LabelMismatch) if candidate is not over net's labels.
VerificationReport check_sandwich(const Network& net, const UltrametricMatrix& candidate);

// Entries uniform in (0, 1].
Network random_network(std::size_t n, std::mt19937_64& rng);
Network random_symmetric_network(std::size_t n, std::mt19937_64& rng);

enum class Suite { Axioms, Oracle, Sandwich, All };
Suite parse_suite(std::string_view name);

struct SuiteConfig {
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  std::size_t enumeration_bound = kDefaultEnumerationBound;
};

VerificationReport run_suite(Suite suite, const SuiteConfig& config);

}  // namespace asymclust
