#pragma once

#include <string_view>

#include "asymclust/network.hpp"
#include "asymclust/ultrametric.hpp"

namespace asymclust {

enum class Method { Reciprocal, Nonreciprocal, SingleLinkage };

// Accepts "reciprocal", "nonreciprocal", "single_linkage" and "single-linkage".
Method parse_method(std::string_view name);
std::string_view to_string(Method m);

// Minimax closure of the max-symmetrized network: a chain must be cheap in
// both directions link by link. The uniformly maximal admissible ultrametric.
UltrametricMatrix reciprocal(const Network& net);

// Max of the two directed minimax costs; forward and backward chains may
// differ. The uniformly minimal admissible ultrametric.
UltrametricMatrix nonreciprocal(const Network& net);

// Throws Error(AsymmetricInput) unless the network is symmetric.
UltrametricMatrix single_linkage(const Network& net);

UltrametricMatrix run_method(Method m, const Network& net);
UltrametricMatrix run_method(std::string_view name, const Network& net);

// Views an ultrametric as a symmetric network (for re-clustering).
Network as_network(const UltrametricMatrix& u);

}  // namespace asymclust
