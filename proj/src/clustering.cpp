#include "asymclust/clustering.hpp"

#include <string>

#include "asymclust/minimax.hpp"

namespace asymclust {

Method parse_method(std::string_view name) {
  if (name == "reciprocal") return Method::Reciprocal;
  if (name == "nonreciprocal") return Method::Nonreciprocal;
  if (name == "single_linkage" || name == "single-linkage") return Method::SingleLinkage;
  throw Error(ErrorCode::UnknownMethod, "'" + std::string(name) + "'");
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Reciprocal: return "reciprocal";
    case Method::Nonreciprocal: return "nonreciprocal";
    case Method::SingleLinkage: return "single_linkage";
  }
  return "unknown";
}

UltrametricMatrix reciprocal(const Network& net) {
  return {net.labels(), minimax_closure(symmetrize_max(net).dissim())};
}

UltrametricMatrix nonreciprocal(const Network& net) {
  return {net.labels(), pointwise_max_transpose(minimax_closure(net.dissim()))};
}

UltrametricMatrix single_linkage(const Network& net) {
  if (!is_symmetric(net)) {
    throw Error(ErrorCode::AsymmetricInput, "single linkage requires symmetric dissimilarities");
  }
  return {net.labels(), minimax_closure(net.dissim())};
}

UltrametricMatrix run_method(Method m, const Network& net) {
  switch (m) {
    case Method::Reciprocal: return reciprocal(net);
    case Method::Nonreciprocal: return nonreciprocal(net);
    case Method::SingleLinkage: return single_linkage(net);
  }
  throw Error(ErrorCode::UnknownMethod, "unhandled method");
}

UltrametricMatrix run_method(std::string_view name, const Network& net) {
  return run_method(parse_method(name), net);
}

Network as_network(const UltrametricMatrix& u) { return Network(u.labels, u.values); }

}  // namespace asymclust
