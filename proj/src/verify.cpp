#include "asymclust/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "asymclust/error.hpp"
#include "asymclust/format.hpp"

namespace asymclust {

VerificationReport check_ultrametric(const Matrix& m) {
  const std::size_t n = m.size();
  const std::size_t triples = n * n * n;
  if (auto v = ultrametric_violation(m)) {
    std::vector<double> values;
    const auto [i, j, k] = v->index;
    values.push_back(m(i, j));
    if (v->kind == UltrametricViolation::Kind::StrongTriangle) {
      values.push_back(m(i, k));
      values.push_back(m(k, j));
    }
    return VerificationReport::fail("ultrametric", triples,
                                    Counterexample{{i, j, k}, values, v->describe()});
  }
  return VerificationReport::pass("ultrametric", triples);
}

VerificationReport check_value_provenance(const Matrix& output, const Matrix& source) {
  std::set<double> entries;
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j)
      if (i != j) entries.insert(source(i, j));
  const std::size_t n = output.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !entries.count(output(i, j))) {
        return VerificationReport::fail(
            "provenance", n * n,
            Counterexample{{i, j}, {output(i, j)}, "value does not occur in the source matrix"});
      }
    }
  }
  return VerificationReport::pass("provenance", n * n);
}

namespace {

using LinkCost = std::function<double(std::size_t, std::size_t)>;

void require_enumerable(const Network& net, std::size_t bound) {
  if (net.size() > bound) {
    throw Error(ErrorCode::TooLarge, std::to_string(net.size()) + " nodes exceeds enumeration bound " +
                                         std::to_string(bound));
  }
}

// Depth-first walk over every simple chain from `at` to `target`, tracking the
// largest link so far. Chains whose running maximum already reaches the best
// complete chain cannot improve it and are cut short.
void enumerate_chains(const LinkCost& link, std::size_t n, std::size_t at, std::size_t target,
                      double running_max, std::vector<bool>& on_chain, double& best) {
  if (at == target) {
    best = std::min(best, running_max);
    return;
  }
  for (std::size_t next = 0; next < n; ++next) {
    if (on_chain[next]) continue;
    const double cost = std::max(running_max, link(at, next));
    if (cost >= best) continue;
    on_chain[next] = true;
    enumerate_chains(link, n, next, target, cost, on_chain, best);
    on_chain[next] = false;
  }
}

double best_chain(const LinkCost& link, std::size_t n, std::size_t i, std::size_t j) {
  if (i == j) return 0.0;
  std::vector<bool> on_chain(n, false);
  on_chain[i] = true;
  double best = std::numeric_limits<double>::infinity();
  enumerate_chains(link, n, i, j, 0.0, on_chain, best);
  return best;
}

}  // namespace

double brute_force_directed_cost(const Network& net, std::size_t i, std::size_t j,
                                 std::size_t bound) {
  require_enumerable(net, bound);
  if (i >= net.size() || j >= net.size()) throw std::out_of_range("node index out of range");
  return best_chain([&](std::size_t a, std::size_t b) { return net(a, b); }, net.size(), i, j);
}

UltrametricMatrix brute_force_method(const Network& net, Method method, std::size_t bound) {
  require_enumerable(net, bound);
  const std::size_t n = net.size();
  UltrametricMatrix u{net.labels(), Matrix(n)};
  const LinkCost directed = [&](std::size_t a, std::size_t b) { return net(a, b); };
  const LinkCost both_ways = [&](std::size_t a, std::size_t b) {
    return std::max(net(a, b), net(b, a));
  };
  if (method == Method::SingleLinkage && !is_symmetric(net)) {
    throw Error(ErrorCode::AsymmetricInput, "single linkage requires symmetric dissimilarities");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      switch (method) {
        case Method::Reciprocal: u.values(i, j) = best_chain(both_ways, n, i, j); break;
        case Method::Nonreciprocal:
          u.values(i, j) = std::max(best_chain(directed, n, i, j), best_chain(directed, n, j, i));
          break;
        case Method::SingleLinkage: u.values(i, j) = best_chain(directed, n, i, j); break;
      }
    }
  }
  return u;
}

UltrametricMatrix brute_force_method(const Network& net, std::string_view name, std::size_t bound) {
  return brute_force_method(net, parse_method(name), bound);
}

VerificationReport check_axiom_value(Method method, double alpha, double beta) {
  const Network two({"p", "q"}, {{0.0, alpha}, {beta, 0.0}});
  const double got = run_method(method, two)(0, 1);
  const double expected = std::max(alpha, beta);
  std::string name = "value:" + std::string(to_string(method));
  if (got != expected) {
    return VerificationReport::fail(
        std::move(name), 1,
        Counterexample{{0, 1}, {alpha, beta, got},
                       "u(p,q) = " + format_number(got) + " != max(alpha, beta) = " +
                           format_number(expected)});
  }
  return VerificationReport::pass(std::move(name), 1);
}

VerificationReport check_axiom_value(std::string_view name, double alpha, double beta) {
  return check_axiom_value(parse_method(name), alpha, beta);
}

bool is_dissimilarity_reducing(const NodeMap& map) noexcept {
  const std::size_t n = map.source.size();
  if (map.mapping.size() != n) return false;
  for (std::size_t y : map.mapping)
    if (y >= map.target.size()) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xp = 0; xp < n; ++xp)
      if (map.source(x, xp) < map.target(map.mapping[x], map.mapping[xp])) return false;
  return true;
}

NodeMap make_node_map(Network source, Network target, std::vector<std::size_t> mapping) {
  NodeMap map{std::move(source), std::move(target), std::move(mapping)};
  if (!is_dissimilarity_reducing(map)) {
    throw Error(ErrorCode::InvalidMatrix, "map is not dissimilarity reducing");
  }
  return map;
}

NodeMap generate_reducing_map(const Network& net, std::uint64_t seed) {
  const std::size_t n = net.size();
  std::mt19937_64 rng(seed);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, n)(rng);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> mapping(n);
  std::uniform_int_distribution<std::size_t> image(0, m - 1);
  for (std::size_t t = 0; t < n; ++t) mapping[order[t]] = t < m ? t : image(rng);

  Matrix target(m, std::numeric_limits<double>::infinity());
  for (std::size_t y = 0; y < m; ++y) target(y, y) = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t xp = 0; xp < n; ++xp) {
      const std::size_t y = mapping[x], yp = mapping[xp];
      if (y != yp) target(y, yp) = std::min(target(y, yp), net(x, xp));
    }
  }
  std::vector<std::string> labels(m);
  for (std::size_t y = 0; y < m; ++y) labels[y] = "y" + std::to_string(y + 1);

  NodeMap map{net, Network(std::move(labels), std::move(target)), std::move(mapping)};
  if (!is_dissimilarity_reducing(map)) {
    throw std::logic_error("generated map is not dissimilarity reducing");
  }
  return map;
}

VerificationReport check_axiom_transformation(Method method, const NodeMap& map) {
  const auto ux = run_method(method, map.source);
  const auto uy = run_method(method, map.target);
  const std::size_t n = map.source.size();
  std::string name = "transformation:" + std::string(to_string(method));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t xp = 0; xp < n; ++xp) {
      const std::size_t y = map.mapping[x], yp = map.mapping[xp];
      if (ux(x, xp) < uy(y, yp)) {
        return VerificationReport::fail(
            std::move(name), n * n,
            Counterexample{{x, xp, y, yp}, {ux(x, xp), uy(y, yp)},
                           "u_X(x,x') < u_Y(phi(x),phi(x'))"});
      }
    }
  }
  return VerificationReport::pass(std::move(name), n * n);
}

VerificationReport check_axiom_transformation(std::string_view name, const NodeMap& map) {
  return check_axiom_transformation(parse_method(name), map);
}

VerificationReport check_sandwich(const Network& net, const UltrametricMatrix& candidate) {
  if (candidate.labels != net.labels() || candidate.values.size() != net.size()) {
    throw Error(ErrorCode::LabelMismatch, "candidate is not defined on the network's labels");
  }
  const auto lower = nonreciprocal(net);
  const auto upper = reciprocal(net);
  const std::size_t n = net.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double c = candidate(i, j);
      if (lower(i, j) > c || c > upper(i, j)) {
        return VerificationReport::fail(
            "sandwich", n * n,
            Counterexample{{i, j}, {lower(i, j), c, upper(i, j)},
                           "candidate outside [nonreciprocal, reciprocal]"});
      }
    }
  }
  return VerificationReport::pass("sandwich", n * n);
}

Network random_network(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = 1.0 - unit(rng);
  return Network(index_labels(n), std::move(m));
}

Network random_symmetric_network(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = 1.0 - unit(rng);
  return Network(index_labels(n), std::move(m));
}

Suite parse_suite(std::string_view name) {
  if (name == "axioms") return Suite::Axioms;
  if (name == "oracle") return Suite::Oracle;
  if (name == "sandwich") return Suite::Sandwich;
  if (name == "all") return Suite::All;
  throw Error(ErrorCode::UnknownMethod, "unknown suite '" + std::string(name) + "'");
}

namespace {

constexpr Method kExtremes[] = {Method::Nonreciprocal, Method::Reciprocal};

// Independent stream per check so a suite's outcome does not depend on which
// other suites ran.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

VerificationReport tag_trial(VerificationReport r, std::size_t trial, std::string_view what) {
  if (!r.passed) {
    r.counterexample->violated =
        "trial " + std::to_string(trial) + " (" + std::string(what) + "): " + r.counterexample->violated;
  }
  return r;
}

VerificationReport first_failure_or_pass(std::string name, std::size_t trials,
                                         const std::function<std::optional<VerificationReport>(
                                             std::size_t)>& body) {
  for (std::size_t t = 0; t < trials; ++t) {
    if (auto failed = body(t)) {
      failed->check_name = name;
      failed->trials = t + 1;
      return *failed;
    }
  }
  return VerificationReport::pass(std::move(name), trials);
}

VerificationReport value_axiom_suite(const SuiteConfig& cfg) {
  auto rng = stream(cfg.seed, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<double, double>> cases = {
      {1.0, 3.0}, {5.0, 5.0}, {0.25, 4.0}, {1e-300, 1e300}, {1e300, 1e-300}, {10.0, 10.0}};
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    cases.emplace_back(10.0 * (1.0 - unit(rng)), 10.0 * (1.0 - unit(rng)));
  }
  return first_failure_or_pass("A1", cases.size(), [&](std::size_t t) -> std::optional<VerificationReport> {
    for (Method m : kExtremes) {
      auto r = check_axiom_value(m, cases[t].first, cases[t].second);
      if (!r.passed) return tag_trial(r, t, to_string(m));
    }
    return std::nullopt;
  });
}

VerificationReport transformation_axiom_suite(const SuiteConfig& cfg) {
  auto rng = stream(cfg.seed, 2);
  return first_failure_or_pass("A2", cfg.trials, [&](std::size_t t) -> std::optional<VerificationReport> {
    const auto net = random_network(pick(rng, 2, 20), rng);
    const auto map = generate_reducing_map(net, rng());
    for (Method m : kExtremes) {
      auto r = check_axiom_transformation(m, map);
      if (!r.passed) return tag_trial(r, t, to_string(m));
    }
    return std::nullopt;
  });
}

std::optional<VerificationReport> compare_to_oracle(const Network& net, Method m,
                                                    std::size_t bound, std::size_t trial) {
  const auto fast = run_method(m, net);
  const auto slow = brute_force_method(net, m, bound);
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = 0; j < net.size(); ++j) {
      if (fast(i, j) != slow(i, j)) {
        return tag_trial(VerificationReport::fail(
                             "oracle", 1,
                             Counterexample{{i, j}, {fast(i, j), slow(i, j)},
                                            "closure differs from chain enumeration (n=" +
                                                std::to_string(net.size()) + ")"}),
                         trial, to_string(m));
      }
    }
  }
  return std::nullopt;
}

VerificationReport oracle_suite(const SuiteConfig& cfg) {
  auto rng = stream(cfg.seed, 3);
  const std::size_t max_n = std::max<std::size_t>(2, std::min<std::size_t>(6, cfg.enumeration_bound));
  return first_failure_or_pass("oracle-equivalence", cfg.trials,
                               [&](std::size_t t) -> std::optional<VerificationReport> {
    const auto net = random_network(pick(rng, 2, max_n), rng);
    for (Method m : kExtremes)
      if (auto f = compare_to_oracle(net, m, cfg.enumeration_bound, t)) return f;
    const auto sym = random_symmetric_network(pick(rng, 2, max_n), rng);
    return compare_to_oracle(sym, Method::SingleLinkage, cfg.enumeration_bound, t);
  });
}

VerificationReport sandwich_suite(const SuiteConfig& cfg) {
  auto rng = stream(cfg.seed, 4);
  auto bounds = first_failure_or_pass("extremal-bounds", cfg.trials,
                                      [&](std::size_t t) -> std::optional<VerificationReport> {
    const auto net = random_network(pick(rng, 3, 50), rng);
    const auto lower = nonreciprocal(net);
    const auto upper = reciprocal(net);
    const auto sl = single_linkage(symmetrize_max(net));
    const std::pair<const char*, const UltrametricMatrix*> candidates[] = {
        {"nonreciprocal", &lower}, {"reciprocal", &upper}, {"single_linkage(max-sym)", &sl}};
    for (auto [what, cand] : candidates) {
      auto r = check_sandwich(net, *cand);
      if (!r.passed) return tag_trial(r, t, what);
      r = check_ultrametric(cand->values);
      if (!r.passed) return tag_trial(r, t, what);
    }
    auto r = check_value_provenance(lower.values, net.dissim());
    if (!r.passed) return tag_trial(r, t, "nonreciprocal");
    r = check_value_provenance(upper.values, symmetrize_max(net).dissim());
    if (!r.passed) return tag_trial(r, t, "reciprocal");
    return std::nullopt;
  });

  auto collapse = first_failure_or_pass("symmetric-collapse", cfg.trials,
                                        [&](std::size_t t) -> std::optional<VerificationReport> {
    const auto net = random_symmetric_network(pick(rng, 2, 30), rng);
    const auto r = reciprocal(net), nr = nonreciprocal(net), sl = single_linkage(net);
    if (r == nr && nr == sl) return std::nullopt;
    return tag_trial(VerificationReport::fail(
                         "symmetric-collapse", 1,
                         Counterexample{{net.size()}, {}, "reciprocal, nonreciprocal and single "
                                                          "linkage differ on a symmetric network"}),
                     t, "symmetric");
  });
  return VerificationReport::combine("sandwich", {std::move(bounds), std::move(collapse)});
}

}  // namespace

VerificationReport run_suite(Suite suite, const SuiteConfig& config) {
  switch (suite) {
    case Suite::Axioms:
      return VerificationReport::combine(
          "axioms", {value_axiom_suite(config), transformation_axiom_suite(config)});
    case Suite::Oracle:
      return VerificationReport::combine("oracle", {oracle_suite(config)});
    case Suite::Sandwich:
      return sandwich_suite(config);
    case Suite::All:
      return VerificationReport::combine(
          "all", {run_suite(Suite::Axioms, config), run_suite(Suite::Oracle, config),
                  run_suite(Suite::Sandwich, config)});
  }
  throw Error(ErrorCode::UnknownMethod, "unhandled suite");
}

}  // namespace asymclust
