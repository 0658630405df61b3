#include "asymclust/dendrogram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "asymclust/error.hpp"
#include "asymclust/format.hpp"

namespace asymclust {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller index as root so roots double as least members.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

Counterexample event_failure(std::size_t event, double resolution, std::string what) {
  return Counterexample{{event}, {resolution}, std::move(what)};
}

}  // namespace

Dendrogram ultrametric_to_dendrogram(const UltrametricMatrix& u) {
  const std::size_t n = u.values.size();
  if (u.labels.size() != n) {
    throw Error(ErrorCode::NotUltrametric, "label count does not match matrix dimension");
  }
  if (auto v = ultrametric_violation(u.values)) {
    throw Error(ErrorCode::NotUltrametric, v->describe(), v->index[0], v->index[1]);
  }

  std::vector<double> levels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) levels.push_back(u(i, j));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  Dendrogram d{u.labels, {}};
  DisjointSet dsu(n);
  // Cluster id currently owned by each DSU root.
  std::vector<std::size_t> cluster_of_root(n);
  std::iota(cluster_of_root.begin(), cluster_of_root.end(), 0);
  std::size_t next_id = n;

  for (double level : levels) {
    std::vector<std::size_t> touched;
    std::vector<std::pair<std::size_t, std::size_t>> links;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (u(i, j) != level) continue;
        const std::size_t a = dsu.find(i), b = dsu.find(j);
        if (a != b) links.emplace_back(a, b);
      }
    }
    std::vector<std::size_t> old_cluster(n);
    for (auto [a, b] : links) {
      old_cluster[a] = cluster_of_root[a];
      old_cluster[b] = cluster_of_root[b];
      touched.push_back(a);
      touched.push_back(b);
    }
    for (auto [a, b] : links) dsu.unite(a, b);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    // Old roots are least members, so grouping in ascending order keeps both
    // children and new clusters sorted by least member.
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t r : touched) groups[dsu.find(r)].push_back(old_cluster[r]);
    for (auto& [root, merged] : groups) {
      d.events.push_back(MergeEvent{level, merged, next_id});
      cluster_of_root[root] = next_id++;
    }
  }
  return d;
}

VerificationReport validate_dendrogram(const Dendrogram& d) {
  const std::size_t n = d.labels.size();
  const std::size_t events = d.events.size();
  std::optional<Counterexample> structure, d1, d2;

  {
    std::unordered_set<std::string> seen;
    if (n == 0) structure = Counterexample{{}, {}, "dendrogram has no nodes"};
    for (std::size_t i = 0; i < n && !structure; ++i) {
      if (!seen.insert(d.labels[i]).second)
        structure = Counterexample{{i}, {}, "duplicate label '" + d.labels[i] + "'"};
    }
  }

  // Active clusters with their formation resolution; retired ids may not reappear.
  std::map<std::size_t, double> active;
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < n; ++i) {
    active.emplace(i, 0.0);
    used.insert(i);
  }
  double previous = 0.0;
  for (std::size_t e = 0; e < events && !structure; ++e) {
    const MergeEvent& ev = d.events[e];
    if (!std::isfinite(ev.resolution) || ev.resolution < 0.0) {
      structure = event_failure(e, ev.resolution, "resolution is not a finite non-negative value");
      break;
    }
    if (!d1 && ev.resolution == 0.0)
      d1 = event_failure(e, ev.resolution, "merge at resolution 0: D(0) must be all singletons");
    if (!d2 && ev.resolution < previous)
      d2 = event_failure(e, ev.resolution, "resolution decreases from the previous event");
    previous = std::max(previous, ev.resolution);

    if (ev.merged.size() < 2) {
      structure = event_failure(e, ev.resolution, "event merges fewer than two clusters");
      break;
    }
    std::set<std::size_t> distinct(ev.merged.begin(), ev.merged.end());
    if (distinct.size() != ev.merged.size()) {
      structure = event_failure(e, ev.resolution, "event lists a cluster twice");
      break;
    }
    if (used.count(ev.new_cluster)) {
      structure = event_failure(e, ev.resolution,
                                "new cluster id " + std::to_string(ev.new_cluster) + " is not fresh");
      break;
    }
    for (std::size_t c : ev.merged) {
      if (!used.count(c)) {
        structure = event_failure(e, ev.resolution, "unknown cluster id " + std::to_string(c));
        break;
      }
      auto it = active.find(c);
      if (it == active.end()) {
        if (!d2)
          d2 = event_failure(e, ev.resolution,
                             "cluster " + std::to_string(c) + " was already merged; it would be split");
        continue;
      }
      if (!d2 && it->second > ev.resolution)
        d2 = event_failure(e, ev.resolution,
                           "cluster " + std::to_string(c) + " forms above the resolution it merges at");
    }
    if (structure) break;
    for (std::size_t c : ev.merged) active.erase(c);
    active.emplace(ev.new_cluster, ev.resolution);
    used.insert(ev.new_cluster);
  }
  if (!structure && !d1 && active.size() != 1) {
    d1 = Counterexample{{}, {static_cast<double>(active.size())},
                        std::to_string(active.size()) + " clusters remain after the last event"};
  }

  auto sub = [&](std::string name, std::optional<Counterexample>& cx) {
    return cx ? VerificationReport::fail(std::move(name), events, *cx)
              : VerificationReport::pass(std::move(name), events);
  };
  return VerificationReport::combine("dendrogram", {sub("structure", structure), sub("D1", d1),
                                                    sub("D2", d2)});
}

UltrametricMatrix dendrogram_to_ultrametric(const Dendrogram& d) {
  const auto report = validate_dendrogram(d);
  if (!report.passed) throw Error(ErrorCode::InvalidDendrogram, report.counterexample->violated);

  const std::size_t n = d.labels.size();
  UltrametricMatrix u{d.labels, Matrix(n)};
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  for (const MergeEvent& ev : d.events) {
    std::vector<std::size_t> joined;
    for (std::size_t a = 0; a < ev.merged.size(); ++a) {
      const auto& left = members.at(ev.merged[a]);
      for (std::size_t b = a + 1; b < ev.merged.size(); ++b) {
        for (std::size_t x : left) {
          for (std::size_t y : members.at(ev.merged[b])) {
            u.values(x, y) = ev.resolution;
            u.values(y, x) = ev.resolution;
          }
        }
      }
      joined.insert(joined.end(), left.begin(), left.end());
      members.erase(ev.merged[a]);
    }
    members[ev.new_cluster] = std::move(joined);
  }
  return u;
}

Partition cut(const Dendrogram& d, double delta) {
  const std::size_t n = d.labels.size();
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};
  for (const MergeEvent& ev : d.events) {
    if (ev.resolution > delta) continue;
    std::vector<std::size_t> joined;
    for (std::size_t c : ev.merged) {
      auto it = members.find(c);
      if (it == members.end()) {
        throw Error(ErrorCode::InvalidDendrogram, "cluster " + std::to_string(c) + " is not active");
      }
      joined.insert(joined.end(), it->second.begin(), it->second.end());
      members.erase(it);
    }
    members[ev.new_cluster] = std::move(joined);
  }
  Partition p{delta, {}};
  for (auto& [id, block] : members) {
    std::sort(block.begin(), block.end());
    p.blocks.push_back(std::move(block));
  }
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

namespace {

std::string newick_label(const std::string& label) {
  constexpr std::string_view special = " \t\r\n()[]':;,";
  if (!label.empty() && label.find_first_of(special) == std::string::npos) return label;
  std::string quoted = "'";
  for (char c : label) {
    if (c == '\'') quoted += '\'';
    quoted += c;
  }
  return quoted + "'";
}

struct TreeNode {
  double height = 0.0;
  std::size_t least = 0;
  std::vector<std::size_t> children;
};

void emit(const std::map<std::size_t, TreeNode>& nodes, const std::vector<std::string>& labels,
          std::size_t id, std::string& out) {
  const TreeNode& node = nodes.at(id);
  if (node.children.empty()) {
    out += newick_label(labels[id]);
    return;
  }
  out += '(';
  for (std::size_t c = 0; c < node.children.size(); ++c) {
    if (c) out += ',';
    const std::size_t child = node.children[c];
    emit(nodes, labels, child, out);
    out += ':';
    out += format_number(node.height - nodes.at(child).height);
  }
  out += ')';
}

}  // namespace

std::string to_newick(const Dendrogram& d) {
  const std::size_t n = d.labels.size();
  std::map<std::size_t, TreeNode> nodes;
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i] = TreeNode{0.0, i, {}};
    roots.insert(i);
  }
  for (const MergeEvent& ev : d.events) {
    TreeNode node{ev.resolution, n, ev.merged};
    for (std::size_t c : ev.merged) {
      node.least = std::min(node.least, nodes.at(c).least);
      roots.erase(c);
    }
    std::sort(node.children.begin(), node.children.end(), [&](std::size_t a, std::size_t b) {
      return nodes.at(a).least < nodes.at(b).least;
    });
    nodes[ev.new_cluster] = std::move(node);
    roots.insert(ev.new_cluster);
  }
  if (roots.size() != 1) {
    throw Error(ErrorCode::InvalidDendrogram, "tree does not have a single root");
  }
  std::string out;
  emit(nodes, d.labels, *roots.begin(), out);
  return out + ";";
}

std::vector<std::vector<std::string>> block_labels(const Partition& p,
                                                   const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> out;
  out.reserve(p.blocks.size());
  for (const auto& block : p.blocks) {
    auto& names = out.emplace_back();
    for (std::size_t i : block) names.push_back(labels.at(i));
  }
  return out;
}

bool refines(const Partition& fine, const Partition& coarse) {
  std::map<std::size_t, std::size_t> coarse_block;
  for (std::size_t b = 0; b < coarse.blocks.size(); ++b)
    for (std::size_t x : coarse.blocks[b]) coarse_block[x] = b;
  for (const auto& block : fine.blocks) {
    for (std::size_t x : block) {
      auto a = coarse_block.find(x), b = coarse_block.find(block.front());
      if (a == coarse_block.end() || b == coarse_block.end() || a->second != b->second) return false;
    }
  }
  return true;
}

}  // namespace asymclust
