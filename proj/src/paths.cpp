#include "emoflow/paths.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

#include "emoflow/errors.hpp"

namespace emoflow {

namespace {

// Induced subgraph on a sorted, de-duplicated node list, as local adjacency.
struct Induced {
  std::vector<NodeId> nodes;
  std::vector<std::vector<std::size_t>> adj;
};

Induced induce(const UndirectedView& g, std::span<const NodeId> nodes) {
  Induced sub;
  sub.nodes.assign(nodes.begin(), nodes.end());
  std::sort(sub.nodes.begin(), sub.nodes.end());
  sub.nodes.erase(std::unique(sub.nodes.begin(), sub.nodes.end()), sub.nodes.end());
  sub.adj.resize(sub.nodes.size());
  for (std::size_t a = 0; a < sub.nodes.size(); ++a) {
    for (NodeId v : g.neighbors(sub.nodes[a])) {
      const auto it = std::lower_bound(sub.nodes.begin(), sub.nodes.end(), v);
      if (it != sub.nodes.end() && *it == v) {
        sub.adj[a].push_back(static_cast<std::size_t>(it - sub.nodes.begin()));
      }
    }
  }
  return sub;
}

// BFS from `src` over the induced graph. Fills `dist` (-1 = unreached) and
// returns visited nodes in BFS order.
std::vector<std::size_t> bfs(const Induced& sub, std::size_t src, std::vector<int>& dist) {
  std::fill(dist.begin(), dist.end(), -1);
  std::vector<std::size_t> order{src};
  dist[src] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto u = order[head];
    for (auto v : sub.adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        order.push_back(v);
      }
    }
  }
  return order;
}

}  // namespace

double virality(const UndirectedView& g, std::span<const NodeId> nodes) {
  const auto sub = induce(g, nodes);
  const auto n = sub.nodes.size();
  if (n < 2) throw UndefinedError("virality needs at least two infected nodes");

  std::vector<int> component(n, -1);
  std::vector<int> dist(n);
  double total = 0.0;
  std::size_t counted = 0;
  int next_component = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    const auto members = bfs(sub, root, dist);
    for (auto m : members) component[m] = next_component;
    ++next_component;
    if (members.size() < 2) continue;

    std::uint64_t sum = 0;
    for (auto s : members) {
      bfs(sub, s, dist);
      for (auto t : members) {
        if (t > s) sum += static_cast<std::uint64_t>(dist[t]);
      }
    }
    const auto k = static_cast<std::uint64_t>(members.size());
    total += static_cast<double>(sum) / static_cast<double>(k * (k - 1) / 2);
    ++counted;
  }
  if (counted == 0) throw UndefinedError("virality: every infected component is a singleton");
  return total / static_cast<double>(counted);
}

std::size_t induced_diameter(const UndirectedView& g, std::span<const NodeId> nodes) {
  const auto sub = induce(g, nodes);
  std::vector<int> dist(sub.nodes.size());
  int best = 0;
  for (std::size_t s = 0; s < sub.nodes.size(); ++s) {
    bfs(sub, s, dist);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return static_cast<std::size_t>(best);
}

std::vector<int> bfs_distances(const UndirectedView& g, NodeId source) {
  std::vector<int> dist(g.num_nodes(), -1);
  std::deque<NodeId> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace emoflow
