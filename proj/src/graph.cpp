#include "emoflow/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "emoflow/errors.hpp"
#include "text.hpp"

namespace emoflow {

SocialGraph::SocialGraph(std::vector<std::string> labels, std::vector<DirectedEdge> edges)
    : labels_(std::move(labels)) {
  const auto n = labels_.size();
  index_.reserve(n);
  for (NodeId u = 0; u < n; ++u) {
    if (!index_.emplace(labels_[u], u).second) {
      throw DomainError("duplicate node label '" + labels_[u] + "'");
    }
  }
  for (const auto& e : edges) {
    if (e.src >= n || e.dst >= n) throw DomainError("edge endpoint out of range");
    if (e.src == e.dst) throw DomainError("self-loop on node '" + labels_[e.src] + "'");
  }

  std::sort(edges.begin(), edges.end(), [](const DirectedEdge& a, const DirectedEdge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  for (const auto& e : edges) {
    if (!edges_.empty() && edges_.back().src == e.src && edges_.back().dst == e.dst) {
      edges_.back().retweets += e.retweets;
    } else {
      edges_.push_back(e);
    }
  }

  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++out_offsets_[e.src + 1];
    ++in_offsets_[e.dst + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  out_targets_.resize(edges_.size());
  in_sources_.resize(edges_.size());
  auto in_fill = in_offsets_;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    out_targets_[k] = edges_[k].dst;
    in_sources_[in_fill[edges_[k].dst]++] = edges_[k].src;
  }
  // Sources arrive in ascending src order, so in-lists are already sorted.
}

void SocialGraph::check_node(NodeId u) const {
  if (u >= num_nodes()) throw DomainError("node id " + std::to_string(u) + " out of range");
}

std::span<const NodeId> SocialGraph::followees(NodeId u) const {
  check_node(u);
  return {out_targets_.data() + out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]};
}

std::span<const NodeId> SocialGraph::followers(NodeId u) const {
  check_node(u);
  return {in_sources_.data() + in_offsets_[u], in_offsets_[u + 1] - in_offsets_[u]};
}

bool SocialGraph::has_edge(NodeId src, NodeId dst) const {
  const auto out = followees(src);
  check_node(dst);
  return std::binary_search(out.begin(), out.end(), dst);
}

std::uint64_t SocialGraph::retweets(NodeId src, NodeId dst) const {
  const auto out = followees(src);
  check_node(dst);
  const auto it = std::lower_bound(out.begin(), out.end(), dst);
  if (it == out.end() || *it != dst) return 0;
  return edges_[out_offsets_[src] + static_cast<std::size_t>(it - out.begin())].retweets;
}

std::optional<NodeId> SocialGraph::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

UndirectedView::UndirectedView(const SocialGraph& g) {
  std::vector<WeightedEdge> pairs;
  pairs.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    const NodeId a = std::min(e.src, e.dst);
    const NodeId b = std::max(e.src, e.dst);
    pairs.push_back({a, b, static_cast<double>(e.retweets)});
  }
  std::sort(pairs.begin(), pairs.end(), [](const WeightedEdge& x, const WeightedEdge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  std::vector<WeightedEdge> merged;
  merged.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (!merged.empty() && merged.back().a == p.a && merged.back().b == p.b) {
      merged.back().weight += p.weight;
    } else {
      merged.push_back(p);
    }
  }
  for (auto& m : merged) m.weight += 1.0;
  build(g.num_nodes(), std::move(merged));
}

UndirectedView UndirectedView::from_edges(std::size_t num_nodes,
                                          std::span<const WeightedEdge> edges) {
  std::vector<WeightedEdge> norm;
  norm.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.a >= num_nodes || e.b >= num_nodes) throw DomainError("edge endpoint out of range");
    if (e.a == e.b) throw DomainError("self-loop in undirected edge list");
    if (!(e.weight > 0.0)) throw DomainError("undirected edge weight must be positive");
    norm.push_back({std::min(e.a, e.b), std::max(e.a, e.b), e.weight});
  }
  std::sort(norm.begin(), norm.end(), [](const WeightedEdge& x, const WeightedEdge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  for (std::size_t k = 1; k < norm.size(); ++k) {
    if (norm[k].a == norm[k - 1].a && norm[k].b == norm[k - 1].b) {
      throw DomainError("parallel undirected edge");
    }
  }
  UndirectedView v;
  v.build(num_nodes, std::move(norm));
  return v;
}

void UndirectedView::build(std::size_t num_nodes, std::vector<WeightedEdge> edges) {
  offsets_.assign(num_nodes + 1, 0);
  for (const auto& e : edges) {
    ++offsets_[e.a + 1];
    ++offsets_[e.b + 1];
  }
  for (std::size_t i = 0; i < num_nodes; ++i) offsets_[i + 1] += offsets_[i];
  neighbors_.resize(2 * edges.size());
  weights_.resize(2 * edges.size());
  auto fill = offsets_;
  // Edges are sorted by (a, b) with a < b. Filling every node's lower-id
  // neighbors first, then its higher-id ones, leaves each list ascending.
  for (const auto& e : edges) {
    neighbors_[fill[e.b]] = e.a;
    weights_[fill[e.b]++] = e.weight;
  }
  for (const auto& e : edges) {
    neighbors_[fill[e.a]] = e.b;
    weights_[fill[e.a]++] = e.weight;
  }
}

std::span<const NodeId> UndirectedView::neighbors(NodeId u) const {
  if (u >= num_nodes()) throw DomainError("node id " + std::to_string(u) + " out of range");
  return {neighbors_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

std::span<const double> UndirectedView::weights(NodeId u) const {
  if (u >= num_nodes()) throw DomainError("node id " + std::to_string(u) + " out of range");
  return {weights_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

bool UndirectedView::has_edge(NodeId a, NodeId b) const {
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

double UndirectedView::weight(NodeId a, NodeId b) const {
  const auto nb = neighbors(a);
  const auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) {
    throw DomainError("no edge between " + std::to_string(a) + " and " + std::to_string(b));
  }
  return weights_[offsets_[a] + static_cast<std::size_t>(it - nb.begin())];
}

// ---------------------------------------------------------------------------

namespace {

// A first row is a header when its count column is not a number, or when a
// two-column row names its columns. Plain "a,b" rows stay edges.
bool is_edge_header(const std::vector<std::string_view>& fields) {
  if (fields.size() == 3) return !text::is_numeric(fields[2]);
  if (fields.size() != 2) return false;
  static constexpr std::string_view names[] = {"src",  "dst",      "source",   "target",
                                               "from", "to",       "follower", "followee",
                                               "user", "followed"};
  return std::all_of(fields.begin(), fields.end(), [](std::string_view f) {
    std::string lower(f);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return std::find(std::begin(names), std::end(names), lower) != std::end(names);
  });
}

}  // namespace

EdgeListLoad load_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::vector<DirectedEdge> edges;
  EdgeListLoad result;

  auto intern = [&](std::string_view s) {
    auto [it, inserted] = index.emplace(std::string(s), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(s);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::skippable(line)) continue;
    const auto fields = text::split_fields(line);
    if (first_row) {
      first_row = false;
      if (is_edge_header(fields)) continue;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(line_no, "expected src,dst[,retweet_count], got " +
                                    std::to_string(fields.size()) + " fields");
    }
    if (fields[0].empty() || fields[1].empty()) throw ParseError(line_no, "empty node id");
    std::uint64_t count = 0;
    if (fields.size() == 3) {
      const auto c = text::parse_int(fields[2]);
      if (!c || *c < 0) {
        throw ParseError(line_no, "retweet_count must be a non-negative integer, got '" +
                                      std::string(fields[2]) + "'");
      }
      count = static_cast<std::uint64_t>(*c);
    }
    if (fields[0] == fields[1]) {
      ++result.self_loops_skipped;
      continue;
    }
    const NodeId a = intern(fields[0]);
    const NodeId b = intern(fields[1]);
    edges.push_back({a, b, count});
  }
  result.graph = SocialGraph(std::move(labels), std::move(edges));
  return result;
}

EdgeListLoad load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list '" + path + "'");
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const SocialGraph& g) {
  // Label order, so the output does not depend on how ids were assigned.
  std::vector<const DirectedEdge*> rows;
  rows.reserve(g.num_edges());
  for (const auto& e : g.edges()) rows.push_back(&e);
  std::sort(rows.begin(), rows.end(), [&](const DirectedEdge* x, const DirectedEdge* y) {
    const auto& xs = g.label(x->src);
    const auto& ys = g.label(y->src);
    return xs != ys ? xs < ys : g.label(x->dst) < g.label(y->dst);
  });
  out << "src,dst,retweet_count\n";
  for (const auto* e : rows) {
    out << g.label(e->src) << ',' << g.label(e->dst) << ',' << e->retweets << '\n';
  }
}

}  // namespace emoflow
