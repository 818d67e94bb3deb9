#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace emoflow {

/// Dense node index, 0..N-1 after ingestion.
using NodeId = std::uint32_t;

/// A directed follow edge `src -> dst` (src follows dst) with the number of
/// times src retweeted dst.
struct DirectedEdge {
  NodeId src;
  NodeId dst;
  std::uint64_t retweets;
};

/// Directed follower -> followee graph with per-edge retweet counts.
///
/// Immutable after construction. Edges are stored sorted by (src, dst) with
/// forward and reverse CSR indices; original string ids are kept in a side
/// table.
class SocialGraph {
 public:
  SocialGraph() = default;

  /// Builds from already-dense edges. Duplicate (src, dst) rows are merged by
  /// summing counts. Throws DomainError on self-loops or out-of-range ids.
  SocialGraph(std::vector<std::string> labels, std::vector<DirectedEdge> edges);

  std::size_t num_nodes() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const DirectedEdge> edges() const noexcept { return edges_; }

  /// Followees of `u` (out-neighbors), ascending.
  std::span<const NodeId> followees(NodeId u) const;
  /// Followers of `u` (in-neighbors), ascending.
  std::span<const NodeId> followers(NodeId u) const;

  bool has_edge(NodeId src, NodeId dst) const;
  /// R_src,dst; zero when the edge is absent.
  std::uint64_t retweets(NodeId src, NodeId dst) const;

  const std::string& label(NodeId u) const { return labels_.at(u); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

 private:
  void check_node(NodeId u) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<DirectedEdge> edges_;  // sorted by (src, dst)
  std::vector<std::size_t> out_offsets_;
  std::vector<NodeId> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<NodeId> in_sources_;
};

/// Weighted undirected edge used when building an UndirectedView directly.
struct WeightedEdge {
  NodeId a;
  NodeId b;
  double weight;
};

/// Symmetric projection of a SocialGraph: an undirected edge exists when
/// either direction is followed, with weight w_ij = R_ij + R_ji + 1.
///
/// Stored as CSR with ascending neighbor lists, so edge lookups are binary
/// searches and neighborhood intersections are linear merges.
class UndirectedView {
 public:
  UndirectedView() = default;
  explicit UndirectedView(const SocialGraph& g);

  /// Builds from explicit positive weights. Parallel edges are rejected.
  static UndirectedView from_edges(std::size_t num_nodes, std::span<const WeightedEdge> edges);

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId u) const;
  std::span<const double> weights(NodeId u) const;
  std::size_t degree(NodeId u) const { return neighbors(u).size(); }
  /// Index range of u's incident edges inside the flat CSR arrays.
  std::size_t edge_begin(NodeId u) const { return offsets_[u]; }

  bool has_edge(NodeId a, NodeId b) const;
  /// Weight of edge {a, b}; throws DomainError when absent.
  double weight(NodeId a, NodeId b) const;

 private:
  void build(std::size_t num_nodes, std::vector<WeightedEdge> edges);

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::vector<double> weights_;
};

struct EdgeListLoad {
  SocialGraph graph;
  std::size_t self_loops_skipped = 0;
};

/// Reads `src,dst[,retweet_count]` rows (tab, comma or whitespace separated).
/// A first row whose count column is not numeric, or a two-column first row
/// of column names (src,dst / source,target / ...), is a header; `#` starts
/// a comment line. Throws ParseError with the line number on malformed rows.
EdgeListLoad load_edge_list(std::istream& in);
EdgeListLoad load_edge_list_file(const std::string& path);

/// Writes the graph in the ingestion format, rows sorted by (src, dst) label.
void write_edge_list(std::ostream& out, const SocialGraph& g);

}  // namespace emoflow
