#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "emoflow/emotion.hpp"
#include "emoflow/graph.hpp"

namespace emoflow {

/// Neighborhood overlap c_ij / (k_i - 1 + k_j - 1 - c_ij) on the undirected
/// projection. c_ij counts common neighbors other than i and j. Returns 0 when
/// both endpoints have no other neighbors. Throws DomainError if {i, j} is
/// not an edge.
double common_friends_strength(const UndirectedView& g, NodeId i, NodeId j);

/// 2 min(r_ij, r_ji) / (r_ij + r_ji); 0 for zero flux.
double reciprocity_ratio(std::uint64_t r_ij, std::uint64_t r_ji) noexcept;

/// Reciprocity of the retweet flux between i and j in the directed graph.
double reciprocity_strength(const SocialGraph& g, NodeId i, NodeId j);

/// Min-max normalization (s - s_min) / (s_max - s_min); 0 when the range is
/// empty. Throws DomainError when s lies outside [s_min, s_max].
double normalize_retweet_strength(std::uint64_t s, std::uint64_t s_min, std::uint64_t s_max);

/// One emotional retweet: `retweeter` reposted a tweet by `author`.
struct RetweetRecord {
  NodeId retweeter;
  NodeId author;
  Emotion emotion;
  std::int64_t time;
};

/// Time-stamped retweet counts per directed (retweeter, author) pair, for
/// "retweets so far" queries.
class RetweetHistory {
 public:
  RetweetHistory() = default;
  explicit RetweetHistory(std::span<const RetweetRecord> all_retweets);

  /// Retweets by `retweeter` of `author` strictly before `time`.
  std::uint64_t count_before(NodeId retweeter, NodeId author, std::int64_t time) const;

 private:
  static std::uint64_t key(NodeId a, NodeId b) noexcept {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }
  std::unordered_map<std::uint64_t, std::vector<std::int64_t>> times_;
};

struct MetricSummary {
  double mean = 0.0;
  double std_error = 0.0;  ///< sample stddev / sqrt(n); 0 when n == 1
  std::size_t n = 0;
};

struct EmotionTieStats {
  MetricSummary common_friends;
  /// Pooled ratio over all records: sum of 2 min(R_ij, R_ji) over sum of flux.
  double reciprocity = 0.0;
  std::uint64_t reciprocal_flux = 0;
  std::uint64_t total_flux = 0;
  MetricSummary retweet_strength;
};

struct TieStrengthReport {
  std::array<std::optional<EmotionTieStats>, kNumEmotions> per_emotion;
  std::size_t records_used = 0;
  std::size_t skipped_no_edge = 0;
  std::size_t skipped_neutral = 0;
  std::uint64_t strength_min = 0;
  std::uint64_t strength_max = 0;
};

/// Averages the three tie-strength metrics over emotional retweets, per
/// emotion. Records whose follow edge retweeter -> author is missing are
/// skipped and counted. Throws UndefinedError when nothing remains.
TieStrengthReport tie_strength_report(const SocialGraph& g, const UndirectedView& view,
                                      std::span<const RetweetRecord> records,
                                      const RetweetHistory& history);

TieStrengthReport tie_strength_report(const SocialGraph& g, std::span<const RetweetRecord> records,
                                      const RetweetHistory& history);

/// Mean and standard error of a sample; n == 0 throws UndefinedError.
MetricSummary summarize(std::span<const double> values);

}  // namespace emoflow
