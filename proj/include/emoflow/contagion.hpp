#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "emoflow/emotion.hpp"
#include "emoflow/graph.hpp"
#include "emoflow/tweets.hpp"

namespace emoflow {

inline constexpr std::int64_t kDefaultExposureThreshold = 20;

/// Window length in hours converted to whole seconds.
std::int64_t window_seconds(double hours);

/// Emotional tweets from u's followees with time in [t - window, t).
EmotionCounts exposure_counts(const TweetStore& store, const SocialGraph& graph, NodeId u,
                              std::int64_t t, double window_hours);

/// Emotion distribution of what `tweet`'s author saw during the window
/// before posting it. Returns nullopt when fewer than `threshold` emotional
/// tweets were seen. Throws DomainError when the author is not in the graph.
std::optional<EmotionDistribution> exposure_vector(const TweetStore& store,
                                                   const SocialGraph& graph, const Tweet& tweet,
                                                   double window_hours,
                                                   std::int64_t threshold = kDefaultExposureThreshold);

/// An emotional tweet whose exposure reached the threshold.
struct ExposureSample {
  std::size_t tweet;  ///< index into TweetStore::tweets()
  NodeId author;
  Emotion label;
  EmotionDistribution exposure;
};

/// Exposure vectors of every emotional tweet by a graph user that passes
/// the threshold, in store order.
std::vector<ExposureSample> qualifying_exposures(const TweetStore& store, const SocialGraph& graph,
                                                 double window_hours, std::int64_t threshold,
                                                 unsigned threads = 1);

struct Baselines {
  EmotionDistribution all = EmotionDistribution::Zero();
  /// Mean exposure before tweets of each emotion; nullopt when no tweet of
  /// that emotion qualified.
  std::array<std::optional<EmotionDistribution>, kNumEmotions> per_emotion;
  std::array<std::size_t, kNumEmotions> counts{};
  std::size_t total = 0;

  bool complete() const;
  /// The four per-emotion centers; throws UndefinedError if any is missing.
  std::array<EmotionDistribution, kNumEmotions> centers() const;
};

/// Componentwise means of exposure vectors (all samples, and per label).
/// Throws UndefinedError when there are no samples.
Baselines baseline_vectors(std::span<const ExposureSample> samples);

/// d_i = v_i[i] - v_all[i].
template <typename DerivedAll, typename DerivedI>
typename DerivedAll::Scalar contagion_significance(const Eigen::MatrixBase<DerivedAll>& v_all,
                                                   const Eigen::MatrixBase<DerivedI>& v_i,
                                                   Emotion i) {
  const auto k = static_cast<Eigen::Index>(index(i));
  return v_i(k) - v_all(k);
}

/// Nearest center (Euclidean) to v; exact ties resolve to the earlier
/// emotion in (anger, disgust, joy, sadness).
template <typename Derived>
Emotion classify_influenced(
    const Eigen::MatrixBase<Derived>& v,
    const std::array<EmotionVector<typename Derived::Scalar>, kNumEmotions>& centers) {
  std::size_t best = 0;
  auto best_d = (v - centers[0]).squaredNorm();
  for (std::size_t j = 1; j < kNumEmotions; ++j) {
    const auto d = (v - centers[j]).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return kEmotions[best];
}

/// Fraction of qualifying `emotion` tweets whose nearest center is their own
/// emotion. Throws UndefinedError when no such tweet qualifies.
double influenced_percentage(std::span<const ExposureSample> samples, const Baselines& base,
                             Emotion emotion);

struct GroupReport {
  std::vector<NodeId> users;
  /// Influenced fraction per emotion over the group's tweets; nullopt when
  /// the group has no qualifying tweet of that emotion.
  std::array<std::optional<double>, kNumEmotions> influenced;
  std::array<std::size_t, kNumEmotions> tweets{};
};

struct SusceptibilityReport {
  GroupReport high;
  GroupReport low;
  std::size_t ranked_users = 0;
};

/// Ranks users by their fraction of influenced tweets (descending, ties by
/// ascending id) and reports the top and bottom `fraction` of them. Throws
/// DomainError if fewer than ceil(1 / fraction) users can be ranked.
SusceptibilityReport susceptibility_partition(std::span<const ExposureSample> samples,
                                              const Baselines& base, double fraction);

struct ContagionRow {
  double window_hours = 0.0;
  Emotion emotion = Emotion::none;
  std::size_t qualifying = 0;
  std::optional<double> significance;  ///< d_i
  std::optional<double> influenced;    ///< fraction of this emotion's tweets
  double influenced_share = 0.0;       ///< influenced tweets of this emotion / all qualifying
};

struct ContagionReport {
  std::vector<ContagionRow> rows;  ///< one per (window, emotion)
  std::vector<std::pair<double, SusceptibilityReport>> susceptibility;
  std::vector<double> windows_without_partition;
};

struct ContagionOptions {
  std::vector<double> windows{1, 2, 3, 4, 5, 6, 7, 8};
  std::int64_t threshold = kDefaultExposureThreshold;
  double susceptibility_fraction = 0.15;
  unsigned threads = 1;
};

ContagionReport contagion_report(const TweetStore& store, const SocialGraph& graph,
                                 const ContagionOptions& options);

}  // namespace emoflow
