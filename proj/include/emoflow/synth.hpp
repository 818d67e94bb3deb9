#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "emoflow/burst.hpp"
#include "emoflow/diffusion.hpp"
#include "emoflow/emotion.hpp"
#include "emoflow/graph.hpp"
#include "emoflow/tweets.hpp"

namespace emoflow {

/// Stochastic block model with integer tie weights.
struct SbmSpec {
  std::vector<std::size_t> block_sizes{250, 250, 250, 250};
  double p_intra = 0.05;
  double p_inter = 0.005;
  std::int64_t intra_weight_min = 2;  ///< intra weights ~ uniform{min..max}
  std::int64_t intra_weight_max = 6;
  std::int64_t inter_weight = 1;

  void validate() const;
};

struct SyntheticGraph {
  /// Mutual follows for every sampled pair; the retweet counts of the two
  /// directions sum to weight - 1, so UndirectedView(graph) reproduces the
  /// sampled weights.
  SocialGraph graph;
  UndirectedView view;
  std::vector<std::size_t> block;  ///< block of each node
};

/// Samples each unordered pair independently. Node labels are 0..N-1.
SyntheticGraph generate_sbm(const SbmSpec& spec, std::uint64_t seed);

struct TweetStreamSpec {
  double hours = 48.0;          ///< time horizon
  double rate = 1.0;            ///< tweets per user per hour
  double neutral_fraction = 0.2;
  /// Base emotion mix for uninfluenced tweets (anger, disgust, joy, sadness).
  std::array<double, kNumEmotions> mix{0.25, 0.15, 0.45, 0.15};
  /// Probability that a tweet copies the emotion of a random recent
  /// exposure, if that emotion is contagious.
  double influence = 0.3;
  std::array<bool, kNumEmotions> contagious{true, false, false, false};
  double window_hours = 1.0;    ///< look-back used by the generator
  double retweet_fraction = 0.2;
  std::int64_t start_time = 1'400'000'000;

  void validate() const;
};

/// Synthetic stream on `graph`'s users. Tweets are labeled in time order
/// from exposure to followees' earlier tweets, which injects the configured
/// correlation. Retweets repost a random exposure and carry its label.
TweetStore generate_tweets(const SocialGraph& graph, const TweetStreamSpec& spec,
                           std::uint64_t seed);

/// Same authors and timestamps with emotion labels randomly permuted across
/// tweets; retweet links are dropped so labels carry no temporal structure.
TweetStore shuffle_emotions(const TweetStore& store, std::size_t num_users, std::uint64_t seed);

struct EventClassSpec {
  Emotion emotion = Emotion::anger;
  std::size_t count = 0;
  double alpha = 0.0;
  double gamma = 0.5;
};

struct EventSpec {
  std::vector<EventClassSpec> classes{{Emotion::anger, 30, -0.5, 0.9},
                                      {Emotion::joy, 30, 0.5, 0.6}};
  /// Probability that an infection is labeled with the class emotion; the
  /// rest are spread uniformly over the other three.
  double dominant_share = 0.8;
  std::size_t max_steps = 10000;
  StopRule stop = StopRule::all_infected;
};

/// One model run per event; hour k holds the infections of step k.
std::vector<EventRecord> generate_events(const UndirectedView& g, const EventSpec& spec,
                                         std::uint64_t seed);

/// Converts a simulated curve into an event whose emotional tweets are all
/// of `emotion` (hour 0 holds the seed).
EventRecord event_from_curve(const std::string& id, const SimResult& result, Emotion emotion);

}  // namespace emoflow
