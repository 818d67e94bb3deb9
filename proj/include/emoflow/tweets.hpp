#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emoflow/emotion.hpp"
#include "emoflow/graph.hpp"
#include "emoflow/ties.hpp"

namespace emoflow {

/// Marks an author or source user that does not appear in the graph.
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Tweet {
  std::string id;
  std::string user;  ///< original user id
  NodeId author = kNoNode;
  std::int64_t time = 0;  ///< unix seconds
  Emotion emotion = Emotion::none;
  /// Label the tweet carries when pushed to followers. For a retweet whose
  /// original is in the store this is the original's label.
  Emotion exposure_emotion = Emotion::none;
  std::optional<std::string> source_id;
  std::string source_user;
  NodeId source_author = kNoNode;
};

/// Per-emotion counts (anger, disgust, joy, sadness).
using EmotionCounts = Eigen::Matrix<std::int64_t, 4, 1>;

/// Immutable, time-sorted tweet collection indexed by author.
class TweetStore {
 public:
  TweetStore() = default;
  /// Sorts by time (stable) and resolves retweet sources.
  TweetStore(std::vector<Tweet> tweets, std::size_t num_users);

  std::span<const Tweet> tweets() const noexcept { return tweets_; }
  std::size_t size() const noexcept { return tweets_.size(); }

  /// Emotional tweets (by exposure label) authored by `author` with time in
  /// [begin, end).
  EmotionCounts count_window(NodeId author, std::int64_t begin, std::int64_t end) const;

  std::size_t unknown_emotions = 0;  ///< rows whose label was not recognized
  std::size_t unknown_users = 0;     ///< rows whose author is not in the graph

 private:
  struct Timeline {
    std::vector<std::int64_t> times;
    std::vector<EmotionCounts> cumulative;  // size times.size() + 1
  };
  std::vector<Tweet> tweets_;
  std::vector<Timeline> timelines_;
};

/// Reads `tweet_id,user_id,unix_timestamp,emotion[,source_tweet_id,source_user_id]`.
/// User ids are resolved against `graph`; unknown emotion tokens become
/// `none` and are counted. Throws ParseError on a bad timestamp or column
/// count.
TweetStore load_tweets(std::istream& in, const SocialGraph& graph);
TweetStore load_tweets_file(const std::string& path, const SocialGraph& graph);

void write_tweets(std::ostream& out, const TweetStore& store);

/// Every retweet whose retweeter and original author are graph users,
/// labeled with the retweeted content's emotion.
std::vector<RetweetRecord> extract_retweets(const TweetStore& store);

}  // namespace emoflow
