#include "emoflow/tweets.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "emoflow/errors.hpp"
#include "text.hpp"

namespace emoflow {

TweetStore::TweetStore(std::vector<Tweet> tweets, std::size_t num_users)
    : tweets_(std::move(tweets)), timelines_(num_users) {
  std::stable_sort(tweets_.begin(), tweets_.end(),
                   [](const Tweet& a, const Tweet& b) { return a.time < b.time; });

  std::unordered_map<std::string_view, std::size_t> by_id;
  by_id.reserve(tweets_.size());
  for (std::size_t k = 0; k < tweets_.size(); ++k) by_id.emplace(tweets_[k].id, k);
  for (auto& t : tweets_) {
    t.exposure_emotion = t.emotion;
    if (!t.source_id) continue;
    const auto it = by_id.find(*t.source_id);
    if (it == by_id.end()) continue;
    const auto& original = tweets_[it->second];
    t.exposure_emotion = original.emotion;
    if (t.source_author == kNoNode) t.source_author = original.author;
  }

  for (auto& tl : timelines_) tl.cumulative.push_back(EmotionCounts::Zero());
  for (const auto& t : tweets_) {
    if (t.author == kNoNode || t.author >= num_users || !is_emotional(t.exposure_emotion)) continue;
    auto& tl = timelines_[t.author];
    EmotionCounts next = tl.cumulative.back();
    ++next[static_cast<Eigen::Index>(index(t.exposure_emotion))];
    tl.times.push_back(t.time);
    tl.cumulative.push_back(next);
  }
}

EmotionCounts TweetStore::count_window(NodeId author, std::int64_t begin, std::int64_t end) const {
  if (author >= timelines_.size()) return EmotionCounts::Zero();
  const auto& tl = timelines_[author];
  const auto lo = std::lower_bound(tl.times.begin(), tl.times.end(), begin) - tl.times.begin();
  const auto hi = std::lower_bound(tl.times.begin(), tl.times.end(), end) - tl.times.begin();
  if (hi <= lo) return EmotionCounts::Zero();
  return tl.cumulative[static_cast<std::size_t>(hi)] - tl.cumulative[static_cast<std::size_t>(lo)];
}

TweetStore load_tweets(std::istream& in, const SocialGraph& graph) {
  std::vector<Tweet> rows;
  std::size_t unknown_emotions = 0;
  std::size_t unknown_users = 0;

  auto resolve = [&](std::string_view user) -> NodeId {
    if (const auto id = graph.find(user)) return *id;
    return kNoNode;
  };

  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::skippable(line)) continue;
    const auto f = text::split_fields(line);
    if (first_row) {
      first_row = false;
      const bool any_numeric = std::any_of(f.begin(), f.end(), text::is_numeric);
      const bool emotion_token = f.size() >= 4 && parse_emotion(f[3]).has_value();
      if (!any_numeric && !emotion_token) continue;
    }
    if (f.size() < 4 || f.size() > 6) {
      throw ParseError(line_no, "expected 4 to 6 tweet fields, got " + std::to_string(f.size()));
    }
    Tweet t;
    t.id = std::string(f[0]);
    if (t.id.empty()) throw ParseError(line_no, "empty tweet id");
    const auto ts = text::parse_int(f[2]);
    if (!ts) throw ParseError(line_no, "unparseable timestamp '" + std::string(f[2]) + "'");
    t.time = *ts;
    if (const auto e = parse_emotion(f[3])) {
      t.emotion = *e;
    } else {
      t.emotion = Emotion::none;
      ++unknown_emotions;
    }
    t.user = std::string(f[1]);
    t.author = resolve(f[1]);
    if (t.author == kNoNode) ++unknown_users;
    if (f.size() >= 5 && !f[4].empty()) t.source_id = std::string(f[4]);
    if (f.size() == 6 && !f[5].empty()) {
      t.source_user = std::string(f[5]);
      t.source_author = resolve(f[5]);
    }
    rows.push_back(std::move(t));
  }
  TweetStore store(std::move(rows), graph.num_nodes());
  store.unknown_emotions = unknown_emotions;
  store.unknown_users = unknown_users;
  return store;
}

TweetStore load_tweets_file(const std::string& path, const SocialGraph& graph) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tweet file '" + path + "'");
  return load_tweets(in, graph);
}

void write_tweets(std::ostream& out, const TweetStore& store) {
  out << "tweet_id,user_id,unix_timestamp,emotion,source_tweet_id,source_user_id\n";
  for (const auto& t : store.tweets()) {
    out << t.id << ',' << t.user << ',' << t.time << ',' << name(t.emotion) << ','
        << t.source_id.value_or("") << ',' << t.source_user << '\n';
  }
}

std::vector<RetweetRecord> extract_retweets(const TweetStore& store) {
  std::vector<RetweetRecord> out;
  for (const auto& t : store.tweets()) {
    if (!t.source_id || t.author == kNoNode || t.source_author == kNoNode) continue;
    if (t.author == t.source_author) continue;
    out.push_back({t.author, t.source_author, t.exposure_emotion, t.time});
  }
  return out;
}

}  // namespace emoflow
