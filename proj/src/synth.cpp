#include "emoflow/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "emoflow/contagion.hpp"
#include "emoflow/errors.hpp"
#include "emoflow/rng.hpp"

namespace emoflow {

namespace {

std::size_t draw_categorical(Rng& rng, std::span<const double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  double u = uniform01(rng) * total;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (u < weights[k]) return k;
    u -= weights[k];
  }
  return weights.size() - 1;
}

bool in_unit(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void SbmSpec::validate() const {
  if (block_sizes.empty()) throw DomainError("SBM needs at least one block");
  for (auto s : block_sizes) {
    if (s < 1) throw DomainError("SBM block sizes must be >= 1");
  }
  if (!in_unit(p_intra) || !in_unit(p_inter)) throw DomainError("SBM probabilities must lie in [0, 1]");
  if (intra_weight_min < 1 || intra_weight_max < intra_weight_min || inter_weight < 1) {
    throw DomainError("SBM weights must be positive integers with min <= max");
  }
}

SyntheticGraph generate_sbm(const SbmSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(split_seed(seed, 0x5b3));
  std::vector<std::size_t> block;
  for (std::size_t b = 0; b < spec.block_sizes.size(); ++b) {
    block.insert(block.end(), spec.block_sizes[b], b);
  }
  const auto n = block.size();
  const auto intra_span = static_cast<std::uint64_t>(spec.intra_weight_max - spec.intra_weight_min + 1);

  std::vector<WeightedEdge> undirected;
  std::vector<DirectedEdge> directed;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      const bool same = block[a] == block[b];
      if (uniform01(rng) >= (same ? spec.p_intra : spec.p_inter)) continue;
      const auto w = same ? spec.intra_weight_min + static_cast<std::int64_t>(uniform_index(rng, intra_span))
                          : spec.inter_weight;
      const auto flux = static_cast<std::uint64_t>(w - 1);
      const auto forward = uniform_index(rng, flux + 1);
      undirected.push_back({a, b, static_cast<double>(w)});
      directed.push_back({a, b, forward});
      directed.push_back({b, a, flux - forward});
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t u = 0; u < n; ++u) labels[u] = std::to_string(u);

  SyntheticGraph out;
  out.graph = SocialGraph(std::move(labels), std::move(directed));
  out.view = UndirectedView::from_edges(n, undirected);
  out.block = std::move(block);
  return out;
}

void TweetStreamSpec::validate() const {
  if (!(hours > 0.0) || !(rate > 0.0) || !(window_hours > 0.0)) {
    throw DomainError("tweet stream horizon, rate and window must be positive");
  }
  if (!in_unit(neutral_fraction) || !in_unit(influence) || !in_unit(retweet_fraction)) {
    throw DomainError("tweet stream fractions must lie in [0, 1]");
  }
  if (std::any_of(mix.begin(), mix.end(), [](double p) { return p < 0.0; }) ||
      std::accumulate(mix.begin(), mix.end(), 0.0) <= 0.0) {
    throw DomainError("emotion mix must be non-negative with positive mass");
  }
}

TweetStore generate_tweets(const SocialGraph& graph, const TweetStreamSpec& spec,
                           std::uint64_t seed) {
  spec.validate();
  const auto n = graph.num_nodes();
  Rng rng(split_seed(seed, 0x7e7));
  const auto horizon = std::max<std::int64_t>(1, std::llround(spec.hours * 3600.0));
  std::poisson_distribution<long> count_dist(spec.rate * spec.hours);

  struct Pending {
    std::int64_t time;
    NodeId author;
  };
  std::vector<Pending> pending;
  for (NodeId u = 0; u < n; ++u) {
    // Per-user engine: one user's draws never shift another's.
    Rng user_rng(split_seed(split_seed(seed, 0x7e8), u));
    const auto count = count_dist(user_rng);
    for (long k = 0; k < count; ++k) {
      pending.push_back({spec.start_time + static_cast<std::int64_t>(uniform_index(user_rng, horizon)), u});
    }
  }
  std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return a.time != b.time ? a.time < b.time : a.author < b.author;
  });

  // Per-author history of labeled tweets, appended in time order.
  struct Posted {
    std::int64_t time;
    std::size_t tweet;
  };
  std::vector<std::vector<Posted>> history(n);
  std::vector<Tweet> tweets;
  tweets.reserve(pending.size());
  const auto window = window_seconds(spec.window_hours);
  std::vector<std::pair<NodeId, std::size_t>> ranges;  // (followee, first index in window)

  auto pick_exposure = [&](NodeId u, std::int64_t t) -> std::optional<std::size_t> {
    ranges.clear();
    std::size_t total = 0;
    for (NodeId w : graph.followees(u)) {
      const auto& h = history[w];
      const auto lo = std::lower_bound(h.begin(), h.end(), t - window,
                                       [](const Posted& p, std::int64_t x) { return p.time < x; });
      const auto hi = std::lower_bound(h.begin(), h.end(), t,
                                       [](const Posted& p, std::int64_t x) { return p.time < x; });
      const auto cnt = static_cast<std::size_t>(hi - lo);
      if (cnt == 0) continue;
      ranges.emplace_back(w, static_cast<std::size_t>(lo - h.begin()));
      total += cnt;
    }
    if (total == 0) return std::nullopt;
    auto pick = uniform_index(rng, total);
    for (const auto& [w, first] : ranges) {
      const auto& h = history[w];
      const auto hi = std::lower_bound(h.begin() + static_cast<std::ptrdiff_t>(first), h.end(), t,
                                       [](const Posted& p, std::int64_t x) { return p.time < x; });
      const auto cnt = static_cast<std::size_t>(hi - h.begin()) - first;
      if (pick < cnt) return h[first + pick].tweet;
      pick -= cnt;
    }
    return std::nullopt;
  };

  for (const auto& p : pending) {
    Tweet t;
    t.id = "t" + std::to_string(tweets.size());
    t.user = graph.label(p.author);
    t.author = p.author;
    t.time = p.time;

    bool labeled = false;
    if (uniform01(rng) < spec.retweet_fraction) {
      if (const auto src = pick_exposure(p.author, p.time)) {
        const auto& original = tweets[*src];
        t.source_id = original.id;
        t.source_user = original.user;
        t.source_author = original.author;
        t.emotion = original.emotion;
        labeled = true;
      }
    }
    if (!labeled && uniform01(rng) < spec.neutral_fraction) {
      t.emotion = Emotion::none;
      labeled = true;
    }
    if (!labeled && uniform01(rng) < spec.influence) {
      if (const auto src = pick_exposure(p.author, p.time)) {
        const auto e = tweets[*src].emotion;
        if (is_emotional(e) && spec.contagious[index(e)]) {
          t.emotion = e;
          labeled = true;
        }
      }
    }
    if (!labeled) t.emotion = kEmotions[draw_categorical(rng, spec.mix)];

    history[p.author].push_back({p.time, tweets.size()});
    tweets.push_back(std::move(t));
  }
  return TweetStore(std::move(tweets), n);
}

TweetStore shuffle_emotions(const TweetStore& store, std::size_t num_users, std::uint64_t seed) {
  std::vector<Tweet> tweets(store.tweets().begin(), store.tweets().end());
  std::vector<Emotion> labels;
  labels.reserve(tweets.size());
  for (const auto& t : tweets) labels.push_back(t.emotion);
  Rng rng(split_seed(seed, 0x5f1));
  // Fisher-Yates with the portable index draw.
  for (std::size_t k = labels.size(); k > 1; --k) {
    std::swap(labels[k - 1], labels[uniform_index(rng, k)]);
  }
  for (std::size_t k = 0; k < tweets.size(); ++k) {
    tweets[k].emotion = labels[k];
    tweets[k].source_id.reset();
    tweets[k].source_user.clear();
    tweets[k].source_author = kNoNode;
  }
  return TweetStore(std::move(tweets), num_users);
}

EventRecord event_from_curve(const std::string& id, const SimResult& result, Emotion emotion) {
  EventRecord e;
  e.id = id;
  const auto n = static_cast<Eigen::Index>(result.curve.size());
  e.hourly.setZero(n, 4);
  std::size_t prev = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    e.hourly(k, static_cast<Eigen::Index>(index(emotion))) =
        static_cast<std::int64_t>(result.curve[static_cast<std::size_t>(k)] - prev);
    prev = result.curve[static_cast<std::size_t>(k)];
  }
  return e;
}

std::vector<EventRecord> generate_events(const UndirectedView& g, const EventSpec& spec,
                                         std::uint64_t seed) {
  if (!(spec.dominant_share >= 0.0 && spec.dominant_share <= 1.0)) {
    throw DomainError("dominant share must lie in [0, 1]");
  }
  std::vector<EventRecord> events;
  std::size_t serial = 0;
  for (std::size_t c = 0; c < spec.classes.size(); ++c) {
    const auto& cls = spec.classes[c];
    if (!is_emotional(cls.emotion)) throw DomainError("event class needs an emotion");
    const TransmissionModel model(g, cls.alpha, cls.gamma);
    for (std::size_t k = 0; k < cls.count; ++k, ++serial) {
      SimConfig cfg;
      cfg.alpha = cls.alpha;
      cfg.gamma = cls.gamma;
      cfg.max_steps = spec.max_steps;
      cfg.stop = spec.stop;
      cfg.rng_seed = split_seed(seed, serial);
      const auto result = run(model, cfg);

      char id[64];
      std::snprintf(id, sizeof id, "%s_%03zu", std::string(name(cls.emotion)).c_str(), k);
      auto event = event_from_curve(id, result, cls.emotion);

      // Relabel a share of each hour's tweets to the other emotions.
      Rng label_rng(split_seed(seed ^ 0xe7e7e7ULL, serial));
      const auto dom = static_cast<Eigen::Index>(index(cls.emotion));
      for (Eigen::Index h = 0; h < event.hourly.rows(); ++h) {
        const auto total = event.hourly(h, dom);
        event.hourly.row(h).setZero();
        for (std::int64_t t = 0; t < total; ++t) {
          if (uniform01(label_rng) < spec.dominant_share) {
            ++event.hourly(h, dom);
          } else {
            auto other = static_cast<Eigen::Index>(uniform_index(label_rng, 3));
            if (other >= dom) ++other;
            ++event.hourly(h, other);
          }
        }
      }
      events.push_back(std::move(event));
    }
  }
  return events;
}

}  // namespace emoflow
