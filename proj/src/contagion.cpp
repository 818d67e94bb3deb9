#include "emoflow/contagion.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "emoflow/errors.hpp"
#include "emoflow/parallel.hpp"

namespace emoflow {

std::int64_t window_seconds(double hours) {
  if (!(hours > 0.0)) throw DomainError("observation window must be positive");
  return std::llround(hours * 3600.0);
}

EmotionCounts exposure_counts(const TweetStore& store, const SocialGraph& graph, NodeId u,
                              std::int64_t t, double window_hours) {
  if (u == kNoNode || u >= graph.num_nodes()) throw DomainError("user is not in the graph");
  const auto begin = t - window_seconds(window_hours);
  EmotionCounts total = EmotionCounts::Zero();
  for (NodeId w : graph.followees(u)) total += store.count_window(w, begin, t);
  return total;
}

std::optional<EmotionDistribution> exposure_vector(const TweetStore& store,
                                                   const SocialGraph& graph, const Tweet& tweet,
                                                   double window_hours, std::int64_t threshold) {
  const EmotionCounts c = exposure_counts(store, graph, tweet.author, tweet.time, window_hours);
  const auto n = c.sum();
  if (n < threshold || n == 0) return std::nullopt;
  return c.cast<double>() / static_cast<double>(n);
}

std::vector<ExposureSample> qualifying_exposures(const TweetStore& store, const SocialGraph& graph,
                                                 double window_hours, std::int64_t threshold,
                                                 unsigned threads) {
  const auto tweets = store.tweets();
  std::vector<std::optional<ExposureSample>> slots(tweets.size());
  parallel_for(tweets.size(), threads, [&](std::size_t k) {
    const auto& t = tweets[k];
    if (!is_emotional(t.emotion) || t.author == kNoNode) return;
    if (auto v = exposure_vector(store, graph, t, window_hours, threshold)) {
      slots[k] = ExposureSample{k, t.author, t.emotion, *v};
    }
  });
  std::vector<ExposureSample> out;
  for (auto& s : slots) {
    if (s) out.push_back(*s);
  }
  return out;
}

bool Baselines::complete() const {
  return std::all_of(per_emotion.begin(), per_emotion.end(),
                     [](const auto& v) { return v.has_value(); });
}

std::array<EmotionDistribution, kNumEmotions> Baselines::centers() const {
  std::array<EmotionDistribution, kNumEmotions> c;
  for (std::size_t j = 0; j < kNumEmotions; ++j) {
    if (!per_emotion[j]) {
      throw UndefinedError("no qualifying " + std::string(name(kEmotions[j])) +
                           " tweets; baseline undefined");
    }
    c[j] = *per_emotion[j];
  }
  return c;
}

Baselines baseline_vectors(std::span<const ExposureSample> samples) {
  if (samples.empty()) throw UndefinedError("no tweet passes the exposure threshold");
  Baselines b;
  std::array<EmotionDistribution, kNumEmotions> sums;
  for (auto& s : sums) s.setZero();
  for (const auto& s : samples) {
    b.all += s.exposure;
    sums[index(s.label)] += s.exposure;
    ++b.counts[index(s.label)];
  }
  b.total = samples.size();
  b.all /= static_cast<double>(b.total);
  for (std::size_t j = 0; j < kNumEmotions; ++j) {
    if (b.counts[j] > 0) b.per_emotion[j] = sums[j] / static_cast<double>(b.counts[j]);
  }
  return b;
}

double influenced_percentage(std::span<const ExposureSample> samples, const Baselines& base,
                             Emotion emotion) {
  const auto centers = base.centers();
  std::size_t n = 0;
  std::size_t hit = 0;
  for (const auto& s : samples) {
    if (s.label != emotion) continue;
    ++n;
    if (classify_influenced(s.exposure, centers) == emotion) ++hit;
  }
  if (n == 0) {
    throw UndefinedError("no qualifying " + std::string(name(emotion)) + " tweets");
  }
  return static_cast<double>(hit) / static_cast<double>(n);
}

namespace {

GroupReport group_report(std::vector<NodeId> users, std::span<const ExposureSample> samples,
                         const std::vector<bool>& influenced) {
  GroupReport g;
  std::sort(users.begin(), users.end());
  std::array<std::size_t, kNumEmotions> hits{};
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (!std::binary_search(users.begin(), users.end(), samples[k].author)) continue;
    const auto e = index(samples[k].label);
    ++g.tweets[e];
    if (influenced[k]) ++hits[e];
  }
  for (std::size_t e = 0; e < kNumEmotions; ++e) {
    if (g.tweets[e] > 0) {
      g.influenced[e] = static_cast<double>(hits[e]) / static_cast<double>(g.tweets[e]);
    }
  }
  g.users = std::move(users);
  return g;
}

}  // namespace

SusceptibilityReport susceptibility_partition(std::span<const ExposureSample> samples,
                                              const Baselines& base, double fraction) {
  if (!(fraction > 0.0 && fraction <= 0.5)) {
    throw DomainError("susceptibility fraction must lie in (0, 0.5]");
  }
  const auto centers = base.centers();
  std::vector<bool> influenced(samples.size());
  std::map<NodeId, std::pair<std::size_t, std::size_t>> per_user;  // (influenced, total)
  for (std::size_t k = 0; k < samples.size(); ++k) {
    influenced[k] = classify_influenced(samples[k].exposure, centers) == samples[k].label;
    auto& [hit, total] = per_user[samples[k].author];
    ++total;
    if (influenced[k]) ++hit;
  }

  struct Ranked {
    NodeId user;
    double ratio;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(per_user.size());
  for (const auto& [user, ht] : per_user) {
    ranked.push_back({user, static_cast<double>(ht.first) / static_cast<double>(ht.second)});
  }
  const auto need = static_cast<std::size_t>(std::ceil(1.0 / fraction - 1e-9));
  if (ranked.size() < need) {
    throw DomainError("susceptibility partition needs at least " + std::to_string(need) +
                      " ranked users, have " + std::to_string(ranked.size()));
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    return a.ratio != b.ratio ? a.ratio > b.ratio : a.user < b.user;
  });
  const auto group = static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(ranked.size()) + 1e-9));

  std::vector<NodeId> high, low;
  for (std::size_t k = 0; k < group; ++k) high.push_back(ranked[k].user);
  for (std::size_t k = ranked.size() - group; k < ranked.size(); ++k) low.push_back(ranked[k].user);

  SusceptibilityReport r;
  r.ranked_users = ranked.size();
  r.high = group_report(std::move(high), samples, influenced);
  r.low = group_report(std::move(low), samples, influenced);
  return r;
}

ContagionReport contagion_report(const TweetStore& store, const SocialGraph& graph,
                                 const ContagionOptions& options) {
  ContagionReport report;
  for (double window : options.windows) {
    const auto samples =
        qualifying_exposures(store, graph, window, options.threshold, options.threads);
    std::optional<Baselines> base;
    if (!samples.empty()) base = baseline_vectors(samples);

    std::array<std::size_t, kNumEmotions> hits{};
    const bool complete = base && base->complete();
    if (complete) {
      const auto centers = base->centers();
      for (const auto& s : samples) {
        if (classify_influenced(s.exposure, centers) == s.label) ++hits[index(s.label)];
      }
    }
    for (auto e : kEmotions) {
      ContagionRow row;
      row.window_hours = window;
      row.emotion = e;
      if (base) {
        const auto j = index(e);
        row.qualifying = base->counts[j];
        if (base->per_emotion[j]) {
          row.significance = contagion_significance(base->all, *base->per_emotion[j], e);
        }
        if (complete && row.qualifying > 0) {
          row.influenced = static_cast<double>(hits[j]) / static_cast<double>(row.qualifying);
          row.influenced_share = static_cast<double>(hits[j]) / static_cast<double>(base->total);
        }
      }
      report.rows.push_back(row);
    }
    if (complete) {
      try {
        report.susceptibility.emplace_back(
            window, susceptibility_partition(samples, *base, options.susceptibility_fraction));
      } catch (const DomainError&) {
        report.windows_without_partition.push_back(window);
      }
    } else {
      report.windows_without_partition.push_back(window);
    }
  }
  return report;
}

}  // namespace emoflow
