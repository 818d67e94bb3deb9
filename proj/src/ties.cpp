#include "emoflow/ties.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "emoflow/errors.hpp"

namespace emoflow {

double common_friends_strength(const UndirectedView& g, NodeId i, NodeId j) {
  if (!g.has_edge(i, j)) {
    throw DomainError("common friends: " + std::to_string(i) + " and " + std::to_string(j) +
                      " are not adjacent");
  }
  const auto ni = g.neighbors(i);
  const auto nj = g.neighbors(j);
  // Sorted-merge intersection; neither i nor j can appear in both lists
  // since there are no self-loops.
  std::size_t common = 0;
  auto a = ni.begin();
  auto b = nj.begin();
  while (a != ni.end() && b != nj.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++common;
      ++a;
      ++b;
    }
  }
  const auto others = (ni.size() - 1) + (nj.size() - 1);
  const auto denom = others - common;
  if (denom == 0) {
    assert(common == 0);
    return 0.0;
  }
  return static_cast<double>(common) / static_cast<double>(denom);
}

double reciprocity_ratio(std::uint64_t r_ij, std::uint64_t r_ji) noexcept {
  const auto flux = r_ij + r_ji;
  if (flux == 0) return 0.0;
  return 2.0 * static_cast<double>(std::min(r_ij, r_ji)) / static_cast<double>(flux);
}

double reciprocity_strength(const SocialGraph& g, NodeId i, NodeId j) {
  return reciprocity_ratio(g.retweets(i, j), g.retweets(j, i));
}

double normalize_retweet_strength(std::uint64_t s, std::uint64_t s_min, std::uint64_t s_max) {
  if (s < s_min || s > s_max) throw DomainError("retweet strength outside [S_min, S_max]");
  if (s_max == s_min) return 0.0;
  return static_cast<double>(s - s_min) / static_cast<double>(s_max - s_min);
}

RetweetHistory::RetweetHistory(std::span<const RetweetRecord> all_retweets) {
  for (const auto& r : all_retweets) times_[key(r.retweeter, r.author)].push_back(r.time);
  for (auto& [k, v] : times_) std::sort(v.begin(), v.end());
}

std::uint64_t RetweetHistory::count_before(NodeId retweeter, NodeId author,
                                           std::int64_t time) const {
  const auto it = times_.find(key(retweeter, author));
  if (it == times_.end()) return 0;
  const auto& v = it->second;
  return static_cast<std::uint64_t>(std::lower_bound(v.begin(), v.end(), time) - v.begin());
}

MetricSummary summarize(std::span<const double> values) {
  if (values.empty()) throw UndefinedError("summary of an empty sample");
  MetricSummary s;
  s.n = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    const double sd = std::sqrt(ss / static_cast<double>(s.n - 1));
    s.std_error = sd / std::sqrt(static_cast<double>(s.n));
  }
  return s;
}

TieStrengthReport tie_strength_report(const SocialGraph& g, const UndirectedView& view,
                                      std::span<const RetweetRecord> records,
                                      const RetweetHistory& history) {
  TieStrengthReport report;

  struct Usable {
    const RetweetRecord* rec;
    std::uint64_t strength;
  };
  std::vector<Usable> usable;
  usable.reserve(records.size());
  for (const auto& r : records) {
    if (!is_emotional(r.emotion)) {
      ++report.skipped_neutral;
      continue;
    }
    if (!g.has_edge(r.retweeter, r.author)) {
      ++report.skipped_no_edge;
      continue;
    }
    usable.push_back({&r, history.count_before(r.retweeter, r.author, r.time)});
  }
  if (usable.empty()) throw UndefinedError("tie-strength report: no usable emotional retweets");

  const auto [lo, hi] = std::minmax_element(
      usable.begin(), usable.end(),
      [](const Usable& a, const Usable& b) { return a.strength < b.strength; });
  report.strength_min = lo->strength;
  report.strength_max = hi->strength;
  report.records_used = usable.size();

  std::array<std::vector<double>, kNumEmotions> overlap, strength;
  std::array<std::uint64_t, kNumEmotions> recip{}, flux{};
  for (const auto& u : usable) {
    const auto& r = *u.rec;
    const auto e = index(r.emotion);
    overlap[e].push_back(common_friends_strength(view, r.retweeter, r.author));
    strength[e].push_back(
        normalize_retweet_strength(u.strength, report.strength_min, report.strength_max));
    const auto r_ij = g.retweets(r.retweeter, r.author);
    const auto r_ji = g.retweets(r.author, r.retweeter);
    recip[e] += 2 * std::min(r_ij, r_ji);
    flux[e] += r_ij + r_ji;
  }

  for (std::size_t e = 0; e < kNumEmotions; ++e) {
    if (overlap[e].empty()) continue;
    EmotionTieStats st;
    st.common_friends = summarize(overlap[e]);
    st.retweet_strength = summarize(strength[e]);
    st.reciprocal_flux = recip[e];
    st.total_flux = flux[e];
    st.reciprocity = flux[e] == 0 ? 0.0
                                  : static_cast<double>(recip[e]) / static_cast<double>(flux[e]);
    report.per_emotion[e] = st;
  }
  return report;
}

TieStrengthReport tie_strength_report(const SocialGraph& g, std::span<const RetweetRecord> records,
                                      const RetweetHistory& history) {
  return tie_strength_report(g, UndirectedView(g), records, history);
}

}  // namespace emoflow
