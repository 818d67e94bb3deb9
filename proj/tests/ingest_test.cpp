#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "emoflow/contagion.hpp"
#include "emoflow/errors.hpp"
#include "emoflow/synth.hpp"
#include "emoflow/tweets.hpp"

using namespace emoflow;

namespace {

// Users "0".."n-1"; `follows` lists (follower, followee).
SocialGraph make_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& follows) {
  std::vector<std::string> labels;
  for (std::size_t u = 0; u < n; ++u) labels.push_back(std::to_string(u));
  std::vector<DirectedEdge> e;
  for (auto [a, b] : follows) e.push_back({a, b, 0});
  return SocialGraph(labels, e);
}

struct StreamBuilder {
  std::vector<Tweet> tweets;
  void add(NodeId user, std::int64_t time, Emotion e, int count = 1) {
    for (int k = 0; k < count; ++k) {
      Tweet t;
      t.id = "t" + std::to_string(tweets.size());
      t.user = std::to_string(user);
      t.author = user;
      t.time = time;
      t.emotion = e;
      tweets.push_back(t);
    }
  }
  TweetStore build(std::size_t n) const { return TweetStore(tweets, n); }
};

// Brute force: scan every tweet in the store.
EmotionCounts exposure_brute(const TweetStore& store, const SocialGraph& g, const Tweet& t,
                             std::int64_t window) {
  EmotionCounts c = EmotionCounts::Zero();
  for (const auto& o : store.tweets()) {
    if (o.author == kNoNode || !g.has_edge(t.author, o.author)) continue;
    if (!is_emotional(o.exposure_emotion)) continue;
    if (o.time >= t.time - window && o.time < t.time) ++c[index(o.exposure_emotion)];
  }
  return c;
}

EmotionDistribution vec(double a, double d, double j, double s) {
  return (EmotionDistribution() << a, d, j, s).finished();
}

}  // namespace

TEST_SUITE("tweets") {
  const auto graph = make_graph(3, {{0, 1}, {1, 2}});

  TEST_CASE("three well-formed rows") {
    std::istringstream in("t1,0,100,joy\nt2,1,50,anger\nt3,2,75,none\n");
    const auto s = load_tweets(in, graph);
    CHECK(s.size() == 3);
    CHECK(s.unknown_emotions == 0);
  }

  TEST_CASE("unknown emotion token maps to none with a warning") {
    std::istringstream in("t1,0,100,angry\n");
    const auto s = load_tweets(in, graph);
    CHECK(s.tweets()[0].emotion == Emotion::none);
    CHECK(s.unknown_emotions == 1);
  }

  TEST_CASE("out-of-order timestamps are sorted") {
    std::istringstream in("a,0,300,joy\nb,1,100,joy\nc,2,200,joy\n");
    const auto s = load_tweets(in, graph);
    std::vector<std::int64_t> times;
    for (const auto& t : s.tweets()) times.push_back(t.time);
    CHECK(times == std::vector<std::int64_t>{100, 200, 300});
  }

  TEST_CASE("bad timestamps and column counts carry the line") {
    std::istringstream bad("tweet_id,user_id,unix_timestamp,emotion\nx,0,12a,joy\n");
    try {
      load_tweets(bad, graph);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    std::istringstream short_row("x,0,12\n");
    CHECK_THROWS_AS(load_tweets(short_row, graph), ParseError);
  }

  TEST_CASE("first row holding data is not a header") {
    std::istringstream in("a,b,c,joy\n");
    CHECK_THROWS_AS(load_tweets(in, graph), ParseError);  // 'c' is no timestamp
  }

  TEST_CASE("retweets carry the original's label and author") {
    std::istringstream in("o,2,10,anger\nr,1,20,joy,o\nq,0,30,sadness,missing,9\n");
    const auto s = load_tweets(in, graph);
    CHECK(s.unknown_users == 0);
    const auto& r = s.tweets()[1];
    CHECK(r.exposure_emotion == Emotion::anger);
    CHECK(r.emotion == Emotion::joy);
    CHECK(r.source_author == 2);
    const auto& q = s.tweets()[2];
    CHECK(q.exposure_emotion == Emotion::sadness);
    CHECK(q.source_author == kNoNode);
    const auto rt = extract_retweets(s);
    REQUIRE(rt.size() == 1);
    CHECK(rt[0].retweeter == 1);
    CHECK(rt[0].author == 2);
    CHECK(rt[0].emotion == Emotion::anger);
  }

  TEST_CASE("write then load reproduces the store") {
    std::istringstream in("o,2,10,anger\nr,1,20,joy,o,2\nz,7,5,none\n");
    const auto s = load_tweets(in, graph);
    CHECK(s.unknown_users == 1);
    std::ostringstream a, b;
    write_tweets(a, s);
    std::istringstream again(a.str());
    write_tweets(b, load_tweets(again, graph));
    CHECK(a.str() == b.str());
  }
}

TEST_SUITE("exposure") {
  // User 0 follows 1 and 2; 3 follows 0.
  const auto graph = make_graph(4, {{0, 1}, {0, 2}, {3, 0}});
  const std::int64_t hour = 3600;

  TEST_CASE("twenty joy tweets give a pure joy vector") {
    StreamBuilder b;
    b.add(1, 10, Emotion::joy, 20);
    b.add(0, 100, Emotion::anger);
    const auto s = b.build(4);
    const auto v = exposure_vector(s, graph, s.tweets().back(), 1.0);
    REQUIRE(v);
    CHECK(*v == vec(0, 0, 1, 0));
  }

  TEST_CASE("nineteen tweets are below threshold") {
    StreamBuilder b;
    b.add(1, 10, Emotion::joy, 19);
    b.add(0, 100, Emotion::anger);
    const auto s = b.build(4);
    CHECK_FALSE(exposure_vector(s, graph, s.tweets().back(), 1.0));
    CHECK(exposure_vector(s, graph, s.tweets().back(), 1.0, 19));
  }

  TEST_CASE("ten anger and ten joy split evenly") {
    StreamBuilder b;
    b.add(1, 10, Emotion::anger, 10);
    b.add(2, 20, Emotion::joy, 10);
    b.add(0, 100, Emotion::sadness);
    const auto s = b.build(4);
    const auto v = exposure_vector(s, graph, s.tweets().back(), 1.0);
    REQUIRE(v);
    CHECK(*v == vec(0.5, 0, 0.5, 0));
  }

  TEST_CASE("window is [t - delta, t); neutral, self and non-followees excluded") {
    StreamBuilder b;
    b.add(1, 1000 - hour, Emotion::anger);  // on the lower edge: counted
    b.add(1, 1000 - hour - 1, Emotion::anger);  // just outside
    b.add(2, 1000, Emotion::joy);  // same instant: excluded
    b.add(2, 999, Emotion::none);  // neutral
    b.add(0, 998, Emotion::joy);   // own tweet
    b.add(3, 997, Emotion::joy);   // follower, not followee
    b.add(0, 1000, Emotion::sadness);
    const auto s = b.build(4);
    const auto& t = s.tweets().back();
    REQUIRE(t.author == 0);
    REQUIRE(t.time == 1000);
    CHECK(exposure_counts(s, graph, 0, 1000, 1.0) == EmotionCounts(1, 0, 0, 0));
  }

  TEST_CASE("unknown author is a domain error") {
    StreamBuilder b;
    b.add(0, 10, Emotion::joy);
    auto tweets = b.tweets;
    tweets[0].author = kNoNode;
    const TweetStore s(tweets, 4);
    CHECK_THROWS_AS(exposure_vector(s, graph, s.tweets()[0], 1.0), DomainError);
  }

  TEST_CASE("shrinking the window never adds tweets") {
    std::mt19937_64 rng(7);
    std::vector<std::pair<NodeId, NodeId>> f;
    for (NodeId a = 0; a < 15; ++a)
      for (NodeId c = 0; c < 15; ++c)
        if (a != c && rng() % 4 == 0) f.emplace_back(a, c);
    const auto g = make_graph(15, f);
    StreamBuilder b;
    for (int k = 0; k < 600; ++k) b.add(rng() % 15, rng() % (10 * hour), kEmotions[rng() % 4]);
    const auto s = b.build(15);
    for (std::size_t k = 0; k < s.size(); k += 7) {
      const auto& t = s.tweets()[k];
      EmotionCounts prev = EmotionCounts::Zero();
      for (double w : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const auto c = exposure_counts(s, g, t.author, t.time, w);
        CHECK((c.array() >= prev.array()).all());
        CHECK(c == exposure_brute(s, g, t, window_seconds(w)));
        prev = c;
      }
    }
  }

  TEST_CASE("ten-tweet stream: vectors and baselines by enumeration") {
    // 0 follows 1 and 2; 1 follows 2; 2 follows 0.
    const auto g = make_graph(3, {{0, 1}, {0, 2}, {1, 2}, {2, 0}});
    StreamBuilder b;
    b.add(2, 0, Emotion::anger);
    b.add(1, 100, Emotion::joy);
    b.add(2, 200, Emotion::joy);
    b.add(0, 300, Emotion::anger);    // sees 2:anger, 1:joy, 2:joy -> (1/3,0,2/3,0)
    b.add(1, 400, Emotion::sadness);  // sees 2:anger, 2:joy -> (1/2,0,1/2,0)
    b.add(2, 500, Emotion::anger);    // sees 0:anger -> (1,0,0,0)
    b.add(0, 600, Emotion::joy);      // sees 2@0,1@100,2@200,1@400,2@500 -> (2/5,0,2/5,1/5)
    b.add(1, 700, Emotion::none);     // neutral: not analysed
    b.add(2, 800, Emotion::anger);    // sees 0@300, 0@600 -> (1/2,0,1/2,0)
    b.add(1, 5000, Emotion::joy);     // nothing from 2 within [1400, 5000)
    const auto s = b.build(3);
    const auto samples = qualifying_exposures(s, g, 1.0, 1);
    REQUIRE(samples.size() == 6);
    const std::vector<EmotionDistribution> expect{vec(1.0 / 3, 0, 2.0 / 3, 0), vec(0.5, 0, 0.5, 0),
                                                  vec(1, 0, 0, 0), vec(0.4, 0, 0.4, 0.2),
                                                  vec(0.5, 0, 0.5, 0)};
    // t=100 by 1 sees 2@0 -> (1,0,0,0); t=0 and t=200 see nothing.
    CHECK(samples[0].exposure.isApprox(vec(1, 0, 0, 0)));
    for (std::size_t k = 0; k < expect.size(); ++k) {
      CHECK(samples[k + 1].exposure.isApprox(expect[k], 1e-15));
    }
    const auto base = baseline_vectors(samples);
    // Labels: joy, anger, sadness, anger, joy, anger.
    CHECK(base.counts == std::array<std::size_t, 4>{3, 0, 2, 1});
    const EmotionDistribution anger = (vec(1.0 / 3, 0, 2.0 / 3, 0) + vec(1, 0, 0, 0) + vec(0.5, 0, 0.5, 0)) / 3;
    const EmotionDistribution joy = (vec(1, 0, 0, 0) + vec(0.4, 0, 0.4, 0.2)) / 2;
    CHECK(base.per_emotion[0]->isApprox(anger, 1e-15));
    CHECK(base.per_emotion[2]->isApprox(joy, 1e-15));
    CHECK(base.per_emotion[3]->isApprox(vec(0.5, 0, 0.5, 0), 1e-15));
    CHECK_FALSE(base.per_emotion[1]);
    CHECK_FALSE(base.complete());
    CHECK_THROWS_AS(base.centers(), UndefinedError);
  }
}

TEST_SUITE("contagion") {
  TEST_CASE("identical exposures make every baseline equal") {
    const auto e = vec(0.1, 0.2, 0.3, 0.4);
    std::vector<ExposureSample> s;
    for (std::size_t k = 0; k < 12; ++k) s.push_back({k, NodeId(k), kEmotions[k % 4], e});
    const auto b = baseline_vectors(s);
    CHECK(b.all.isApprox(e, 1e-15));
    for (auto emo : kEmotions) {
      CHECK(b.per_emotion[index(emo)]->isApprox(e, 1e-15));
      CHECK(contagion_significance(b.all, *b.per_emotion[index(emo)], emo) ==
            doctest::Approx(0.0).epsilon(1e-15));
    }
  }

  TEST_CASE("two anger tweets average") {
    const std::vector<ExposureSample> s{{0, 0, Emotion::anger, vec(1, 0, 0, 0)},
                                        {1, 0, Emotion::anger, vec(0, 0, 1, 0)}};
    CHECK(*baseline_vectors(s).per_emotion[0] == vec(0.5, 0, 0.5, 0));
    CHECK_THROWS_AS(baseline_vectors(std::vector<ExposureSample>{}), UndefinedError);
  }

  TEST_CASE("significance is a signed difference") {
    const auto all = vec(0.279, 0.2, 0.321, 0.2);
    const auto anger = vec(0.30, 0.2, 0.3, 0.2);
    CHECK(contagion_significance(all, anger, Emotion::anger) == doctest::Approx(0.021).epsilon(1e-12));
    CHECK(contagion_significance(all, all, Emotion::joy) == 0.0);
    CHECK(contagion_significance(anger, all, Emotion::anger) < 0.0);
  }

  TEST_CASE("baselines: weighted-mean consistency and unit sums") {
    std::mt19937_64 rng(19);
    std::vector<ExposureSample> s;
    for (std::size_t k = 0; k < 500; ++k) {
      EmotionCounts c;
      for (int j = 0; j < 4; ++j) c[j] = static_cast<std::int64_t>(rng() % 30);
      c[rng() % 4] += 1;
      const EmotionDistribution v = c.cast<double>() / static_cast<double>(c.sum());
      s.push_back({k, NodeId(k % 50), kEmotions[rng() % 4], v});
    }
    const auto b = baseline_vectors(s);
    EmotionDistribution weighted = EmotionDistribution::Zero();
    for (auto e : kEmotions) {
      const auto& v = *b.per_emotion[index(e)];
      CHECK(v.sum() == doctest::Approx(1.0).epsilon(1e-9));
      CHECK((v.array() >= 0).all());
      weighted += static_cast<double>(b.counts[index(e)]) * v;
    }
    CHECK(b.all.sum() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK((weighted - static_cast<double>(b.total) * b.all).cwiseAbs().maxCoeff() < 1e-9);
    for (auto e : kEmotions) {
      const double d = contagion_significance(b.all, *b.per_emotion[index(e)], e);
      CHECK(d >= -1.0);
      CHECK(d <= 1.0);
    }
  }

  TEST_CASE("classification: exact center, tie-break, brute force, permutation") {
    std::array<EmotionDistribution, 4> centers{vec(0.4, 0.2, 0.2, 0.2), vec(0.2, 0.4, 0.2, 0.2),
                                               vec(0.2, 0.2, 0.4, 0.2), vec(0.2, 0.2, 0.2, 0.4)};
    CHECK(classify_influenced(centers[2], centers) == Emotion::joy);
    // Midway between anger and joy: equidistant from both, farther from the rest.
    const EmotionDistribution mid = (centers[0] + centers[2]) / 2;
    CHECK(classify_influenced(mid, centers) == Emotion::anger);

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 500; ++k) {
      EmotionDistribution v(u(rng), u(rng), u(rng), u(rng));
      v /= v.sum();
      std::size_t best = 0;
      double bd = 1e300;
      for (std::size_t j = 0; j < 4; ++j) {
        double d = 0;
        for (int c = 0; c < 4; ++c) d += (v[c] - centers[j][c]) * (v[c] - centers[j][c]);
        if (d < bd) bd = d, best = j;
      }
      const auto got = classify_influenced(v, centers);
      CHECK(index(got) == best);
      // Reordering the candidates does not change the winner.
      std::array<std::size_t, 4> perm{3, 1, 0, 2};
      std::array<EmotionDistribution, 4> shuffled;
      for (std::size_t j = 0; j < 4; ++j) shuffled[j] = centers[perm[j]];
      CHECK(perm[index(classify_influenced(v, shuffled))] == best);
    }
  }

  TEST_CASE("classification works in single precision") {
    std::array<EmotionVector<float>, 4> c;
    for (std::size_t j = 0; j < 4; ++j) c[j] = EmotionVector<float>::Constant(0.2f), c[j][j] = 0.4f;
    CHECK(classify_influenced(c[3], c) == Emotion::sadness);
  }

  TEST_CASE("influenced percentage") {
    std::array<EmotionDistribution, 4> centers{vec(1, 0, 0, 0), vec(0, 1, 0, 0), vec(0, 0, 1, 0),
                                               vec(0, 0, 0, 1)};
    std::vector<ExposureSample> s;
    for (std::size_t k = 0; k < 4; ++k) s.push_back({k, 0, kEmotions[k], centers[k]});
    Baselines base = baseline_vectors(s);
    CHECK(influenced_percentage(s, base, Emotion::anger) == 1.0);
    // Anger tweets that saw only joy.
    std::vector<ExposureSample> t = s;
    t[0].exposure = centers[2];
    t.push_back({4, 1, Emotion::anger, vec(0, 0, 1, 0)});
    for (std::size_t j = 0; j < 4; ++j) base.per_emotion[j] = centers[j];
    CHECK(influenced_percentage(t, base, Emotion::anger) == 0.0);
    // Half and half.
    t.push_back({5, 2, Emotion::anger, vec(1, 0, 0, 0)});
    t.push_back({6, 3, Emotion::anger, vec(0.9, 0, 0.1, 0)});
    CHECK(influenced_percentage(t, base, Emotion::anger) == 0.5);
    std::vector<ExposureSample> no_anger(s.begin() + 1, s.end());
    CHECK_THROWS_AS(influenced_percentage(no_anger, base, Emotion::anger), UndefinedError);
  }

  TEST_CASE("susceptibility: 15 percent of 100 users") {
    std::array<EmotionDistribution, 4> centers{vec(1, 0, 0, 0), vec(0, 1, 0, 0), vec(0, 0, 1, 0),
                                               vec(0, 0, 0, 1)};
    Baselines base;
    for (std::size_t j = 0; j < 4; ++j) base.per_emotion[j] = centers[j];
    std::vector<ExposureSample> s;
    std::size_t k = 0;
    // User u posts 10 joy tweets; u % 11 of them are influenced.
    for (NodeId u = 0; u < 100; ++u) {
      for (int t = 0; t < 10; ++t) {
        const bool hit = t < static_cast<int>(u % 11);
        s.push_back({k++, u, Emotion::joy, hit ? centers[2] : centers[0]});
      }
    }
    const auto r = susceptibility_partition(s, base, 0.15);
    CHECK(r.ranked_users == 100);
    CHECK(r.high.users.size() == 15);
    CHECK(r.low.users.size() == 15);

    // Oracle: full sort by (ratio desc, id asc).
    std::vector<NodeId> order(100);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [](NodeId a, NodeId b) {
      return (a % 11) != (b % 11) ? (a % 11) > (b % 11) : a < b;
    });
    std::vector<NodeId> high(order.begin(), order.begin() + 15), low(order.end() - 15, order.end());
    std::sort(high.begin(), high.end());
    std::sort(low.begin(), low.end());
    CHECK(r.high.users == high);
    CHECK(r.low.users == low);
    // Bottom 15: ten users at ratio 0, then the five largest ids at ratio 0.1.
    CHECK(*r.low.influenced[2] == doctest::Approx(5.0 / 150.0).epsilon(1e-15));
    CHECK(*r.high.influenced[2] > 0.9);
    CHECK(r.high.tweets[2] == 150);
  }

  TEST_CASE("susceptibility: equal ratios split by user id") {
    std::array<EmotionDistribution, 4> centers{vec(1, 0, 0, 0), vec(0, 1, 0, 0), vec(0, 0, 1, 0),
                                               vec(0, 0, 0, 1)};
    Baselines base;
    for (std::size_t j = 0; j < 4; ++j) base.per_emotion[j] = centers[j];
    std::vector<ExposureSample> s;
    for (NodeId u = 0; u < 20; ++u) s.push_back({u, u, Emotion::anger, centers[0]});
    const auto r = susceptibility_partition(s, base, 0.15);
    CHECK(r.high.users == std::vector<NodeId>{0, 1, 2});
    CHECK(r.low.users == std::vector<NodeId>{17, 18, 19});

    std::vector<ExposureSample> few(s.begin(), s.begin() + 6);
    CHECK_THROWS_AS(susceptibility_partition(few, base, 0.15), DomainError);
    CHECK_THROWS_AS(susceptibility_partition(s, base, 0.6), DomainError);
    CHECK_THROWS_AS(susceptibility_partition(s, base, 0.0), DomainError);
  }

  TEST_CASE("susceptibility: twenty users against a brute-force ranking") {
    std::mt19937_64 rng(31);
    std::array<EmotionDistribution, 4> centers{vec(0.7, 0.1, 0.1, 0.1), vec(0.1, 0.7, 0.1, 0.1),
                                               vec(0.1, 0.1, 0.7, 0.1), vec(0.1, 0.1, 0.1, 0.7)};
    Baselines base;
    for (std::size_t j = 0; j < 4; ++j) base.per_emotion[j] = centers[j];
    std::vector<ExposureSample> s;
    std::vector<std::pair<int, int>> tally(20);  // (influenced, total)
    for (std::size_t k = 0; k < 400; ++k) {
      const NodeId u = rng() % 20;
      const auto label = kEmotions[rng() % 4];
      const auto seen = kEmotions[rng() % 4];
      s.push_back({k, u, label, centers[index(seen)]});
      tally[u].second++;
      if (seen == label) tally[u].first++;
    }
    const auto r = susceptibility_partition(s, base, 0.25);
    std::vector<NodeId> order(20);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      const double ra = double(tally[a].first) / tally[a].second;
      const double rb = double(tally[b].first) / tally[b].second;
      return ra != rb ? ra > rb : a < b;
    });
    std::vector<NodeId> high(order.begin(), order.begin() + 5), low(order.end() - 5, order.end());
    std::sort(high.begin(), high.end());
    std::sort(low.begin(), low.end());
    CHECK(r.high.users == high);
    CHECK(r.low.users == low);
  }

  TEST_CASE("report: constant exposure gives zero significance") {
    // Users 1..40 follow user 0, who posts 20 tweets of each emotion early.
    std::vector<std::pair<NodeId, NodeId>> f;
    for (NodeId u = 1; u <= 40; ++u) f.emplace_back(u, 0);
    const auto g = make_graph(41, f);
    StreamBuilder b;
    for (auto e : kEmotions) b.add(0, 100, e, 20);
    for (NodeId u = 1; u <= 40; ++u) b.add(u, 1000, kEmotions[u % 4]);
    const auto s = b.build(41);
    ContagionOptions opt;
    const auto r = contagion_report(s, g, opt);
    CHECK(r.rows.size() == 8 * 4);
    for (auto e : kEmotions) {
      CHECK(std::count_if(r.rows.begin(), r.rows.end(),
                          [&](const ContagionRow& row) { return row.emotion == e; }) == 8);
    }
    for (const auto& row : r.rows) {
      REQUIRE(row.significance);
      CHECK(*row.significance == doctest::Approx(0.0).epsilon(1e-15));
      CHECK(row.qualifying == 10);
    }
    CHECK(r.susceptibility.size() == 8);
  }

  TEST_CASE("report: influenced shares sum to at most one") {
    const auto sbm = generate_sbm({{40, 40}, 0.3, 0.05, 2, 6, 1}, 4);
    TweetStreamSpec ts;
    ts.hours = 12;
    ts.rate = 2;
    const auto store = generate_tweets(sbm.graph, ts, 9);
    ContagionOptions opt;
    opt.windows = {1, 2, 4};
    opt.threads = 3;
    const auto r = contagion_report(store, sbm.graph, opt);
    opt.threads = 1;
    const auto serial = contagion_report(store, sbm.graph, opt);
    for (std::size_t w = 0; w < 3; ++w) {
      double sum = 0;
      for (std::size_t e = 0; e < 4; ++e) {
        const auto& row = r.rows[w * 4 + e];
        sum += row.influenced_share;
        CHECK(row.influenced_share == serial.rows[w * 4 + e].influenced_share);
        CHECK(row.significance == serial.rows[w * 4 + e].significance);
      }
      CHECK(sum <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("report: injected anger correlation has positive significance") {
    const auto sbm = generate_sbm({{60, 60}, 0.25, 0.02, 2, 6, 1}, 8);
    TweetStreamSpec ts;
    ts.hours = 24;
    ts.rate = 2;
    ts.influence = 0.5;
    const auto store = generate_tweets(sbm.graph, ts, 10);
    const auto samples = qualifying_exposures(store, sbm.graph, 1.0, 20);
    const auto b = baseline_vectors(samples);
    CHECK(contagion_significance(b.all, *b.per_emotion[0], Emotion::anger) > 0.0);
  }
}
