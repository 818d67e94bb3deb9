#include <doctest.h>

#include <random>
#include <sstream>

#include "emoflow/errors.hpp"
#include "emoflow/graph.hpp"
#include "emoflow/paths.hpp"
#include "emoflow/ties.hpp"
#include "oracles.hpp"

using namespace emoflow;

namespace {

SocialGraph from_text(const std::string& text, std::size_t* skipped = nullptr) {
  std::istringstream in(text);
  auto load = load_edge_list(in);
  if (skipped) *skipped = load.self_loops_skipped;
  return std::move(load.graph);
}

UndirectedView undirected(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
  std::vector<WeightedEdge> e;
  for (auto [a, b] : pairs) e.push_back({a, b, 1.0});
  return UndirectedView::from_edges(n, e);
}

NodeId id(const SocialGraph& g, const std::string& label) { return *g.find(label); }

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("three rows over three users") {
    const auto g = from_text("a,b,1\nb,c,0\nc,a,2\n");
    CHECK(g.num_nodes() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.retweets(id(g, "c"), id(g, "a")) == 2);
    CHECK(g.retweets(id(g, "a"), id(g, "c")) == 0);
  }

  TEST_CASE("duplicate rows merge by summing counts") {
    const auto g = from_text("a\tb\t2\na\tb\t3\n");
    CHECK(g.num_edges() == 1);
    CHECK(g.retweets(id(g, "a"), id(g, "b")) == 5);
  }

  TEST_CASE("self-loop rows are skipped and counted") {
    std::size_t skipped = 0;
    const auto g = from_text("a a 1\na b 1\n", &skipped);
    CHECK(skipped == 1);
    CHECK(g.num_edges() == 1);
  }

  TEST_CASE("header, comments, blank lines and default count") {
    const auto g = from_text("src,dst,retweet_count\n# comment\n\nx,y\ny,z,4\n");
    CHECK(g.num_nodes() == 3);
    CHECK(g.retweets(id(g, "x"), id(g, "y")) == 0);
    CHECK(g.retweets(id(g, "y"), id(g, "z")) == 4);
  }

  TEST_CASE("two-column first row is an edge unless it names columns") {
    CHECK(from_text("a,b\nb,c\n").num_edges() == 2);
    CHECK(from_text("Source,Target\nb,c\n").num_edges() == 1);
    CHECK(from_text("follower followee\nb c\n").num_nodes() == 2);
  }

  TEST_CASE("numeric ids are not mistaken for a header") {
    const auto g = from_text("1,2\n2,3\n");
    CHECK(g.num_nodes() == 3);
    CHECK(g.find("1").has_value());
  }

  TEST_CASE("malformed rows report their line") {
    auto line_of = [](const std::string& text) -> std::size_t {
      try {
        from_text(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("a,b,1\nb,c,x\n") == 2);
    CHECK(line_of("a,b,1\n\nonlyone\n") == 3);
    CHECK(line_of("a,b,-1\n") == 1);
    CHECK(line_of("a,b,1,9\n") == 1);
  }

  TEST_CASE("adjacency indices agree with the edge list") {
    const auto g = from_text("a,b\na,c\nb,c\nd,a\n");
    const auto a = id(g, "a");
    CHECK(g.followees(a).size() == 2);
    CHECK(g.followers(a).size() == 1);
    for (const auto& e : g.edges()) {
      CHECK(g.has_edge(e.src, e.dst));
      const auto f = g.followees(e.src);
      CHECK(std::find(f.begin(), f.end(), e.dst) != f.end());
      const auto r = g.followers(e.dst);
      CHECK(std::find(r.begin(), r.end(), e.src) != r.end());
    }
  }

  TEST_CASE("direct construction rejects self-loops") {
    CHECK_THROWS_AS(SocialGraph({"a"}, {{0, 0, 1}}), DomainError);
    CHECK_THROWS_AS(SocialGraph({"a", "b"}, {{0, 2, 1}}), DomainError);
  }

  TEST_CASE("undirected view weights are R_ij + R_ji + 1") {
    const auto g = from_text("a,b,3\nb,a,1\nb,c,0\n");
    const UndirectedView v(g);
    CHECK(v.num_nodes() == 3);
    CHECK(v.num_edges() == 2);
    CHECK(v.weight(id(g, "a"), id(g, "b")) == 5.0);
    CHECK(v.weight(id(g, "c"), id(g, "b")) == 1.0);
    CHECK_FALSE(v.has_edge(id(g, "a"), id(g, "c")));
    CHECK_THROWS_AS(v.weight(id(g, "a"), id(g, "c")), DomainError);
  }

  TEST_CASE("undirected view is symmetric with positive weights") {
    std::mt19937_64 rng(11);
    std::vector<std::string> labels;
    for (int i = 0; i < 30; ++i) labels.push_back(std::to_string(i));
    std::vector<DirectedEdge> edges;
    for (int k = 0; k < 150; ++k) {
      const NodeId a = rng() % 30, b = rng() % 30;
      if (a != b) edges.push_back({a, b, rng() % 4});
    }
    const SocialGraph g(labels, edges);
    const UndirectedView v(g);
    for (NodeId u = 0; u < 30; ++u) {
      const auto nb = v.neighbors(u);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (std::size_t k = 0; k < nb.size(); ++k) {
        CHECK(v.has_edge(nb[k], u));
        CHECK(v.weights(u)[k] > 0.0);
        CHECK(v.weight(nb[k], u) == v.weights(u)[k]);
        CHECK(v.weights(u)[k] == double(g.retweets(u, nb[k]) + g.retweets(nb[k], u) + 1));
      }
    }
  }

  TEST_CASE("from_edges rejects bad input") {
    const std::vector<WeightedEdge> zero{{0, 1, 0.0}};
    CHECK_THROWS_AS(UndirectedView::from_edges(2, zero), DomainError);
    const std::vector<WeightedEdge> twice{{0, 1, 1.0}, {1, 0, 2.0}};
    CHECK_THROWS_AS(UndirectedView::from_edges(2, twice), DomainError);
  }

  TEST_CASE("serialized form reloads to the same graph") {
    std::mt19937_64 rng(5);
    std::ostringstream text;
    for (int k = 0; k < 200; ++k) {
      text << "u" << rng() % 40 << ',' << "u" << rng() % 40 << ',' << rng() % 5 << '\n';
    }
    const auto g1 = from_text(text.str());
    std::ostringstream once, twice;
    write_edge_list(once, g1);
    const auto g2 = from_text(once.str());
    write_edge_list(twice, g2);
    CHECK(once.str() == twice.str());
    CHECK(g2.num_edges() == g1.num_edges());
    for (const auto& e : g1.edges()) {
      const auto s = g2.find(g1.label(e.src));
      const auto d = g2.find(g1.label(e.dst));
      REQUIRE(s);
      REQUIRE(d);
      CHECK(g2.retweets(*s, *d) == e.retweets);
    }
  }
}

TEST_SUITE("ties") {
  TEST_CASE("common friends: triangle edge is full overlap") {
    const auto v = undirected(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(common_friends_strength(v, 0, 1) == 1.0);
  }

  TEST_CASE("common friends: path edge has no overlap") {
    const auto v = undirected(3, {{0, 1}, {1, 2}});
    CHECK(common_friends_strength(v, 0, 1) == 0.0);
  }

  TEST_CASE("common friends: k_i = k_j = 3, c = 1 gives 1/3") {
    // i=0, j=1 adjacent; common neighbor 2; private neighbors 3 (of i), 4 (of j).
    const auto v = undirected(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    CHECK(common_friends_strength(v, 0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }

  TEST_CASE("common friends: the 0.2 evaluation") {
    // k_i = k_j = 4, c = 1: 1 / (3 + 3 - 1).
    const auto v = undirected(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}});
    CHECK(common_friends_strength(v, 0, 1) == doctest::Approx(0.2).epsilon(1e-15));
  }

  TEST_CASE("common friends: isolated edge is 0 and non-edges throw") {
    const auto v = undirected(3, {{0, 1}});
    CHECK(common_friends_strength(v, 0, 1) == 0.0);
    CHECK_THROWS_AS(common_friends_strength(v, 0, 2), DomainError);
  }

  TEST_CASE("common friends: symmetric, bounded, 1 exactly at full overlap") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 12;
      std::vector<WeightedEdge> e;
      for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
          if (rng() % 3 == 0) e.push_back({a, b, 1.0});
      const auto v = UndirectedView::from_edges(n, e);
      for (const auto& edge : e) {
        const double s1 = common_friends_strength(v, edge.a, edge.b);
        const double s2 = common_friends_strength(v, edge.b, edge.a);
        CHECK(s1 == s2);
        CHECK(s1 >= 0.0);
        CHECK(s1 <= 1.0);
        std::size_t c = 0;
        for (NodeId w : v.neighbors(edge.a)) {
          if (w != edge.b && v.has_edge(w, edge.b)) ++c;
        }
        const bool full = c == v.degree(edge.a) - 1 && c == v.degree(edge.b) - 1 && c > 0;
        CHECK((s1 == 1.0) == full);
      }
    }
  }

  TEST_CASE("reciprocity formula") {
    CHECK(reciprocity_ratio(5, 5) == 1.0);
    CHECK(reciprocity_ratio(5, 0) == 0.0);
    CHECK(reciprocity_ratio(3, 1) == 0.5);
    CHECK(reciprocity_ratio(0, 0) == 0.0);
    CHECK(reciprocity_ratio(1, 3) == reciprocity_ratio(3, 1));
  }

  TEST_CASE("reciprocity flux table") {
    // Hand-enumerated: (R_ij, R_ji) -> 2 min / sum.
    struct Row {
      std::uint64_t a, b;
      double expect;
    };
    for (auto r : {Row{2, 1, 2.0 / 3.0}, Row{4, 4, 1.0}, Row{7, 3, 0.6}, Row{1, 9, 0.2}}) {
      CHECK(reciprocity_ratio(r.a, r.b) == doctest::Approx(r.expect).epsilon(1e-15));
    }
  }

  TEST_CASE("reciprocity on a graph is symmetric; 1 iff balanced and positive") {
    const auto g = from_text("a,b,3\nb,a,1\nb,c,2\nc,b,2\nc,d,0\nd,c,0\n");
    const auto a = id(g, "a"), b = id(g, "b"), c = id(g, "c"), d = id(g, "d");
    CHECK(reciprocity_strength(g, a, b) == 0.5);
    CHECK(reciprocity_strength(g, b, a) == 0.5);
    CHECK(reciprocity_strength(g, b, c) == 1.0);
    CHECK(reciprocity_strength(g, c, d) == 0.0);
    CHECK(reciprocity_strength(g, a, d) == 0.0);
  }

  TEST_CASE("retweet strength normalization") {
    CHECK(normalize_retweet_strength(1, 1, 5) == 0.0);
    CHECK(normalize_retweet_strength(5, 1, 5) == 1.0);
    CHECK(normalize_retweet_strength(3, 1, 5) == 0.5);
    CHECK(normalize_retweet_strength(4, 4, 4) == 0.0);
    CHECK_THROWS_AS(normalize_retweet_strength(6, 1, 5), DomainError);
    CHECK_THROWS_AS(normalize_retweet_strength(0, 1, 5), DomainError);
  }

  TEST_CASE("history counts strictly earlier retweets") {
    const std::vector<RetweetRecord> all{
        {0, 1, Emotion::joy, 10}, {0, 1, Emotion::joy, 20}, {0, 1, Emotion::anger, 20}, {1, 0, Emotion::joy, 5}};
    const RetweetHistory h(all);
    CHECK(h.count_before(0, 1, 10) == 0);
    CHECK(h.count_before(0, 1, 11) == 1);
    CHECK(h.count_before(0, 1, 21) == 3);
    CHECK(h.count_before(1, 0, 100) == 1);
    CHECK(h.count_before(2, 0, 100) == 0);
  }

  TEST_CASE("report: one anger retweet on a triangle edge") {
    const auto g = from_text("a,b\nb,c\nc,a\n");
    const std::vector<RetweetRecord> rec{{id(g, "a"), id(g, "b"), Emotion::anger, 100}};
    const auto r = tie_strength_report(g, rec, RetweetHistory(rec));
    REQUIRE(r.per_emotion[index(Emotion::anger)]);
    const auto& s = *r.per_emotion[index(Emotion::anger)];
    CHECK(s.common_friends.mean == 1.0);
    CHECK(s.common_friends.n == 1);
    CHECK(s.common_friends.std_error == 0.0);
    CHECK_FALSE(r.per_emotion[index(Emotion::joy)]);
  }

  TEST_CASE("summary: mean and standard error") {
    const std::vector<double> v{0.2, 0.4};
    const auto s = summarize(v);
    CHECK(s.mean == doctest::Approx(0.3).epsilon(1e-15));
    // sample sd = sqrt(0.02), se = sd / sqrt(2) = 0.1
    CHECK(s.std_error == doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS(summarize(std::vector<double>{}), UndefinedError);
  }

  TEST_CASE("report: mixed batch on a six-node graph") {
    // Mutual follows a-b, a-c, b-c, c-d, d-e; e follows f.
    // Counts: R_ab=2, R_ba=2, R_ac=1, R_ca=0, R_cd=3, R_dc=1.
    const auto g = from_text(
        "a,b,2\nb,a,2\na,c,1\nc,a,0\nb,c,0\nc,b,0\nc,d,3\nd,c,1\nd,e,0\ne,d,0\ne,f,0\n");
    const auto a = id(g, "a"), b = id(g, "b"), c = id(g, "c"), d = id(g, "d"), e = id(g, "e"),
               f = id(g, "f");
    const std::vector<RetweetRecord> rec{
        {a, b, Emotion::anger, 10},
        {c, d, Emotion::anger, 20},
        {c, d, Emotion::anger, 30},
        {a, c, Emotion::joy, 15},
        {e, f, Emotion::joy, 40},
        {d, a, Emotion::joy, 50},   // no follow edge: skipped
        {b, a, Emotion::none, 60},  // neutral: skipped
    };
    const auto r = tie_strength_report(g, rec, RetweetHistory(rec));
    CHECK(r.skipped_no_edge == 1);
    CHECK(r.skipped_neutral == 1);
    CHECK(r.records_used == 5);

    // Undirected degrees: a{b,c}=2, b{a,c}=2, c{a,b,d}=3, d{c,e}=2, e{d,f}=2, f{e}=1.
    // overlap(a,b): c=1, 1/(1+1-1)=1. overlap(c,d): c=0 -> 0. overlap(a,c): common b -> 1/(1+2-1)=0.5.
    // overlap(e,f): 0.
    // Strength S before each record: (a,b)@10: 0; (c,d)@20: 0; (c,d)@30: 1 (the t=20 retweet);
    // (a,c)@15: 0; (e,f)@40: 0. Range [0,1].
    const auto& an = *r.per_emotion[index(Emotion::anger)];
    CHECK(an.common_friends.mean == doctest::Approx((1.0 + 0.0 + 0.0) / 3.0).epsilon(1e-15));
    CHECK(an.retweet_strength.mean == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    // Reciprocity pooled over records: (a,b): 2*2/4; (c,d) twice: 2*1/4 each.
    CHECK(an.reciprocal_flux == 4 + 2 + 2);
    CHECK(an.total_flux == 4 + 4 + 4);
    CHECK(an.reciprocity == doctest::Approx(8.0 / 12.0).epsilon(1e-15));

    const auto& jo = *r.per_emotion[index(Emotion::joy)];
    CHECK(jo.common_friends.mean == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(jo.common_friends.n == 2);
    CHECK(jo.retweet_strength.mean == 0.0);
    CHECK(jo.reciprocity == 0.0);
    CHECK(r.strength_min == 0);
    CHECK(r.strength_max == 1);
  }

  TEST_CASE("report: nothing usable is an error") {
    const auto g = from_text("a,b\n");
    const std::vector<RetweetRecord> none;
    CHECK_THROWS_AS(tie_strength_report(g, none, RetweetHistory(none)), UndefinedError);
    const std::vector<RetweetRecord> reversed{{id(g, "b"), id(g, "a"), Emotion::joy, 1}};
    CHECK_THROWS_AS(tie_strength_report(g, reversed, RetweetHistory(reversed)), UndefinedError);
  }
}

TEST_SUITE("paths") {
  TEST_CASE("virality of a three-node path") {
    const auto v = undirected(3, {{0, 1}, {1, 2}});
    const std::vector<NodeId> s{0, 1, 2};
    CHECK(virality(v, s) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  }

  TEST_CASE("virality of a triangle") {
    const auto v = undirected(3, {{0, 1}, {1, 2}, {0, 2}});
    const std::vector<NodeId> s{0, 1, 2};
    CHECK(virality(v, s) == 1.0);
  }

  TEST_CASE("virality of two disjoint edges") {
    const auto v = undirected(4, {{0, 1}, {2, 3}});
    const std::vector<NodeId> s{0, 1, 2, 3};
    CHECK(virality(v, s) == 1.0);
  }

  TEST_CASE("components weigh equally, singletons drop out") {
    // Path 0-1-2-3 (mean 10/6) plus edge 5-6 (1) plus lone 8.
    const auto v = undirected(9, {{0, 1}, {1, 2}, {2, 3}, {5, 6}, {3, 4}});
    const std::vector<NodeId> s{0, 1, 2, 3, 5, 6, 8};
    CHECK(virality(v, s) == doctest::Approx((10.0 / 6.0 + 1.0) / 2.0).epsilon(1e-15));
  }

  TEST_CASE("distances stay inside the induced subgraph") {
    // 0-1-2 and a shortcut 0-3-2; excluding 3 forces the long way round 0-1-2.
    const auto v = undirected(5, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {2, 4}, {4, 0}});
    const std::vector<NodeId> s{0, 1, 2};
    CHECK(virality(v, s) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  }

  TEST_CASE("undefined virality") {
    const auto v = undirected(4, {{0, 1}});
    CHECK_THROWS_AS(virality(v, std::vector<NodeId>{0}), UndefinedError);
    CHECK_THROWS_AS(virality(v, std::vector<NodeId>{2, 3}), UndefinedError);
    CHECK_THROWS_AS(virality(v, std::vector<NodeId>{1, 1}), UndefinedError);
  }

  TEST_CASE("cliques have virality 1") {
    for (std::size_t n = 2; n <= 12; ++n) {
      std::vector<WeightedEdge> e;
      std::vector<NodeId> all;
      for (NodeId a = 0; a < n; ++a) {
        all.push_back(a);
        for (NodeId b = a + 1; b < n; ++b) e.push_back({a, b, 1.0});
      }
      CHECK(virality(UndirectedView::from_edges(n, e), all) == 1.0);
    }
  }

  TEST_CASE("paths match the all-pairs oracle up to 50 nodes") {
    for (int n = 2; n <= 50; ++n) {
      std::vector<WeightedEdge> e;
      std::vector<oracle::Edge> oe;
      std::vector<NodeId> all;
      std::vector<int> ai;
      for (int k = 0; k < n; ++k) {
        all.push_back(k);
        ai.push_back(k);
        if (k + 1 < n) {
          e.push_back({NodeId(k), NodeId(k + 1), 1.0});
          oe.emplace_back(k, k + 1);
        }
      }
      CHECK(virality(UndirectedView::from_edges(n, e), all) == *oracle::virality(oe, ai));
      // closed form (n + 1) / 3
      CHECK(virality(UndirectedView::from_edges(n, e), all) ==
            doctest::Approx((n + 1) / 3.0).epsilon(1e-12));
    }
  }

  TEST_CASE("diameter and bfs") {
    const auto v = undirected(5, {{0, 1}, {1, 2}, {2, 3}});
    const std::vector<NodeId> s{0, 1, 2, 3};
    CHECK(induced_diameter(v, s) == 3);
    CHECK(induced_diameter(v, std::vector<NodeId>{0, 2}) == 0);
    const auto d = bfs_distances(v, 0);
    CHECK(d == std::vector<int>{0, 1, 2, 3, -1});
  }
}
