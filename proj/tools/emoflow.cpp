// emoflow: command-line front end.
//
//   emoflow synth     --out DIR            synthetic graph, tweet stream and events
//   emoflow ties      --graph G --tweets T tie-strength tables
//   emoflow contagion --graph G --tweets T exposure / contagion tables
//   emoflow simulate  [--graph G]          SI ensemble over an (alpha, gamma) grid
//   emoflow analyze   --events E           awakening/peak markers and speed
//   emoflow fit       --events E [--graph] DTW grid fit and parameter CDFs
//
// Settings come from --config (key = value), overridden by flags.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emoflow/burst.hpp"
#include "emoflow/config.hpp"
#include "emoflow/contagion.hpp"
#include "emoflow/diffusion.hpp"
#include "emoflow/errors.hpp"
#include "emoflow/fitting.hpp"
#include "emoflow/graph.hpp"
#include "emoflow/io.hpp"
#include "emoflow/parallel.hpp"
#include "emoflow/synth.hpp"
#include "emoflow/ties.hpp"
#include "emoflow/tweets.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace emoflow;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 2, kIo = 3, kDomain = 4, kParse = 5 };

struct Context {
  KeyValueConfig cfg;
  fs::path out;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// Settings

std::string require(const KeyValueConfig& cfg, const std::string& key) {
  auto v = cfg.get(key, "");
  if (v.empty()) throw UsageError("missing required setting '" + key + "' (--" + key + ")");
  return v;
}

fs::path input_path(const KeyValueConfig& cfg, const std::string& key) {
  fs::path p = require(cfg, key);
  if (!fs::is_regular_file(p)) throw IoError("cannot read " + key + " file '" + p.string() + "'");
  return p;
}

StopRule parse_stop(const std::string& s) {
  if (s == "all_infected") return StopRule::all_infected;
  if (s == "step_budget") return StopRule::step_budget;
  if (s == "target_count") return StopRule::target_count;
  throw UsageError("unknown stop rule '" + s + "' (all_infected, step_budget, target_count)");
}

std::string stop_name(StopRule r) {
  switch (r) {
    case StopRule::all_infected: return "all_infected";
    case StopRule::step_budget: return "step_budget";
    case StopRule::target_count: return "target_count";
  }
  return "all_infected";
}

void check_range(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

std::size_t get_size(const KeyValueConfig& cfg, const std::string& key, std::size_t fallback) {
  return static_cast<std::size_t>(cfg.get_uint(key, fallback));
}

SbmSpec sbm_spec(const KeyValueConfig& cfg) {
  SbmSpec s;
  if (cfg.has("blocks")) {
    s.block_sizes.clear();
    for (double b : cfg.get_doubles("blocks", {})) {
      check_range(b >= 1 && b == static_cast<double>(static_cast<std::size_t>(b)),
                  "block sizes must be positive integers");
      s.block_sizes.push_back(static_cast<std::size_t>(b));
    }
  }
  s.p_intra = cfg.get_double("p_intra", s.p_intra);
  s.p_inter = cfg.get_double("p_inter", s.p_inter);
  s.intra_weight_min = cfg.get_int("intra_weight_min", s.intra_weight_min);
  s.intra_weight_max = cfg.get_int("intra_weight_max", s.intra_weight_max);
  s.inter_weight = cfg.get_int("inter_weight", s.inter_weight);
  try {
    s.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return s;
}

// The analysis graph: a loaded edge list, or an SBM drawn from the sbm keys.
struct AnalysisGraph {
  SocialGraph graph;
  UndirectedView view;
  std::string source;
};

AnalysisGraph analysis_graph(const Context& ctx) {
  AnalysisGraph a;
  if (ctx.cfg.has("graph")) {
    auto load = load_edge_list_file(input_path(ctx.cfg, "graph").string());
    if (load.self_loops_skipped) {
      std::cerr << "warning: skipped " << load.self_loops_skipped << " self-loop rows\n";
    }
    a.graph = std::move(load.graph);
    a.view = UndirectedView(a.graph);
    a.source = ctx.cfg.get("graph", "");
  } else {
    const auto spec = sbm_spec(ctx.cfg);
    auto sbm = generate_sbm(spec, ctx.cfg.get_uint("graph_seed", ctx.seed));
    a.graph = std::move(sbm.graph);
    a.view = std::move(sbm.view);
    a.source = "sbm";
  }
  return a;
}

// ---------------------------------------------------------------------------
// Output

std::ofstream open_output(const Context& ctx, const std::string& name) {
  const auto path = ctx.out / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path.string() + "'");
  return f;
}

void finish(std::ofstream& f, const std::string& name) {
  f.flush();
  if (!f) throw IoError("write failed for '" + name + "'");
}

void write_file(const Context& ctx, const std::string& name,
                const std::function<void(std::ostream&)>& body) {
  auto f = open_output(ctx, name);
  body(f);
  finish(f, name);
}

void write_json(const Context& ctx, const std::string& name, const json& j) {
  write_file(ctx, name, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

json number_or_null(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

json summary_json(const MetricSummary& m) {
  return {{"mean", m.mean}, {"std_error", m.std_error}, {"n", m.n}};
}

// ---------------------------------------------------------------------------
// Commands

int cmd_synth(const Context& ctx) {
  const auto sbm = sbm_spec(ctx.cfg);
  const auto graph_seed = ctx.cfg.get_uint("graph_seed", ctx.seed);
  auto g = generate_sbm(sbm, graph_seed);

  TweetStreamSpec ts;
  ts.hours = ctx.cfg.get_double("hours", ts.hours);
  ts.rate = ctx.cfg.get_double("rate", ts.rate);
  ts.neutral_fraction = ctx.cfg.get_double("neutral", ts.neutral_fraction);
  ts.influence = ctx.cfg.get_double("influence", ts.influence);
  ts.window_hours = ctx.cfg.get_double("influence_window", ts.window_hours);
  ts.retweet_fraction = ctx.cfg.get_double("retweet_fraction", ts.retweet_fraction);
  if (ctx.cfg.has("mix")) {
    const auto mix = ctx.cfg.get_doubles("mix", {});
    check_range(mix.size() == kNumEmotions, "mix needs four weights");
    std::copy(mix.begin(), mix.end(), ts.mix.begin());
  }
  try {
    ts.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const auto store = generate_tweets(g.graph, ts, split_seed(ctx.seed, 1));

  EventSpec es;
  es.classes = {{Emotion::anger, get_size(ctx.cfg, "anger_events", 30),
                 ctx.cfg.get_double("anger_alpha", -0.5), ctx.cfg.get_double("anger_gamma", 0.9)},
                {Emotion::joy, get_size(ctx.cfg, "joy_events", 30),
                 ctx.cfg.get_double("joy_alpha", 0.5), ctx.cfg.get_double("joy_gamma", 0.6)}};
  es.dominant_share = ctx.cfg.get_double("event_share", es.dominant_share);
  check_range(es.dominant_share >= 0 && es.dominant_share <= 1, "event_share must lie in [0, 1]");
  es.max_steps = get_size(ctx.cfg, "max_steps", es.max_steps);
  const auto events = generate_events(g.view, es, split_seed(ctx.seed, 2));

  write_file(ctx, "graph.csv", [&](std::ostream& os) { write_edge_list(os, g.graph); });
  write_file(ctx, "tweets.csv", [&](std::ostream& os) { write_tweets(os, store); });
  write_file(ctx, "events.csv", [&](std::ostream& os) { write_events(os, events); });
  write_file(ctx, "blocks.csv", [&](std::ostream& os) {
    os << "node,block\n";
    for (std::size_t u = 0; u < g.block.size(); ++u) {
      os << g.graph.label(static_cast<NodeId>(u)) << ',' << g.block[u] << '\n';
    }
  });

  json j;
  j["command"] = "synth";
  j["seed"] = ctx.seed;
  j["graph_seed"] = graph_seed;
  j["nodes"] = g.graph.num_nodes();
  j["directed_edges"] = g.graph.num_edges();
  j["undirected_edges"] = g.view.num_edges();
  j["tweets"] = store.size();
  j["events"] = events.size();
  write_json(ctx, "synth.json", j);
  return kOk;
}

int cmd_ties(const Context& ctx) {
  const auto graph_path = input_path(ctx.cfg, "graph");
  const auto tweets_path = input_path(ctx.cfg, "tweets");
  auto load = load_edge_list_file(graph_path.string());
  const auto store = load_tweets_file(tweets_path.string(), load.graph);
  const auto records = extract_retweets(store);
  const RetweetHistory history(records);
  const auto report = tie_strength_report(load.graph, records, history);

  write_file(ctx, "ties.csv", [&](std::ostream& os) { write_tie_report(os, report); });

  json j;
  j["command"] = "ties";
  j["records_used"] = report.records_used;
  j["skipped_no_edge"] = report.skipped_no_edge;
  j["skipped_neutral"] = report.skipped_neutral;
  j["strength_min"] = report.strength_min;
  j["strength_max"] = report.strength_max;
  j["self_loops_skipped"] = load.self_loops_skipped;
  j["unknown_emotions"] = store.unknown_emotions;
  j["unknown_users"] = store.unknown_users;
  json per = json::object();
  for (auto e : kEmotions) {
    const auto& s = report.per_emotion[index(e)];
    if (!s) continue;
    per[std::string(name(e))] = {{"common_friends", summary_json(s->common_friends)},
                                 {"reciprocity", s->reciprocity},
                                 {"retweet_strength", summary_json(s->retweet_strength)}};
  }
  j["per_emotion"] = per;
  write_json(ctx, "ties.json", j);
  return kOk;
}

int cmd_contagion(const Context& ctx) {
  const auto graph_path = input_path(ctx.cfg, "graph");
  const auto tweets_path = input_path(ctx.cfg, "tweets");

  ContagionOptions opt;
  opt.windows = ctx.cfg.get_doubles("windows", opt.windows);
  opt.threshold = ctx.cfg.get_int("threshold", opt.threshold);
  opt.susceptibility_fraction = ctx.cfg.get_double("fraction", opt.susceptibility_fraction);
  opt.threads = ctx.threads;
  check_range(!opt.windows.empty(), "windows must not be empty");
  for (double w : opt.windows) check_range(w > 0, "windows must be positive");
  check_range(opt.threshold >= 1, "threshold must be at least 1");
  check_range(opt.susceptibility_fraction > 0 && opt.susceptibility_fraction <= 0.5,
              "fraction must lie in (0, 0.5]");

  auto load = load_edge_list_file(graph_path.string());
  const auto store = load_tweets_file(tweets_path.string(), load.graph);
  const auto report = contagion_report(store, load.graph, opt);

  write_file(ctx, "contagion.csv", [&](std::ostream& os) { write_contagion_rows(os, report); });
  write_file(ctx, "susceptibility.csv", [&](std::ostream& os) { write_susceptibility(os, report); });

  json j;
  j["command"] = "contagion";
  j["tweets"] = store.size();
  j["unknown_emotions"] = store.unknown_emotions;
  j["unknown_users"] = store.unknown_users;
  j["threshold"] = opt.threshold;
  j["fraction"] = opt.susceptibility_fraction;
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"window_hours", r.window_hours},
                    {"emotion", std::string(name(r.emotion))},
                    {"qualifying", r.qualifying},
                    {"significance", number_or_null(r.significance)},
                    {"influenced", number_or_null(r.influenced)}});
  }
  j["rows"] = rows;
  j["windows_without_partition"] = report.windows_without_partition;
  write_json(ctx, "contagion.json", j);
  return kOk;
}

int cmd_simulate(const Context& ctx) {
  EnsembleOptions opt;
  opt.alphas = ctx.cfg.get_doubles("alpha", opt.alphas);
  opt.gammas = ctx.cfg.get_doubles("gamma", opt.gammas);
  opt.runs = get_size(ctx.cfg, "runs", opt.runs);
  opt.max_steps = get_size(ctx.cfg, "max_steps", opt.max_steps);
  opt.stop = parse_stop(ctx.cfg.get("stop", "all_infected"));
  opt.target = get_size(ctx.cfg, "target", 0);
  opt.snapshot_k = get_size(ctx.cfg, "snapshot_k", opt.snapshot_k);
  opt.seed = ctx.seed;
  opt.threads = ctx.threads;
  check_range(!opt.alphas.empty() && !opt.gammas.empty(), "alpha and gamma grids must not be empty");
  for (double g : opt.gammas) check_range(g >= 0, "gamma must be non-negative");
  check_range(opt.runs >= 1, "runs must be at least 1");
  check_range(opt.max_steps >= 1, "max_steps must be at least 1");
  check_range(opt.stop != StopRule::target_count || opt.target >= 1,
              "stop = target_count needs target >= 1");

  const auto g = analysis_graph(ctx);
  std::optional<NodeId> seed_node;
  if (ctx.cfg.has("seed_node")) {
    const auto label = ctx.cfg.get("seed_node", "");
    seed_node = g.graph.find(label);
    if (!seed_node) throw UsageError("seed_node '" + label + "' is not in the graph");
  }

  EnsembleStats stats;
  if (!seed_node) stats = run_ensemble(g.view, opt);

  // The first run of the first cell, written in full.
  SimConfig first;
  first.alpha = opt.alphas.front();
  first.gamma = opt.gammas.front();
  first.seed_node = seed_node;
  first.max_steps = opt.max_steps;
  first.stop = opt.stop;
  first.target = opt.target;
  first.rng_seed = run_seed(opt.seed, 0);
  const auto result = run(g.view, first);

  if (!seed_node) {
    write_file(ctx, "ensemble.csv", [&](std::ostream& os) { write_ensemble(os, stats); });
  }
  write_file(ctx, "curve.csv", [&](std::ostream& os) { write_curve(os, result); });
  write_file(ctx, "edges.csv",
             [&](std::ostream& os) { write_infection_edges(os, result, g.graph.labels()); });

  json j;
  j["command"] = "simulate";
  j["graph"] = g.source;
  j["nodes"] = g.view.num_nodes();
  j["edges"] = g.view.num_edges();
  j["seed"] = ctx.seed;
  j["runs"] = opt.runs;
  j["stop"] = stop_name(opt.stop);
  j["max_steps"] = opt.max_steps;
  j["first_run"] = {{"alpha", first.alpha},
                    {"gamma", first.gamma},
                    {"seed_node", g.graph.label(result.seed)},
                    {"infected", result.order.size()},
                    {"steps", result.curve.size() - 1},
                    {"saturated", result.saturated},
                    {"component_size", result.component_size},
                    {"clamped_slots", result.clamped_slots}};
  json cells = json::array();
  for (const auto& c : stats.cells) {
    cells.push_back({{"alpha", c.alpha},
                     {"gamma", c.gamma},
                     {"empty", c.empty()},
                     {"degenerate_runs", c.time_difference.degenerate},
                     {"clamped_slots", c.clamped_slots}});
  }
  j["cells"] = cells;
  write_json(ctx, "simulate.json", j);
  return kOk;
}

int cmd_analyze(const Context& ctx) {
  const double share = ctx.cfg.get_double("share", kDominantShare);
  check_range(share > 0.5 && share < 1.0, "share must lie in (0.5, 1)");
  const auto events = load_events_file(input_path(ctx.cfg, "events").string());

  struct Row {
    const EventRecord* event;
    std::optional<Emotion> dominant;
    BurstMarkers markers;
    SpeedMetrics speed;
  };
  std::vector<Row> rows;
  std::vector<std::pair<std::string, std::string>> omitted;
  for (const auto& ev : events) {
    try {
      Row r{&ev, dominant_emotion(ev, share), {}, {}};
      r.markers = detect_markers(event_curve(ev));
      r.speed = speed_metrics(r.markers);
      rows.push_back(r);
    } catch (const NoBurstError& e) {
      omitted.emplace_back(ev.id, "no_burst");
    } catch (const UndefinedError& e) {
      omitted.emplace_back(ev.id, "no_emotional_tweets");
    } catch (const DomainError& e) {
      omitted.emplace_back(ev.id, "too_short");
    }
  }

  write_file(ctx, "markers.csv", [&](std::ostream& os) {
    os << "event_id,x_A,y_A,x_P,y_P,time_difference,slope,normalized_slope,dominant_emotion\n";
    for (const auto& r : rows) {
      os << r.event->id << ',' << format_number(r.markers.x_a) << ','
         << format_number(r.markers.y_a) << ',' << format_number(r.markers.x_p) << ','
         << format_number(r.markers.y_p) << ',' << format_number(r.speed.time_difference) << ','
         << format_number(r.speed.slope) << ',' << format_number(r.speed.normalized_slope) << ','
         << (r.dominant ? name(*r.dominant) : "none") << '\n';
    }
  });
  write_file(ctx, "omitted.csv", [&](std::ostream& os) {
    os << "event_id,reason\n";
    for (const auto& [id, why] : omitted) os << id << ',' << why << '\n';
  });

  // Mean speed per dominant emotion (Table-style summary).
  std::map<std::string, std::vector<const Row*>> groups;
  for (const auto& r : rows) {
    groups["all"].push_back(&r);
    groups[r.dominant ? std::string(name(*r.dominant)) : "none"].push_back(&r);
  }
  json summary = json::object();
  write_file(ctx, "speed.csv", [&](std::ostream& os) {
    os << "group,metric,mean,std_error,n\n";
    for (const auto& [group, members] : groups) {
      std::vector<double> td, sl, ns;
      for (const auto* r : members) {
        td.push_back(r->speed.time_difference);
        sl.push_back(r->speed.slope);
        ns.push_back(r->speed.normalized_slope);
      }
      json g;
      for (const auto& [metric, values] :
           {std::pair{"time_difference", &td}, {"slope", &sl}, {"normalized_slope", &ns}}) {
        const auto s = summarize(*values);
        os << group << ',' << metric << ',' << format_number(s.mean) << ','
           << format_number(s.std_error) << ',' << s.n << '\n';
        g[metric] = summary_json(s);
      }
      summary[group] = g;
    }
  });

  json j;
  j["command"] = "analyze";
  j["events"] = events.size();
  j["analyzed"] = rows.size();
  j["omitted"] = omitted.size();
  j["share"] = share;
  j["speed"] = summary;
  write_json(ctx, "analyze.json", j);
  return kOk;
}

int cmd_fit(const Context& ctx) {
  const auto events = load_events_file(input_path(ctx.cfg, "events").string());
  if (events.empty()) throw UsageError("event file contains no events");

  FitGridOptions opt;
  opt.alphas = ctx.cfg.get_doubles("alpha", opt.alphas);
  opt.gammas = ctx.cfg.get_doubles("gamma", opt.gammas);
  opt.runs = get_size(ctx.cfg, "runs", opt.runs);
  opt.max_steps = get_size(ctx.cfg, "max_steps", opt.max_steps);
  opt.stop = parse_stop(ctx.cfg.get("stop", "all_infected"));
  opt.target = get_size(ctx.cfg, "target", 0);
  opt.seed = ctx.seed;
  opt.threads = ctx.threads;
  const auto k = get_size(ctx.cfg, "k", 20);
  const double share = ctx.cfg.get_double("share", kDominantShare);
  check_range(!opt.alphas.empty() && !opt.gammas.empty(), "alpha and gamma grids must not be empty");
  for (double g : opt.gammas) check_range(g >= 0, "gamma must be non-negative");
  check_range(opt.runs >= 1, "runs must be at least 1");
  check_range(opt.max_steps >= 1, "max_steps must be at least 1");
  check_range(k >= 1, "k must be at least 1");
  check_range(share > 0.5 && share < 1.0, "share must lie in (0.5, 1)");
  check_range(opt.stop != StopRule::target_count || opt.target >= 1,
              "stop = target_count needs target >= 1");

  const auto g = analysis_graph(ctx);
  const auto grid = simulate_grid(g.view, opt);
  if (k > grid.usable()) {
    std::cerr << "warning: k = " << k << " exceeds the " << grid.usable()
              << " usable grid cells; returning all of them\n";
  }
  const auto report = fit_events(events, grid, k, share);

  write_file(ctx, "fit.csv", [&](std::ostream& os) { write_fit(os, report); });
  write_file(ctx, "omitted.csv", [&](std::ostream& os) {
    os << "event_id,reason\n";
    for (const auto& [id, why] : report.omitted) os << id << ',' << why << '\n';
  });
  for (const auto& [group, cdf] : report.alpha_cdf) {
    const auto file = group == "all" ? std::string("cdf.csv") : "cdf_" + group + ".csv";
    write_file(ctx, file, [&](std::ostream& os) { write_cdf(os, report, group); });
  }

  json j;
  j["command"] = "fit";
  j["graph"] = g.source;
  j["seed"] = ctx.seed;
  j["grid_cells"] = grid.cells.size();
  j["usable_cells"] = grid.usable();
  j["k"] = k;
  j["k_clamped"] = k > grid.usable();
  j["events"] = events.size();
  j["fitted"] = report.events.size();
  j["omitted"] = report.omitted.size();
  json best = json::array();
  for (const auto& e : report.events) {
    const auto& top = e.fit.top.front();
    best.push_back({{"event_id", e.event_id},
                    {"dominant", e.dominant ? std::string(name(*e.dominant)) : "none"},
                    {"alpha", top.alpha},
                    {"gamma", top.gamma},
                    {"dtw_distance", top.dtw_distance}});
  }
  j["best"] = best;
  write_json(ctx, "fit.json", j);
  return kOk;
}

// ---------------------------------------------------------------------------

struct Override {
  const char* flag;
  const char* key;
  const char* help;
};

void add_overrides(CLI::App* sub, std::map<std::string, std::string>& overrides,
                   std::initializer_list<Override> list) {
  for (const auto& o : list) {
    const std::string key = o.key;
    sub->add_option_function<std::string>(
        o.flag, [&overrides, key](const std::string& v) { overrides[key] = v; }, o.help);
  }
}

int report_error(const char* kind, const std::exception& e, int code) {
  std::cerr << "emoflow: " << kind << ": " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Emotion contagion toolkit: tie strength, exposure analysis, SI simulation, "
               "burst markers and DTW fitting"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::map<std::string, std::string> overrides;

  app.add_option("--config", config_path, "Key-value config file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Output directory (created if missing)");
  app.add_option("--seed", seed, "Global rng seed (default 0)");
  app.add_option("--threads", threads, "Worker threads; 0 = all cores (default EMOFLOW_THREADS or 1)");

  const std::initializer_list<Override> sbm{
      {"--graph-seed", "graph_seed", "Seed of the generated SBM graph (default --seed)"},
      {"--blocks", "blocks", "SBM block sizes, comma separated"},
      {"--p-intra", "p_intra", "SBM intra-block edge probability"},
      {"--p-inter", "p_inter", "SBM inter-block edge probability"},
      {"--intra-weight-min", "intra_weight_min", "Smallest intra-block weight"},
      {"--intra-weight-max", "intra_weight_max", "Largest intra-block weight"},
      {"--inter-weight", "inter_weight", "Inter-block weight"}};
  const std::initializer_list<Override> sim{
      {"--alpha", "alpha", "Alpha grid: a,b,c or first:last:step"},
      {"--gamma", "gamma", "Gamma grid: a,b,c or first:last:step"},
      {"--runs", "runs", "Runs per grid cell"},
      {"--max-steps", "max_steps", "Step cap per run"},
      {"--stop", "stop", "all_infected | step_budget | target_count"},
      {"--target", "target", "Infected count for stop = target_count"}};

  struct Sub {
    CLI::App* app;
    int (*fn)(const Context&);
  };
  std::vector<Sub> subs;

  auto* synth = app.add_subcommand("synth", "Generate an SBM graph, a tweet stream and events");
  add_overrides(synth, overrides, sbm);
  add_overrides(synth, overrides,
                {{"--hours", "hours", "Tweet stream horizon in hours"},
                 {"--rate", "rate", "Tweets per user per hour"},
                 {"--neutral", "neutral", "Fraction of neutral tweets"},
                 {"--mix", "mix", "Base emotion mix: anger,disgust,joy,sadness"},
                 {"--influence", "influence", "Probability of copying a contagious exposure"},
                 {"--retweet-fraction", "retweet_fraction", "Fraction of retweets"},
                 {"--anger-events", "anger_events", "Number of anger-like events"},
                 {"--joy-events", "joy_events", "Number of joy-like events"},
                 {"--max-steps", "max_steps", "Step cap per event run"}});
  subs.push_back({synth, cmd_synth});

  auto* ties = app.add_subcommand("ties", "Tie strength of emotional retweets");
  add_overrides(ties, overrides,
                {{"--graph", "graph", "Edge list: src,dst[,retweet_count]"},
                 {"--tweets", "tweets", "Tweet file"}});
  subs.push_back({ties, cmd_ties});

  auto* contagion = app.add_subcommand("contagion", "Exposure-based contagion metrics");
  add_overrides(contagion, overrides,
                {{"--graph", "graph", "Edge list: src,dst[,retweet_count]"},
                 {"--tweets", "tweets", "Tweet file"},
                 {"--windows", "windows", "Window lengths in hours (default 1:8:1)"},
                 {"--threshold", "threshold", "Minimum emotional exposure (default 20)"},
                 {"--fraction", "fraction", "Susceptibility group fraction (default 0.15)"}});
  subs.push_back({contagion, cmd_contagion});

  auto* simulate = app.add_subcommand("simulate", "Weighted SI ensemble over an (alpha, gamma) grid");
  add_overrides(simulate, overrides, {{"--graph", "graph", "Edge list (default: generated SBM)"}});
  add_overrides(simulate, overrides, sbm);
  add_overrides(simulate, overrides, sim);
  add_overrides(simulate, overrides,
                {{"--snapshot-k", "snapshot_k", "Virality measured on the first k infected"},
                 {"--seed-node", "seed_node", "Single run from this node instead of an ensemble"}});
  subs.push_back({simulate, cmd_simulate});

  auto* analyze = app.add_subcommand("analyze", "Awakening/peak markers and speed of events");
  add_overrides(analyze, overrides,
                {{"--events", "events", "Event file: event_id,hour_index,anger,disgust,joy,sadness"},
                 {"--share", "share", "Dominant-emotion share (default 0.6)"}});
  subs.push_back({analyze, cmd_analyze});

  auto* fit = app.add_subcommand("fit", "DTW fit of (alpha, gamma) to event curves");
  add_overrides(fit, overrides,
                {{"--events", "events", "Event file"},
                 {"--graph", "graph", "Edge list (default: generated SBM)"},
                 {"--k", "k", "Candidates kept per event (default 20)"},
                 {"--share", "share", "Dominant-emotion share (default 0.6)"}});
  add_overrides(fit, overrides, sbm);
  add_overrides(fit, overrides, sim);
  subs.push_back({fit, cmd_fit});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Context ctx;
    if (!config_path.empty()) ctx.cfg = KeyValueConfig::load(config_path);
    for (auto& [k, v] : overrides) ctx.cfg.set(k, v);
    if (seed) ctx.cfg.set("seed", std::to_string(*seed));
    ctx.seed = ctx.cfg.get_uint("seed", 0);
    if (threads) {
      ctx.threads = *threads;
    } else if (ctx.cfg.has("threads")) {
      ctx.threads = static_cast<unsigned>(ctx.cfg.get_uint("threads", 1));
    } else {
      ctx.threads = threads_from_env(1);
    }
    ctx.out = out_dir != "." ? fs::path(out_dir) : fs::path(ctx.cfg.get("out", "."));
    std::error_code ec;
    fs::create_directories(ctx.out, ec);
    if (ec || !fs::is_directory(ctx.out)) {
      throw IoError("cannot create output directory '" + ctx.out.string() + "'");
    }
    for (const auto& s : subs) {
      if (s.app->parsed()) return s.fn(ctx);
    }
    return kUsage;
  } catch (const UsageError& e) {
    return report_error("usage", e, kUsage);
  } catch (const ParseError& e) {
    return report_error("parse error", e, kParse);
  } catch (const IoError& e) {
    return report_error("i/o error", e, kIo);
  } catch (const DomainError& e) {
    return report_error("domain error", e, kDomain);
  } catch (const std::exception& e) {
    return report_error("error", e, 1);
  }
}
