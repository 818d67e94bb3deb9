#include "emoflow/diffusion.hpp"

#include <algorithm>
#include <cmath>

#include "emoflow/burst.hpp"
#include "emoflow/errors.hpp"
#include "emoflow/parallel.hpp"
#include "emoflow/paths.hpp"

namespace emoflow {

namespace {

double normalizer(std::span<const double> weights, double alpha) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw DomainError("edge weights must be strictly positive");
    sum += std::pow(w, alpha);
  }
  return sum;
}

}  // namespace

double infection_probability(const UndirectedView& g, NodeId infected, NodeId susceptible,
                             double alpha, double gamma) {
  if (!(gamma >= 0.0)) throw DomainError("gamma must be non-negative");
  const double w = g.weight(infected, susceptible);
  const double p = gamma * std::pow(w, alpha) / normalizer(g.weights(infected), alpha);
  return std::clamp(p, 0.0, 1.0);
}

TransmissionModel::TransmissionModel(const UndirectedView& g, double alpha, double gamma)
    : graph_(&g), alpha_(alpha), gamma_(gamma) {
  if (!(gamma >= 0.0)) throw DomainError("gamma must be non-negative");
  prob_.resize(2 * g.num_edges());
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    const auto w = g.weights(i);
    if (w.empty()) continue;
    const double norm = normalizer(w, alpha);
    auto* out = prob_.data() + g.edge_begin(i);
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double p = gamma * std::pow(w[k], alpha) / norm;
      if (p > 1.0) ++clamped_;
      out[k] = std::clamp(p, 0.0, 1.0);
    }
  }
}

SimState::SimState(std::size_t num_nodes, NodeId seed)
    : infected_at(num_nodes, kSusceptible), order{seed}, curve{1}, active{seed} {
  if (seed >= num_nodes) throw DomainError("seed node out of range");
  infected_at[seed] = 0;
}

std::size_t step(SimState& state, const TransmissionModel& model, Rng& rng) {
  const auto& g = model.graph();
  const auto now = static_cast<std::int32_t>(state.steps()) + 1;
  const auto before = state.order.size();

  for (NodeId i : state.active) {
    const auto nbrs = g.neighbors(i);
    const auto probs = model.probabilities(i);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const NodeId s = nbrs[k];
      // Nodes claimed earlier in this step already have a smaller-id
      // infector; further trials on them cannot change the outcome.
      if (state.infected_at[s] != kSusceptible) continue;
      const double p = probs[k];
      if (p <= 0.0) continue;
      if (p >= 1.0 || uniform01(rng) < p) {
        state.infected_at[s] = now;
        state.order.push_back(s);
        state.edges.push_back({i, s});
      }
    }
  }

  const auto added = state.order.size() - before;
  state.curve.push_back(state.order.size());

  // Merge the new infections into the ascending active list and drop nodes
  // with no susceptible neighbor left.
  std::vector<NodeId> fresh(state.order.begin() + static_cast<std::ptrdiff_t>(before),
                            state.order.end());
  std::sort(fresh.begin(), fresh.end());
  std::vector<NodeId> merged;
  merged.reserve(state.active.size() + fresh.size());
  std::merge(state.active.begin(), state.active.end(), fresh.begin(), fresh.end(),
             std::back_inserter(merged));
  std::erase_if(merged, [&](NodeId u) {
    const auto nb = g.neighbors(u);
    return std::none_of(nb.begin(), nb.end(),
                        [&](NodeId v) { return state.infected_at[v] == kSusceptible; });
  });
  state.active = std::move(merged);
  return added;
}

namespace {

std::size_t component_size(const UndirectedView& g, NodeId seed) {
  const auto dist = bfs_distances(g, seed);
  return static_cast<std::size_t>(std::count_if(dist.begin(), dist.end(), [](int d) { return d >= 0; }));
}

NodeId pick_seed(const UndirectedView& g, Rng& rng) {
  std::vector<NodeId> candidates;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (g.degree(u) > 0) candidates.push_back(u);
  }
  if (candidates.empty()) throw DomainError("graph has no node with a neighbor");
  return candidates[uniform_index(rng, candidates.size())];
}

}  // namespace

Eigen::VectorXd SimResult::curve_values() const {
  Eigen::VectorXd y(static_cast<Eigen::Index>(curve.size()));
  for (std::size_t k = 0; k < curve.size(); ++k) y(static_cast<Eigen::Index>(k)) = static_cast<double>(curve[k]);
  return y;
}

SimResult run(const TransmissionModel& model, const SimConfig& config) {
  const auto& g = model.graph();
  if (g.num_nodes() == 0) throw DomainError("cannot simulate on an empty graph");
  if (config.max_steps < 1) throw DomainError("max_steps must be at least 1");

  Rng rng(config.rng_seed);
  const NodeId seed = config.seed_node ? *config.seed_node : pick_seed(g, rng);
  SimState state(g.num_nodes(), seed);

  SimResult r;
  r.seed = seed;
  r.component_size = component_size(g, seed);
  r.clamped_slots = model.clamped_slots();

  auto done = [&] {
    switch (config.stop) {
      case StopRule::all_infected: return state.infected() >= r.component_size;
      case StopRule::target_count:
        return state.infected() >= config.target || state.infected() >= r.component_size;
      case StopRule::step_budget: return false;
    }
    return false;
  };
  while (state.steps() < config.max_steps && !done()) step(state, model, rng);

  r.saturated = state.infected() >= r.component_size;
  r.infected_at = std::move(state.infected_at);
  r.order = std::move(state.order);
  r.edges = std::move(state.edges);
  r.curve = std::move(state.curve);
  return r;
}

SimResult run(const UndirectedView& g, const SimConfig& config) {
  const TransmissionModel model(g, config.alpha, config.gamma);
  return run(model, config);
}

Snapshot snapshot_first_k(const SimResult& result, std::size_t k) {
  Snapshot s;
  const auto take = std::min(k, result.order.size());
  s.truncated = take < k;
  s.nodes.assign(result.order.begin(), result.order.begin() + static_cast<std::ptrdiff_t>(take));
  // edges[j] infected order[j + 1]; its infector precedes it in the order.
  if (take > 1) s.edges.assign(result.edges.begin(), result.edges.begin() + static_cast<std::ptrdiff_t>(take - 1));
  return s;
}

// ---------------------------------------------------------------------------

double MetricStats::std_error() const {
  return n > 0 ? std / std::sqrt(static_cast<double>(n)) : 0.0;
}

const EnsembleCell& EnsembleStats::at(double alpha, double gamma) const {
  for (const auto& c : cells) {
    if (std::abs(c.alpha - alpha) < 1e-9 && std::abs(c.gamma - gamma) < 1e-9) return c;
  }
  throw DomainError("no ensemble cell for the requested (alpha, gamma)");
}

std::uint64_t run_seed(std::uint64_t ensemble_seed, std::size_t run) {
  return split_seed(ensemble_seed, run);
}

RunMetrics run_metrics(const UndirectedView& g, const SimResult& result, std::size_t snapshot_k) {
  RunMetrics m;
  if (result.curve.size() >= 3) {
    try {
      const auto markers = detect_markers(CumulativeCurve::from_values(result.curve_values()));
      const auto speed = speed_metrics(markers);
      m.time_difference = speed.time_difference;
      m.slope = speed.slope;
      m.normalized_slope = speed.normalized_slope;
    } catch (const UndefinedError&) {
    }
  }
  const auto snap = snapshot_first_k(result, snapshot_k);
  if (snap.nodes.size() >= 2) {
    m.virality = virality(g, snap.nodes);
    m.snapshot_diameter = induced_diameter(g, snap.nodes);
  }
  return m;
}

MetricStats aggregate(std::span<const std::optional<double>> values) {
  MetricStats s;
  double sum = 0.0;
  for (const auto& v : values) {
    if (v) {
      sum += *v;
      ++s.n;
    } else {
      ++s.degenerate;
    }
  }
  if (s.n == 0) return s;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (const auto& v : values) {
      if (v) ss += (*v - s.mean) * (*v - s.mean);
    }
    s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

Eigen::VectorXd mean_curve(std::span<const SimResult> runs) {
  std::size_t len = 0;
  for (const auto& r : runs) len = std::max(len, r.curve.size());
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(len));
  for (const auto& r : runs) {
    const auto y = r.curve_values();
    sum.head(y.size()) += y;
    sum.tail(sum.size() - y.size()).array() += static_cast<double>(r.curve.back());
  }
  if (!runs.empty()) sum /= static_cast<double>(runs.size());
  return sum;
}

EnsembleStats run_ensemble(const UndirectedView& g, const EnsembleOptions& options) {
  if (options.runs < 1) throw DomainError("ensemble needs at least one run per cell");
  if (options.alphas.empty() || options.gammas.empty()) throw DomainError("empty parameter grid");

  EnsembleStats stats;
  for (double alpha : options.alphas) {
    for (double gamma : options.gammas) {
      const TransmissionModel model(g, alpha, gamma);
      std::vector<SimResult> results(options.runs);
      std::vector<RunMetrics> metrics(options.runs);
      parallel_for(options.runs, options.threads, [&](std::size_t r) {
        SimConfig cfg;
        cfg.alpha = alpha;
        cfg.gamma = gamma;
        cfg.max_steps = options.max_steps;
        cfg.stop = options.stop;
        cfg.target = options.target;
        cfg.rng_seed = run_seed(options.seed, r);
        results[r] = run(model, cfg);
        metrics[r] = run_metrics(g, results[r], options.snapshot_k);
        // Only the curve is needed past this point.
        results[r].infected_at = {};
        results[r].order = {};
        results[r].edges = {};
      });

      EnsembleCell cell;
      cell.alpha = alpha;
      cell.gamma = gamma;
      cell.clamped_slots = model.clamped_slots();
      std::vector<std::optional<double>> td, sl, ns, vir;
      for (const auto& m : metrics) {
        td.push_back(m.time_difference);
        sl.push_back(m.slope);
        ns.push_back(m.normalized_slope);
        vir.push_back(m.virality);
      }
      cell.time_difference = aggregate(td);
      cell.slope = aggregate(sl);
      cell.normalized_slope = aggregate(ns);
      cell.virality = aggregate(vir);
      cell.mean_curve = mean_curve(results);
      cell.runs = std::move(metrics);
      stats.cells.push_back(std::move(cell));
    }
  }
  return stats;
}

}  // namespace emoflow
