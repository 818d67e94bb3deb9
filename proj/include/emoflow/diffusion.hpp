#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "emoflow/graph.hpp"
#include "emoflow/rng.hpp"

namespace emoflow {

/// Per-trial infection probability gamma * w_is^alpha / sum_n w_in^alpha,
/// where n ranges over all neighbors of the infected node i; clamped to
/// [0, 1]. Throws DomainError when {i, s} is not an edge, gamma < 0, or a
/// weight of i is not strictly positive.
double infection_probability(const UndirectedView& g, NodeId infected, NodeId susceptible,
                             double alpha, double gamma);

/// Per-edge-slot trial probabilities for one (alpha, gamma), laid out like
/// the view's CSR arrays. Shared read-only by every run of a cell.
class TransmissionModel {
 public:
  TransmissionModel(const UndirectedView& g, double alpha, double gamma);

  const UndirectedView& graph() const noexcept { return *graph_; }
  double alpha() const noexcept { return alpha_; }
  double gamma() const noexcept { return gamma_; }
  /// Probability on the k-th incident edge slot of `i`.
  std::span<const double> probabilities(NodeId i) const {
    return {prob_.data() + graph_->edge_begin(i), graph_->degree(i)};
  }
  /// Edge slots whose raw probability exceeded 1 and were clamped.
  std::size_t clamped_slots() const noexcept { return clamped_; }

 private:
  const UndirectedView* graph_;
  double alpha_;
  double gamma_;
  std::vector<double> prob_;
  std::size_t clamped_ = 0;
};

enum class StopRule {
  all_infected,  ///< stop once the seed's component is fully infected
  step_budget,   ///< always run max_steps steps
  target_count,  ///< stop once `target` nodes are infected
};

struct SimConfig {
  double alpha = 0.0;
  double gamma = 0.5;
  std::optional<NodeId> seed_node;  ///< nullopt: uniform over nodes with degree >= 1
  std::size_t max_steps = 10000;
  StopRule stop = StopRule::all_infected;
  std::size_t target = 0;
  std::uint64_t rng_seed = 0;
};

struct InfectionEdge {
  NodeId infector;
  NodeId infectee;

  friend bool operator==(const InfectionEdge&, const InfectionEdge&) = default;
};

inline constexpr std::int32_t kSusceptible = -1;

/// Mutable SI state of one run.
struct SimState {
  std::vector<std::int32_t> infected_at;  ///< step of infection, kSusceptible if never
  std::vector<NodeId> order;              ///< infection order
  std::vector<InfectionEdge> edges;       ///< parallel to order[1..]
  std::vector<std::size_t> curve;         ///< cumulative infected count per step
  std::vector<NodeId> active;             ///< infected nodes that may still transmit, ascending

  SimState(std::size_t num_nodes, NodeId seed);
  std::size_t steps() const noexcept { return curve.size() - 1; }
  std::size_t infected() const noexcept { return order.size(); }
};

/// One synchronous step: every node infected at the start of the step makes
/// one independent trial on each susceptible neighbor (ascending infector
/// id, neighbors in CSR order). A node reached by several successes is
/// attributed to the smallest infector id. Returns the number of new
/// infections.
std::size_t step(SimState& state, const TransmissionModel& model, Rng& rng);

struct SimResult {
  NodeId seed = 0;
  std::vector<std::int32_t> infected_at;
  std::vector<NodeId> order;
  std::vector<InfectionEdge> edges;
  std::vector<std::size_t> curve;  ///< y(0) = 1
  bool saturated = false;          ///< the seed's component was exhausted
  std::size_t component_size = 0;
  std::size_t clamped_slots = 0;

  Eigen::VectorXd curve_values() const;
  friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Runs until the stop rule fires or max_steps is reached. Deterministic in
/// (graph, config).
SimResult run(const TransmissionModel& model, const SimConfig& config);
SimResult run(const UndirectedView& g, const SimConfig& config);

struct Snapshot {
  std::vector<NodeId> nodes;          ///< first k infected, in infection order
  std::vector<InfectionEdge> edges;   ///< infection-tree edges among them
  bool truncated = false;             ///< fewer than k nodes were infected
};

Snapshot snapshot_first_k(const SimResult& result, std::size_t k);

// ---------------------------------------------------------------------------
// Ensembles

struct MetricStats {
  double mean = 0.0;
  double std = 0.0;  ///< sample standard deviation; 0 when n <= 1
  std::size_t n = 0;
  std::size_t degenerate = 0;

  double std_error() const;
};

/// Speed and structure metrics of one run; nullopt where undefined.
struct RunMetrics {
  std::optional<double> time_difference;
  std::optional<double> slope;
  std::optional<double> normalized_slope;
  std::optional<double> virality;
  std::optional<std::size_t> snapshot_diameter;
};

struct EnsembleOptions {
  std::vector<double> alphas{-1.0, -0.5, 0.0, 0.5, 1.0};
  std::vector<double> gammas{0.4, 0.8};
  std::size_t runs = 50;
  std::size_t max_steps = 10000;
  StopRule stop = StopRule::all_infected;
  std::size_t target = 0;
  /// Virality is measured on the subgraph of the first k infected nodes.
  std::size_t snapshot_k = 50;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct EnsembleCell {
  double alpha = 0.0;
  double gamma = 0.0;
  MetricStats time_difference;
  MetricStats slope;
  MetricStats normalized_slope;
  MetricStats virality;
  std::vector<RunMetrics> runs;
  /// Pointwise mean of the runs' curves, each padded with its final value.
  Eigen::VectorXd mean_curve;
  std::size_t clamped_slots = 0;

  /// True when no run produced burst markers.
  bool empty() const noexcept { return time_difference.n == 0; }
};

struct EnsembleStats {
  std::vector<EnsembleCell> cells;  ///< alpha-major: cells[a * gammas + g]

  const EnsembleCell& at(double alpha, double gamma) const;
};

/// Seed of run r: split_seed(options.seed, r). The same sequence is used in
/// every cell, so cells are compared on common random numbers.
std::uint64_t run_seed(std::uint64_t ensemble_seed, std::size_t run);

RunMetrics run_metrics(const UndirectedView& g, const SimResult& result, std::size_t snapshot_k);

MetricStats aggregate(std::span<const std::optional<double>> values);

/// Pointwise mean of cumulative curves padded to a common length.
Eigen::VectorXd mean_curve(std::span<const SimResult> runs);

EnsembleStats run_ensemble(const UndirectedView& g, const EnsembleOptions& options);

}  // namespace emoflow
