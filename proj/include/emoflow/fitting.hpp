#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "emoflow/burst.hpp"
#include "emoflow/diffusion.hpp"
#include "emoflow/errors.hpp"

namespace emoflow {

/// Classic dynamic time warping with local cost |a_i - b_j|, no window,
/// both endpoints aligned. Returns the summed cost of the cheapest monotone
/// warping path. Throws DomainError on empty input.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar dtw_distance(const Eigen::DenseBase<DerivedA>& a,
                                       const Eigen::DenseBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.size();
  const Eigen::Index m = b.size();
  if (n == 0 || m == 0) throw DomainError("DTW of an empty sequence");

  // Two rolling rows of the cumulative cost table D(i, j).
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> prev(m), cur(m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const Scalar cost = std::abs(a(i) - static_cast<Scalar>(b(j)));
      Scalar best;
      if (i == 0 && j == 0) {
        best = Scalar(0);
      } else if (i == 0) {
        best = cur(j - 1);
      } else if (j == 0) {
        best = prev(j);
      } else {
        best = std::min({prev(j), prev(j - 1), cur(j - 1)});
      }
      cur(j) = cost + best;
    }
    prev.swap(cur);
  }
  return prev(m - 1);
}

struct FitCandidate {
  double alpha = 0.0;
  double gamma = 0.0;
  double dtw_distance = 0.0;
  std::size_t cell = 0;  ///< index into the simulated grid
};

/// Awakening-to-peak segment of a curve, divided by its peak volume.
/// Throws NoBurstError when the curve has no markers.
Eigen::VectorXd normalized_burst_segment(const CumulativeCurve& curve);

/// Simulated reference segments for every (alpha, gamma) cell, computed
/// once from ensemble mean curves and reused for every event.
struct SimulatedGrid {
  struct Cell {
    double alpha = 0.0;
    double gamma = 0.0;
    std::optional<Eigen::VectorXd> segment;  ///< nullopt: no markers
    std::size_t runs = 0;
  };
  std::vector<Cell> cells;

  std::size_t usable() const;
};

struct FitGridOptions {
  std::vector<double> alphas;  ///< default -1.0, -0.9, ..., 1.0
  std::vector<double> gammas;  ///< default 0.1, 0.2, ..., 1.0
  std::size_t runs = 50;
  std::size_t max_steps = 10000;
  StopRule stop = StopRule::all_infected;
  std::size_t target = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  FitGridOptions();
};

/// Evenly spaced grid from `first` to `last` inclusive, rounded to 1e-9.
std::vector<double> linear_grid(double first, double last, double step);

SimulatedGrid simulate_grid(const UndirectedView& g, const FitGridOptions& options);
SimulatedGrid grid_from_ensemble(const EnsembleStats& stats);

struct FitEntry {
  std::vector<FitCandidate> ranked;  ///< every usable cell, ascending distance
  std::vector<FitCandidate> top;     ///< first k of `ranked`
  std::size_t excluded_cells = 0;
  bool k_clamped = false;
};

/// Ranks every usable grid cell by DTW distance to the (already normalized)
/// event segment. Ties keep grid order. Throws UndefinedError when no cell
/// is usable.
FitEntry fit_event(const Eigen::VectorXd& event_segment, const SimulatedGrid& grid,
                   std::size_t k = 20);

/// Convenience overload: simulates the grid on `g`, then fits.
FitEntry fit_event(const Eigen::VectorXd& event_segment, const UndirectedView& g,
                   const FitGridOptions& options, std::size_t k = 20);

struct CdfPoint {
  double value;
  double cdf;
};

/// Empirical CDF at every distinct value. Throws UndefinedError when empty.
std::vector<CdfPoint> parameter_cdf(std::span<const double> values);

/// Empirical CDF evaluated at x.
double cdf_at(std::span<const CdfPoint> cdf, double x);

enum class FitParameter { alpha, gamma };

std::vector<CdfPoint> parameter_cdf(std::span<const FitCandidate> selected, FitParameter which);

struct EventFit {
  std::string event_id;
  std::optional<Emotion> dominant;
  FitEntry fit;
};

struct FitReport {
  std::vector<EventFit> events;
  std::vector<std::pair<std::string, std::string>> omitted;  ///< (event id, reason)
  /// CDFs of the selected candidates, keyed by "all" and by dominant-emotion name.
  std::map<std::string, std::vector<CdfPoint>> alpha_cdf;
  std::map<std::string, std::vector<CdfPoint>> gamma_cdf;
};

FitReport fit_events(std::span<const EventRecord> events, const SimulatedGrid& grid, std::size_t k,
                     double dominant_share = kDominantShare);

}  // namespace emoflow
