#include "emoflow/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace emoflow {

Eigen::VectorXd normalized_burst_segment(const CumulativeCurve& curve) {
  const auto markers = detect_markers(curve);
  return burst_segment(curve, markers).y() / markers.y_p;
}

std::size_t SimulatedGrid::usable() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.segment.has_value(); }));
}

std::vector<double> linear_grid(double first, double last, double step) {
  if (!(step > 0.0) || last < first) throw DomainError("bad grid specification");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(std::round((first + static_cast<double>(k) * step) * 1e9) / 1e9);
  }
  return out;
}

FitGridOptions::FitGridOptions()
    : alphas(linear_grid(-1.0, 1.0, 0.1)), gammas(linear_grid(0.1, 1.0, 0.1)) {}

SimulatedGrid grid_from_ensemble(const EnsembleStats& stats) {
  SimulatedGrid grid;
  for (const auto& c : stats.cells) {
    SimulatedGrid::Cell cell;
    cell.alpha = c.alpha;
    cell.gamma = c.gamma;
    cell.runs = c.runs.size();
    if (c.mean_curve.size() >= 3) {
      try {
        cell.segment = normalized_burst_segment(CumulativeCurve::from_values(c.mean_curve));
      } catch (const UndefinedError&) {
      }
    }
    grid.cells.push_back(std::move(cell));
  }
  return grid;
}

SimulatedGrid simulate_grid(const UndirectedView& g, const FitGridOptions& options) {
  EnsembleOptions e;
  e.alphas = options.alphas;
  e.gammas = options.gammas;
  e.runs = options.runs;
  e.max_steps = options.max_steps;
  e.stop = options.stop;
  e.target = options.target;
  e.seed = options.seed;
  e.threads = options.threads;
  e.snapshot_k = 0;  // virality is not needed for fitting
  return grid_from_ensemble(run_ensemble(g, e));
}

FitEntry fit_event(const Eigen::VectorXd& event_segment, const SimulatedGrid& grid, std::size_t k) {
  FitEntry entry;
  for (std::size_t c = 0; c < grid.cells.size(); ++c) {
    const auto& cell = grid.cells[c];
    if (!cell.segment) {
      ++entry.excluded_cells;
      continue;
    }
    entry.ranked.push_back({cell.alpha, cell.gamma, dtw_distance(event_segment, *cell.segment), c});
  }
  if (entry.ranked.empty()) throw UndefinedError("every grid cell is degenerate");
  std::stable_sort(entry.ranked.begin(), entry.ranked.end(),
                   [](const FitCandidate& a, const FitCandidate& b) {
                     return a.dtw_distance < b.dtw_distance;
                   });
  entry.k_clamped = k > entry.ranked.size();
  const auto take = std::min(k, entry.ranked.size());
  entry.top.assign(entry.ranked.begin(), entry.ranked.begin() + static_cast<std::ptrdiff_t>(take));
  return entry;
}

FitEntry fit_event(const Eigen::VectorXd& event_segment, const UndirectedView& g,
                   const FitGridOptions& options, std::size_t k) {
  return fit_event(event_segment, simulate_grid(g, options), k);
}

std::vector<CdfPoint> parameter_cdf(std::span<const double> values) {
  if (values.empty()) throw UndefinedError("CDF of an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<CdfPoint> out;
  const auto n = static_cast<double>(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k + 1 < sorted.size() && sorted[k + 1] == sorted[k]) continue;
    out.push_back({sorted[k], static_cast<double>(k + 1) / n});
  }
  return out;
}

double cdf_at(std::span<const CdfPoint> cdf, double x) {
  double value = 0.0;
  for (const auto& p : cdf) {
    if (p.value <= x) value = p.cdf;
  }
  return value;
}

std::vector<CdfPoint> parameter_cdf(std::span<const FitCandidate> selected, FitParameter which) {
  std::vector<double> values;
  values.reserve(selected.size());
  for (const auto& c : selected) values.push_back(which == FitParameter::alpha ? c.alpha : c.gamma);
  return parameter_cdf(values);
}

FitReport fit_events(std::span<const EventRecord> events, const SimulatedGrid& grid, std::size_t k,
                     double dominant_share) {
  FitReport report;
  std::map<std::string, std::vector<FitCandidate>> pooled;
  for (const auto& event : events) {
    EventFit fit;
    fit.event_id = event.id;
    try {
      fit.dominant = dominant_emotion(event, dominant_share);
      const auto segment = normalized_burst_segment(event_curve(event));
      fit.fit = fit_event(segment, grid, k);
    } catch (const NoBurstError& e) {
      report.omitted.emplace_back(event.id, std::string("no_burst: ") + e.what());
      continue;
    } catch (const UndefinedError& e) {
      report.omitted.emplace_back(event.id, std::string("undefined: ") + e.what());
      continue;
    }
    auto& all = pooled["all"];
    all.insert(all.end(), fit.fit.top.begin(), fit.fit.top.end());
    if (fit.dominant) {
      auto& group = pooled[std::string(name(*fit.dominant))];
      group.insert(group.end(), fit.fit.top.begin(), fit.fit.top.end());
    }
    report.events.push_back(std::move(fit));
  }
  for (const auto& [group, candidates] : pooled) {
    if (candidates.empty()) continue;
    report.alpha_cdf[group] = parameter_cdf(candidates, FitParameter::alpha);
    report.gamma_cdf[group] = parameter_cdf(candidates, FitParameter::gamma);
  }
  return report;
}

}  // namespace emoflow
