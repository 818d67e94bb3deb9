#pragma once

// Plot-ready CSV writers for every report the toolkit produces.

#include <iosfwd>
#include <span>
#include <string>

#include "emoflow/contagion.hpp"
#include "emoflow/diffusion.hpp"
#include "emoflow/fitting.hpp"
#include "emoflow/ties.hpp"

namespace emoflow {

/// Shortest round-trip decimal form of a double ("nan" for NaN).
std::string format_number(double v);

/// emotion,metric,mean,std_error,n
void write_tie_report(std::ostream& out, const TieStrengthReport& report);

/// window_hours,emotion,qualifying,significance,influenced,influenced_share
void write_contagion_rows(std::ostream& out, const ContagionReport& report);

/// window_hours,group,emotion,influenced,tweets,users
void write_susceptibility(std::ostream& out, const ContagionReport& report);

/// step,cumulative_infected
void write_curve(std::ostream& out, const SimResult& result);

/// infector,infectee,step (node labels from `labels` when non-empty)
void write_infection_edges(std::ostream& out, const SimResult& result,
                           std::span<const std::string> labels);

/// alpha,gamma,metric,mean,std,n,degenerate_count
void write_ensemble(std::ostream& out, const EnsembleStats& stats);

/// event_id,rank,alpha,gamma,dtw_distance
void write_fit(std::ostream& out, const FitReport& report);

/// parameter,value,cdf
void write_cdf(std::ostream& out, const FitReport& report, const std::string& group);

}  // namespace emoflow
