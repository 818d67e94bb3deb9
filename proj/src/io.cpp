#include "emoflow/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace emoflow {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace

void write_tie_report(std::ostream& out, const TieStrengthReport& report) {
  out << "emotion,metric,mean,std_error,n\n";
  for (auto e : kEmotions) {
    const auto& st = report.per_emotion[index(e)];
    if (!st) continue;
    const auto n = st->common_friends.n;
    out << name(e) << ",common_friends," << format_number(st->common_friends.mean) << ','
        << format_number(st->common_friends.std_error) << ',' << n << '\n';
    out << name(e) << ",reciprocity," << format_number(st->reciprocity) << ",," << n << '\n';
    out << name(e) << ",retweet_strength," << format_number(st->retweet_strength.mean) << ','
        << format_number(st->retweet_strength.std_error) << ',' << n << '\n';
  }
}

void write_contagion_rows(std::ostream& out, const ContagionReport& report) {
  out << "window_hours,emotion,qualifying,significance,influenced,influenced_share\n";
  for (const auto& r : report.rows) {
    out << format_number(r.window_hours) << ',' << name(r.emotion) << ',' << r.qualifying << ','
        << optional_number(r.significance) << ',' << optional_number(r.influenced) << ','
        << format_number(r.influenced_share) << '\n';
  }
}

void write_susceptibility(std::ostream& out, const ContagionReport& report) {
  out << "window_hours,group,emotion,influenced,tweets,users\n";
  for (const auto& [window, sus] : report.susceptibility) {
    for (const auto* g : {&sus.high, &sus.low}) {
      const char* label = g == &sus.high ? "high" : "low";
      for (auto e : kEmotions) {
        out << format_number(window) << ',' << label << ',' << name(e) << ','
            << optional_number(g->influenced[index(e)]) << ',' << g->tweets[index(e)] << ','
            << g->users.size() << '\n';
      }
    }
  }
}

void write_curve(std::ostream& out, const SimResult& result) {
  out << "step,cumulative_infected\n";
  for (std::size_t k = 0; k < result.curve.size(); ++k) out << k << ',' << result.curve[k] << '\n';
}

void write_infection_edges(std::ostream& out, const SimResult& result,
                           std::span<const std::string> labels) {
  auto label = [&](NodeId u) { return labels.empty() ? std::to_string(u) : labels[u]; };
  out << "infector,infectee,step\n";
  for (const auto& e : result.edges) {
    out << label(e.infector) << ',' << label(e.infectee) << ',' << result.infected_at[e.infectee]
        << '\n';
  }
}

void write_ensemble(std::ostream& out, const EnsembleStats& stats) {
  out << "alpha,gamma,metric,mean,std,n,degenerate_count\n";
  for (const auto& c : stats.cells) {
    const std::pair<const char*, const MetricStats*> metrics[] = {
        {"time_difference", &c.time_difference},
        {"slope", &c.slope},
        {"normalized_slope", &c.normalized_slope},
        {"virality", &c.virality},
    };
    for (const auto& [metric, m] : metrics) {
      out << format_number(c.alpha) << ',' << format_number(c.gamma) << ',' << metric << ',';
      if (m->n > 0) {
        out << format_number(m->mean) << ',' << format_number(m->std);
      } else {
        out << ',';
      }
      out << ',' << m->n << ',' << m->degenerate << '\n';
    }
  }
}

void write_fit(std::ostream& out, const FitReport& report) {
  out << "event_id,rank,alpha,gamma,dtw_distance\n";
  for (const auto& ev : report.events) {
    for (std::size_t r = 0; r < ev.fit.top.size(); ++r) {
      const auto& c = ev.fit.top[r];
      out << ev.event_id << ',' << r + 1 << ',' << format_number(c.alpha) << ','
          << format_number(c.gamma) << ',' << format_number(c.dtw_distance) << '\n';
    }
  }
}

void write_cdf(std::ostream& out, const FitReport& report, const std::string& group) {
  out << "parameter,value,cdf\n";
  if (const auto it = report.alpha_cdf.find(group); it != report.alpha_cdf.end()) {
    for (const auto& p : it->second) {
      out << "alpha," << format_number(p.value) << ',' << format_number(p.cdf) << '\n';
    }
  }
  if (const auto it = report.gamma_cdf.find(group); it != report.gamma_cdf.end()) {
    for (const auto& p : it->second) {
      out << "gamma," << format_number(p.value) << ',' << format_number(p.cdf) << '\n';
    }
  }
}

}  // namespace emoflow
