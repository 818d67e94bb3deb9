#include "emoflow/burst.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "text.hpp"

namespace emoflow {

std::optional<Emotion> dominant_emotion(const EventRecord& event, double share) {
  const auto totals = event.totals();
  const auto total = totals.sum();
  if (total <= 0) throw UndefinedError("event '" + event.id + "' has no emotional tweets");
  for (std::size_t j = 0; j < kNumEmotions; ++j) {
    const double s =
        static_cast<double>(totals(static_cast<Eigen::Index>(j))) / static_cast<double>(total);
    if (s > share) return kEmotions[j];
  }
  return std::nullopt;
}

CumulativeCurve event_curve(const EventRecord& event, CurveFilter filter, double share) {
  if (event.hourly.rows() == 0) throw UndefinedError("event '" + event.id + "' is empty");
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> counts;
  if (filter == CurveFilter::all) {
    counts = event.hourly.rowwise().sum();
  } else {
    const auto dom = dominant_emotion(event, share);
    if (!dom) throw UndefinedError("event '" + event.id + "' has no dominant emotion");
    counts = event.hourly.col(static_cast<Eigen::Index>(index(*dom)));
  }
  const auto n = counts.size();
  Eigen::VectorXd x(n), y(n);
  double running = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    running += static_cast<double>(counts(k));
    x(k) = static_cast<double>(event.first_hour + k);
    y(k) = running;
  }
  return CumulativeCurve(std::move(x), std::move(y));
}

std::vector<EventRecord> load_events(std::istream& in) {
  using Row = std::array<std::int64_t, kNumEmotions>;
  std::vector<std::string> order;
  std::map<std::string, std::map<std::int64_t, Row>> bins;

  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::skippable(line)) continue;
    const auto f = text::split_fields(line);
    if (first_row) {
      first_row = false;
      if (f.size() > 1 && !text::is_numeric(f[1])) continue;
    }
    if (f.size() != 6) {
      throw ParseError(line_no, "expected 6 event fields, got " + std::to_string(f.size()));
    }
    const std::string id(f[0]);
    if (id.empty()) throw ParseError(line_no, "empty event id");
    const auto hour = text::parse_int(f[1]);
    if (!hour) throw ParseError(line_no, "bad hour_index '" + std::string(f[1]) + "'");
    auto [it, inserted] = bins.try_emplace(id);
    if (inserted) order.push_back(id);
    auto& row = it->second.try_emplace(*hour, Row{}).first->second;
    for (std::size_t j = 0; j < kNumEmotions; ++j) {
      const auto c = text::parse_int(f[2 + j]);
      if (!c || *c < 0) {
        throw ParseError(line_no, "count must be a non-negative integer, got '" +
                                      std::string(f[2 + j]) + "'");
      }
      row[j] += *c;
    }
  }

  std::vector<EventRecord> events;
  events.reserve(order.size());
  for (const auto& id : order) {
    const auto& hours = bins.at(id);
    EventRecord e;
    e.id = id;
    e.first_hour = hours.begin()->first;
    const auto span = hours.rbegin()->first - e.first_hour + 1;
    e.hourly.setZero(span, 4);
    for (const auto& [h, row] : hours) {
      for (std::size_t j = 0; j < kNumEmotions; ++j) {
        e.hourly(h - e.first_hour, static_cast<Eigen::Index>(j)) = row[j];
      }
    }
    events.push_back(std::move(e));
  }
  return events;
}

std::vector<EventRecord> load_events_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open event file '" + path + "'");
  return load_events(in);
}

void write_events(std::ostream& out, const std::vector<EventRecord>& events) {
  out << "event_id,hour_index,anger,disgust,joy,sadness\n";
  for (const auto& e : events) {
    for (Eigen::Index k = 0; k < e.hourly.rows(); ++k) {
      out << e.id << ',' << e.first_hour + k;
      for (Eigen::Index j = 0; j < 4; ++j) out << ',' << e.hourly(k, j);
      out << '\n';
    }
  }
}

}  // namespace emoflow
