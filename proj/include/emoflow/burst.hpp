#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "emoflow/emotion.hpp"
#include "emoflow/errors.hpp"

namespace emoflow {

/// Ordered (x, y) samples of a cumulative count: strictly increasing x,
/// non-decreasing non-negative y. Checked at construction.
template <typename Scalar>
class BasicCumulativeCurve {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicCumulativeCurve() = default;

  BasicCumulativeCurve(Vector x, Vector y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.size() != y_.size()) throw DomainError("curve x and y lengths differ");
    for (Eigen::Index k = 0; k < x_.size(); ++k) {
      if (!std::isfinite(static_cast<double>(x_(k))) || !std::isfinite(static_cast<double>(y_(k)))) {
        throw DomainError("curve values must be finite");
      }
      if (y_(k) < Scalar(0)) throw DomainError("cumulative counts must be non-negative");
      if (k > 0 && !(x_(k) > x_(k - 1))) throw DomainError("curve x must be strictly increasing");
      if (k > 0 && y_(k) < y_(k - 1)) throw DomainError("cumulative curve must be non-decreasing");
    }
  }

  /// y sampled at x = 0, 1, 2, ...
  static BasicCumulativeCurve from_values(Vector y) {
    Vector x = Vector::LinSpaced(y.size(), Scalar(0), Scalar(y.size() - 1));
    return BasicCumulativeCurve(std::move(x), std::move(y));
  }

  Eigen::Index size() const noexcept { return x_.size(); }
  const Vector& x() const noexcept { return x_; }
  const Vector& y() const noexcept { return y_; }

 private:
  Vector x_;
  Vector y_;
};

using CumulativeCurve = BasicCumulativeCurve<double>;

/// Awakening (A) and peak (P) points; indices refer to the input curve.
template <typename Scalar>
struct BasicBurstMarkers {
  Eigen::Index awakening = 0;
  Eigen::Index peak = 0;
  Scalar x_a{}, y_a{}, x_p{}, y_p{};
};

using BurstMarkers = BasicBurstMarkers<double>;

/// Tolerance on the normalized cross product for above/below classification.
inline constexpr double kLineTolerance = 1e-12;

/// Parameterless awakening/peak detection.
///
/// Both axes are rescaled to [0, 1] over the curve's range and L joins the
/// first and last points. The peak is the point strictly above L farthest
/// from it, the awakening the point strictly below L farthest from it;
/// equal distances keep the earliest point. Throws NoBurstError when either
/// side is empty or the awakening does not precede the peak, and DomainError
/// for fewer than three points or a degenerate range.
template <typename Scalar>
BasicBurstMarkers<Scalar> detect_markers(const BasicCumulativeCurve<Scalar>& curve) {
  const auto n = curve.size();
  if (n < 3) throw DomainError("marker detection needs at least three points");
  const auto& x = curve.x();
  const auto& y = curve.y();
  const Scalar dx = x(n - 1) - x(0);
  const Scalar dy = y(n - 1) - y(0);
  if (!(dx > Scalar(0)) || !(dy > Scalar(0))) {
    throw NoBurstError("curve endpoints coincide in x or y");
  }
  // With both axes normalized, L is the diagonal; the signed offset y' - x'
  // is proportional to the perpendicular distance.
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> offset =
      (y.array() - y(0)) / dy - (x.array() - x(0)) / dx;

  Eigen::Index above = -1, below = -1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (offset(k) > Scalar(kLineTolerance)) {
      if (above < 0 || offset(k) > offset(above)) above = k;
    } else if (offset(k) < -Scalar(kLineTolerance)) {
      if (below < 0 || offset(k) < offset(below)) below = k;
    }
  }
  if (above < 0) throw NoBurstError("no point above the reference line");
  if (below < 0) throw NoBurstError("no point below the reference line");
  if (below >= above) throw NoBurstError("awakening does not precede peak");

  BasicBurstMarkers<Scalar> m;
  m.awakening = below;
  m.peak = above;
  m.x_a = x(below);
  m.y_a = y(below);
  m.x_p = x(above);
  m.y_p = y(above);
  return m;
}

template <typename Scalar>
struct BasicSpeedMetrics {
  Scalar time_difference{};   ///< 1 / (x_P - x_A)
  Scalar slope{};             ///< (y_P - y_A) / (x_P - x_A)
  Scalar normalized_slope{};  ///< slope / y_P
};

using SpeedMetrics = BasicSpeedMetrics<double>;

template <typename Scalar>
BasicSpeedMetrics<Scalar> speed_metrics(const BasicBurstMarkers<Scalar>& m) {
  const Scalar span = m.x_p - m.x_a;
  if (!(span > Scalar(0))) throw DomainError("peak must follow awakening");
  if (!(m.y_p > Scalar(0))) throw DomainError("peak volume must be positive");
  BasicSpeedMetrics<Scalar> s;
  s.time_difference = Scalar(1) / span;
  s.slope = (m.y_p - m.y_a) / span;
  s.normalized_slope = s.slope / m.y_p;
  return s;
}

/// Points from awakening to peak inclusive.
template <typename Scalar>
BasicCumulativeCurve<Scalar> burst_segment(const BasicCumulativeCurve<Scalar>& curve,
                                           const BasicBurstMarkers<Scalar>& m) {
  const auto len = m.peak - m.awakening + 1;
  return BasicCumulativeCurve<Scalar>(curve.x().segment(m.awakening, len),
                                      curve.y().segment(m.awakening, len));
}

/// Divides y by the peak volume so the peak maps to 1.
template <typename Scalar>
BasicCumulativeCurve<Scalar> normalize_by_peak(const BasicCumulativeCurve<Scalar>& curve,
                                               const BasicBurstMarkers<Scalar>& m) {
  if (!(m.y_p > Scalar(0))) throw DomainError("peak volume must be positive");
  return BasicCumulativeCurve<Scalar>(curve.x(), curve.y() / m.y_p);
}

// ---------------------------------------------------------------------------
// Events

/// Hourly per-emotion tweet counts of one burst event. Row k holds hour
/// `first_hour + k`; columns follow (anger, disgust, joy, sadness).
struct EventRecord {
  std::string id;
  std::int64_t first_hour = 0;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 4> hourly;

  std::int64_t total() const { return hourly.sum(); }
  Eigen::Matrix<std::int64_t, 1, 4> totals() const { return hourly.colwise().sum(); }
};

inline constexpr double kDominantShare = 0.6;

/// The emotion holding strictly more than `share` of the event's emotional
/// tweets, or nullopt. Throws UndefinedError for an event without any.
std::optional<Emotion> dominant_emotion(const EventRecord& event, double share = kDominantShare);

enum class CurveFilter { all, dominant };

/// Hourly cumulative emotional tweet count. With CurveFilter::dominant only
/// the dominant emotion's tweets are accumulated (UndefinedError when the
/// event has none).
CumulativeCurve event_curve(const EventRecord& event, CurveFilter filter = CurveFilter::all,
                            double share = kDominantShare);

/// Reads `event_id,hour_index,anger,disgust,joy,sadness`. Missing hours
/// inside an event's span are zero-filled; repeated hours are summed.
/// Events keep their order of first appearance.
std::vector<EventRecord> load_events(std::istream& in);
std::vector<EventRecord> load_events_file(const std::string& path);
void write_events(std::ostream& out, const std::vector<EventRecord>& events);

}  // namespace emoflow
