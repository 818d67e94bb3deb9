#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Core>

namespace emoflow {

/// Four emotional categories plus a neutral label. The order of the
/// enumerators is the canonical tie-break order used throughout.
enum class Emotion : std::uint8_t { anger = 0, disgust = 1, joy = 2, sadness = 3, none = 4 };

inline constexpr std::size_t kNumEmotions = 4;
inline constexpr std::array<Emotion, kNumEmotions> kEmotions = {Emotion::anger, Emotion::disgust,
                                                                 Emotion::joy, Emotion::sadness};

constexpr std::size_t index(Emotion e) noexcept { return static_cast<std::size_t>(e); }
constexpr bool is_emotional(Emotion e) noexcept { return e != Emotion::none; }

constexpr std::string_view name(Emotion e) noexcept {
  switch (e) {
    case Emotion::anger: return "anger";
    case Emotion::disgust: return "disgust";
    case Emotion::joy: return "joy";
    case Emotion::sadness: return "sadness";
    case Emotion::none: return "none";
  }
  return "none";
}

/// Exact, lower-case token match. Returns nullopt for anything else.
constexpr std::optional<Emotion> parse_emotion(std::string_view s) noexcept {
  for (auto e : {Emotion::anger, Emotion::disgust, Emotion::joy, Emotion::sadness, Emotion::none}) {
    if (name(e) == s) return e;
  }
  return std::nullopt;
}

/// Probability vector over (anger, disgust, joy, sadness).
template <typename Scalar>
using EmotionVector = Eigen::Matrix<Scalar, 4, 1>;

using EmotionDistribution = EmotionVector<double>;

}  // namespace emoflow
