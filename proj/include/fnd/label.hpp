#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fnd {

// Class labels in fixed order: Fake first, Real second. Ties in voting
// break toward Fake; linear models encode Real as +1 and Fake as -1.
enum class Label : std::uint8_t { Fake = 0, Real = 1 };

inline constexpr std::array<Label, 2> kLabels = {Label::Fake, Label::Real};

inline constexpr int label_sign(Label l) {
  return l == Label::Real ? +1 : -1;
}

inline constexpr std::string_view to_string(Label l) {
  return l == Label::Real ? "real" : "fake";
}

// Case-insensitive "real"/"fake"; anything else is nullopt.
std::optional<Label> parse_label(std::string_view s);

}  // namespace fnd
