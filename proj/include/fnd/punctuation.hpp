#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fnd {

// Category names: AllPunc, QMark, Exclam, Period, Comma, Dash, Colon,
// SemiC, Quote, Apostro, Parenth. Values are percentages per word:
// 100 * character count / max(1, word count). AllPunc counts the union of
// the other categories. Throws UnknownCategory.
std::vector<double> punctuation_features(std::string_view text,
                                         std::span<const std::string> selected);

const std::vector<std::string>& punctuation_category_names();

}  // namespace fnd
