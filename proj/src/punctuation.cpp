#include "fnd/punctuation.hpp"

#include <algorithm>
#include <array>

#include "fnd/errors.hpp"
#include "fnd/readability.hpp"

namespace fnd {

namespace {

struct Category {
  std::string_view name;
  std::string_view chars;
};

constexpr std::array<Category, 10> kCategories = {{
    {"QMark", "?"},
    {"Exclam", "!"},
    {"Period", "."},
    {"Comma", ","},
    {"Dash", "-"},
    {"Colon", ":"},
    {"SemiC", ";"},
    {"Quote", "\""},
    {"Apostro", "'"},
    {"Parenth", "()"},
}};

std::size_t count_chars(std::string_view text, std::string_view chars) {
  std::size_t n = 0;
  for (char c : text)
    if (chars.find(c) != std::string_view::npos) ++n;
  return n;
}

}  // namespace

const std::vector<std::string>& punctuation_category_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out{"AllPunc"};
    for (const auto& c : kCategories) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

std::vector<double> punctuation_features(
    std::string_view text, std::span<const std::string> selected) {
  const double denom = std::max<std::size_t>(1, count_words(text));
  std::vector<double> out;
  out.reserve(selected.size());
  for (const auto& name : selected) {
    std::size_t count = 0;
    if (name == "AllPunc") {
      for (const auto& cat : kCategories) count += count_chars(text, cat.chars);
    } else {
      auto it = std::find_if(kCategories.begin(), kCategories.end(),
                             [&](const Category& c) { return c.name == name; });
      if (it == kCategories.end()) throw UnknownCategoryError(name);
      count = count_chars(text, it->chars);
    }
    out.push_back(100.0 * double(count) / denom);
  }
  return out;
}

}  // namespace fnd
