#pragma once

#include <cstddef>
#include <string_view>

namespace fnd {

// Maximal [aeiouy] runs, minus one for a trailing silent 'e' (kept after
// consonant+"le"), minimum 1. Expects a lowercase word.
std::size_t count_syllables(std::string_view word);

// Segments delimited by runs of [.!?] followed by whitespace or the end of
// text; blank segments are not counted; at least 1 for non-blank text.
std::size_t count_sentences(std::string_view text);

struct ReadabilityScores {
  double flesch_reading_ease = 0.0;
  double ari = 0.0;
  double flesch_kincaid_grade = 0.0;
  double coleman_liau = 0.0;
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
  std::size_t letters = 0;
};

// Words are whitespace-delimited tokens containing at least one
// alphanumeric character; letters are alphabetic characters. Throws
// NoWords when the text has no words.
ReadabilityScores readability_scores(std::string_view text);

// Word count under the same rule as readability_scores (0 for wordless
// text); shared with the punctuation features' normalization.
std::size_t count_words(std::string_view text);

}  // namespace fnd
