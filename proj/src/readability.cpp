#include "fnd/readability.hpp"

#include <cctype>
#include <string>

#include "fnd/errors.hpp"

namespace fnd {

namespace {

bool is_vowel_letter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_space(char c) { return std::isspace((unsigned char)c) != 0; }

}  // namespace

std::size_t count_syllables(std::string_view word) {
  std::size_t runs = 0;
  bool in_run = false;
  for (char c : word) {
    bool v = is_vowel_letter(c);
    if (v && !in_run) ++runs;
    in_run = v;
  }
  const std::size_t n = word.size();
  if (runs > 1 && n >= 2 && word[n - 1] == 'e') {
    // final silent e, unless the word ends in consonant + "le"
    bool le_ending = n >= 3 && word[n - 2] == 'l' &&
                     !is_vowel_letter(word[n - 3]);
    if (!le_ending) --runs;
  }
  return runs == 0 ? 1 : runs;
}

std::size_t count_sentences(std::string_view text) {
  std::size_t count = 0;
  bool blank = true;        // current segment so far has only whitespace
  bool any_content = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '.' || c == '!' || c == '?') {
      std::size_t j = i;
      while (j < text.size() &&
             (text[j] == '.' || text[j] == '!' || text[j] == '?'))
        ++j;
      any_content = true;
      if (j >= text.size() || is_space(text[j])) {
        if (!blank) ++count;
        blank = true;
        i = j;
        continue;
      }
      // terminator run inside a token ("3.5"); treat as segment content
      blank = false;
      i = j;
      continue;
    }
    if (!is_space(c)) {
      blank = false;
      any_content = true;
    }
    ++i;
  }
  if (!blank) ++count;
  if (count == 0 && any_content) count = 1;
  return count;
}

std::size_t count_words(std::string_view text) {
  std::size_t words = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    bool has_alnum = false;
    while (i < text.size() && !is_space(text[i])) {
      if (std::isalnum((unsigned char)text[i])) has_alnum = true;
      ++i;
    }
    if (has_alnum) ++words;
  }
  return words;
}

ReadabilityScores readability_scores(std::string_view text) {
  ReadabilityScores r;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t b = i;
    bool has_alnum = false;
    while (i < text.size() && !is_space(text[i])) {
      if (std::isalnum((unsigned char)text[i])) has_alnum = true;
      ++i;
    }
    if (i == b || !has_alnum) continue;
    ++r.words;
    std::string word(text.substr(b, i - b));
    for (char& c : word) c = static_cast<char>(std::tolower((unsigned char)c));
    r.syllables += count_syllables(word);
  }
  if (r.words == 0) throw NoWordsError();
  for (char c : text)
    if (std::isalpha((unsigned char)c)) ++r.letters;
  r.sentences = count_sentences(text);
  if (r.sentences == 0) r.sentences = 1;

  const double W = double(r.words);
  const double S = double(r.sentences);
  const double Y = double(r.syllables);
  const double L = double(r.letters);
  r.flesch_reading_ease = 206.835 - 1.015 * (W / S) - 84.6 * (Y / W);
  r.ari = 4.71 * (L / W) + 0.5 * (W / S) - 21.43;
  r.flesch_kincaid_grade = 0.39 * (W / S) + 11.8 * (Y / W) - 15.59;
  r.coleman_liau =
      0.0588 * (100.0 * L / W) - 0.296 * (100.0 * S / W) - 15.8;
  return r;
}

}  // namespace fnd
