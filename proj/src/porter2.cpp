#include "fnd/porter2.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

namespace fnd {

namespace {

// 'y' is sometimes a vowel; occurrences acting as consonants are marked 'Y'
// while the algorithm runs and restored at the end.
bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool ends_with(const std::string& w, std::string_view suf) {
  return w.size() >= suf.size() &&
         w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

bool ends_with_double(const std::string& w) {
  static constexpr std::array<std::string_view, 9> kDoubles = {
      "bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt"};
  return std::any_of(kDoubles.begin(), kDoubles.end(),
                     [&](std::string_view d) { return ends_with(w, d); });
}

bool valid_li_ending(char c) {
  return c == 'c' || c == 'd' || c == 'e' || c == 'g' || c == 'h' ||
         c == 'k' || c == 'm' || c == 'n' || c == 'r' || c == 't';
}

// A short syllable: a vowel followed by a non-vowel other than w, x or Y,
// preceded by a non-vowel; or a vowel at the start of the word followed by
// a non-vowel.
bool ends_short_syllable(const std::string& w) {
  const std::size_t n = w.size();
  if (n == 2) return is_vowel(w[0]) && !is_vowel(w[1]);
  if (n >= 3) {
    char a = w[n - 3], b = w[n - 2], c = w[n - 1];
    return !is_vowel(a) && is_vowel(b) && !is_vowel(c) && c != 'w' &&
           c != 'x' && c != 'Y';
  }
  return false;
}

std::size_t region_start(const std::string& w, std::size_t begin) {
  for (std::size_t i = begin; i + 1 < w.size(); ++i) {
    if (is_vowel(w[i]) && !is_vowel(w[i + 1])) return i + 2;
  }
  return w.size();
}

std::size_t r1_start(const std::string& w) {
  for (std::string_view p : {"gener", "commun", "arsen"}) {
    if (w.compare(0, p.size(), p) == 0) return p.size();
  }
  return region_start(w, 0);
}

bool contains_vowel(const std::string& w, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end && i < w.size(); ++i) {
    if (is_vowel(w[i])) return true;
  }
  return false;
}

const std::unordered_map<std::string_view, std::string_view> kException1 = {
    {"skis", "ski"},     {"skies", "sky"},   {"dying", "die"},
    {"lying", "lie"},    {"tying", "tie"},   {"idly", "idl"},
    {"gently", "gentl"}, {"ugly", "ugli"},   {"early", "earli"},
    {"only", "onli"},    {"singly", "singl"}, {"sky", "sky"},
    {"news", "news"},    {"howe", "howe"},   {"atlas", "atlas"},
    {"cosmos", "cosmos"}, {"bias", "bias"},  {"andes", "andes"},
};

const std::unordered_set<std::string_view> kException2 = {
    "inning", "outing", "canning", "herring",
    "earring", "proceed", "exceed", "succeed"};

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

std::string stem_impl(std::string w) {
  if (!w.empty() && w[0] == '\'') w.erase(0, 1);
  if (w.size() <= 2) return w;
  if (auto it = kException1.find(w); it != kException1.end())
    return std::string(it->second);

  // mark consonant-y
  if (w[0] == 'y') w[0] = 'Y';
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == 'y' && is_vowel(w[i - 1])) w[i] = 'Y';
  }

  const std::size_t r1 = r1_start(w);
  const std::size_t r2 = region_start(w, r1);
  auto in_r1 = [&](std::size_t suffix_len) { return w.size() - suffix_len >= r1; };
  auto in_r2 = [&](std::size_t suffix_len) { return w.size() - suffix_len >= r2; };

  // Step 0: longest of ', 's, 's'
  for (std::string_view suf : {"'s'", "'s", "'"}) {
    if (ends_with(w, suf)) {
      w.erase(w.size() - suf.size());
      break;
    }
  }

  // Step 1a
  if (ends_with(w, "sses")) {
    w.erase(w.size() - 2);
  } else if (ends_with(w, "ied") || ends_with(w, "ies")) {
    w.erase(w.size() - (w.size() - 3 > 1 ? 2 : 1));
  } else if (ends_with(w, "us") || ends_with(w, "ss")) {
    // leave unchanged
  } else if (ends_with(w, "s")) {
    // delete if some vowel precedes the letter before the s
    if (contains_vowel(w, 0, w.size() - 2)) w.pop_back();
  }

  if (kException2.count(w)) return w;

  // Step 1b
  {
    std::string_view matched;
    for (std::string_view suf :
         {"ingly", "eedly", "edly", "ing", "eed", "ed"}) {
      if (ends_with(w, suf)) {
        matched = suf;
        break;
      }
    }
    if (matched == "eed" || matched == "eedly") {
      if (in_r1(matched.size()))
        w.replace(w.size() - matched.size(), matched.size(), "ee");
    } else if (!matched.empty()) {
      if (contains_vowel(w, 0, w.size() - matched.size())) {
        w.erase(w.size() - matched.size());
        if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
          w += 'e';
        } else if (ends_with_double(w)) {
          w.pop_back();
        } else if (ends_short_syllable(w) && r1 >= w.size()) {
          w += 'e';
        }
      }
    }
  }

  // Step 1c: y/Y -> i after a non-vowel that is not the first letter
  if (w.size() >= 3 && (w.back() == 'y' || w.back() == 'Y') &&
      !is_vowel(w[w.size() - 2])) {
    w.back() = 'i';
  }

  // Step 2 (longest suffix, in R1)
  {
    static constexpr std::array<Rule, 24> kStep2 = {{
        {"ational", "ate"}, {"ization", "ize"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"iveness", "ive"}, {"tional", "tion"},
        {"biliti", "ble"},  {"lessli", "less"}, {"entli", "ent"},
        {"ation", "ate"},   {"alism", "al"},    {"aliti", "al"},
        {"ousli", "ous"},   {"iviti", "ive"},   {"fulli", "ful"},
        {"enci", "ence"},   {"anci", "ance"},   {"abli", "able"},
        {"izer", "ize"},    {"ator", "ate"},    {"alli", "al"},
        {"bli", "ble"},     {"ogi", ""},        {"li", ""},
    }};
    for (const Rule& rule : kStep2) {
      if (!ends_with(w, rule.suffix)) continue;
      if (in_r1(rule.suffix.size())) {
        if (rule.suffix == "ogi") {
          if (w.size() > 3 && w[w.size() - 4] == 'l') w.pop_back();
        } else if (rule.suffix == "li") {
          if (w.size() > 2 && valid_li_ending(w[w.size() - 3]))
            w.erase(w.size() - 2);
        } else {
          w.replace(w.size() - rule.suffix.size(), rule.suffix.size(),
                    rule.replacement);
        }
      }
      break;
    }
  }

  // Step 3 (longest suffix, in R1; "ative" additionally requires R2)
  {
    static constexpr std::array<Rule, 9> kStep3 = {{
        {"ational", "ate"}, {"tional", "tion"}, {"alize", "al"},
        {"icate", "ic"},    {"iciti", "ic"},    {"ative", ""},
        {"ical", "ic"},     {"ness", ""},       {"ful", ""},
    }};
    for (const Rule& rule : kStep3) {
      if (!ends_with(w, rule.suffix)) continue;
      if (in_r1(rule.suffix.size())) {
        if (rule.suffix == "ative") {
          if (in_r2(rule.suffix.size())) w.erase(w.size() - 5);
        } else {
          w.replace(w.size() - rule.suffix.size(), rule.suffix.size(),
                    rule.replacement);
        }
      }
      break;
    }
  }

  // Step 4 (longest suffix, in R2)
  {
    static constexpr std::array<std::string_view, 18> kStep4 = {
        "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ism",
        "ate",   "iti",  "ous",  "ive",  "ize",  "ion",  "al",  "er",  "ic"};
    for (std::string_view suf : kStep4) {
      if (!ends_with(w, suf)) continue;
      if (in_r2(suf.size())) {
        if (suf == "ion") {
          if (w.size() > 3 && (w[w.size() - 4] == 's' || w[w.size() - 4] == 't'))
            w.erase(w.size() - 3);
        } else {
          w.erase(w.size() - suf.size());
        }
      }
      break;
    }
  }

  // Step 5
  if (ends_with(w, "e")) {
    if (in_r2(1) || (in_r1(1) && !ends_short_syllable(w.substr(0, w.size() - 1))))
      w.pop_back();
  } else if (ends_with(w, "l")) {
    if (in_r2(1) && w.size() > 1 && w[w.size() - 2] == 'l') w.pop_back();
  }

  for (char& c : w)
    if (c == 'Y') c = 'y';
  return w;
}

}  // namespace

std::string porter2_stem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  bool conforming = std::all_of(word.begin(), word.end(), [](char c) {
    return c >= 'a' && c <= 'z';
  });
  if (!conforming) return std::string(word);
  return stem_impl(std::string(word));
}

}  // namespace fnd
