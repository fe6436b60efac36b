#include "fnd/textprep.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>

#include "fnd/errors.hpp"
#include "fnd/porter2.hpp"

namespace fnd {

namespace {

bool is_space(char c) { return std::isspace((unsigned char)c) != 0; }
bool is_digit(char c) { return std::isdigit((unsigned char)c) != 0; }
bool is_alnum(char c) { return std::isalnum((unsigned char)c) != 0; }

// Non-ASCII bytes count as word characters so that UTF-8 sequences stay
// inside word tokens.
bool is_word_char(char c) {
  return is_alnum(c) || c == '_' || static_cast<unsigned char>(c) >= 0x80;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x110000) {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Decodes &amp; &lt; &gt; &quot; and numeric (&#dd; / &#xhh;) entities.
// Runs on lowercased text, so only lowercase names need to match.
std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out += s[i++];
      continue;
    }
    std::size_t semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 10) {
      out += s[i++];
      continue;
    }
    std::string_view body = s.substr(i + 1, semi - i - 1);
    if (body == "amp") {
      out += '&';
    } else if (body == "lt") {
      out += '<';
    } else if (body == "gt") {
      out += '>';
    } else if (body == "quot") {
      out += '"';
    } else if (body.size() >= 2 && body[0] == '#') {
      bool hex = body[1] == 'x';
      std::string_view digits = body.substr(hex ? 2 : 1);
      unsigned long cp = 0;
      bool ok = !digits.empty();
      for (char c : digits) {
        int d;
        if (is_digit(c)) {
          d = c - '0';
        } else if (hex && c >= 'a' && c <= 'f') {
          d = c - 'a' + 10;
        } else {
          ok = false;
          break;
        }
        cp = cp * (hex ? 16 : 10) + d;
        if (cp > 0x10FFFF) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        out += s[i++];
        continue;
      }
      append_utf8(out, cp);
    } else {
      out += s[i++];
      continue;
    }
    i = semi + 1;
  }
  return out;
}

bool matches_at(std::string_view s, std::size_t i, std::string_view pat) {
  return s.compare(i, pat.size(), pat) == 0;
}

std::size_t link_length(std::string_view s, std::size_t i) {
  std::size_t prefix = 0;
  if (matches_at(s, i, "https://")) {
    prefix = 8;
  } else if (matches_at(s, i, "http://")) {
    prefix = 7;
  } else if (matches_at(s, i, "www.")) {
    prefix = 4;
  }
  if (prefix == 0 || i + prefix >= s.size() || is_space(s[i + prefix]))
    return 0;  // needs at least one non-space character after the prefix
  std::size_t j = i + prefix;
  while (j < s.size() && !is_space(s[j])) ++j;
  return j - i;
}

std::string strip_links(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t len = link_length(s, i);
    if (len > 0) {
      i += len;
    } else {
      out += s[i++];
    }
  }
  return out;
}

std::string strip_replies(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      out += s[i++];
      continue;
    }
    std::size_t b = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (s[b] != '@') out.append(s.substr(b, i - b));
  }
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      out += c;
    }
  }
  return out;
}

// Emoticons recognized by the tweet tokenizer. Both original and lowercased
// forms appear because tokenization usually runs after lowercasing.
constexpr std::array<std::string_view, 69> kEmoticons = {
    ":-)))", ":-))", ":)))", ":))",  ":-)", ":)",  ":-]", ":]",  ":-}", ":}",
    ":o)",   ":c)",  ":^)",  "=)",   "(:",  "(-:", ":-D", ":-d", ":D",  ":d",
    "=D",    "=d",   "xD",   "xd",   "XD",  "8-)", "8)",  ":'-)", ":')",
    ":-(",   ":((",  ":(",   ":-[",  ":[",  ":-<", ":<",  ":-{", ":{",  "):",
    ")-:",   "D:",   "d:",   ":'-(", ":'(", ":-/", ":/",  ":-\\", ":\\",
    ":-|",   ":|",   ":-o",  ":o",   ":-O", ":O",  ":-0", ":-*", ":*",  ";-)",
    ";)",    ";-]",  ";]",   ";-D",  ";d",  ":-P", ":-p", ":P",  ":p",  "<3",
    "</3"};

std::size_t emoticon_length(std::string_view s, std::size_t i) {
  std::size_t best = 0;
  for (std::string_view e : kEmoticons) {
    if (e.size() > best && matches_at(s, i, e)) best = e.size();
  }
  return best;
}

std::size_t mention_or_hashtag_length(std::string_view s, std::size_t i) {
  if (s[i] != '@' && s[i] != '#') return 0;
  std::size_t j = i + 1;
  while (j < s.size() && (is_alnum(s[j]) || s[j] == '_')) ++j;
  return j > i + 1 ? j - i : 0;
}

// Word: alphanumeric runs joined by single internal apostrophes or hyphens
// ("don't", "covid-19"). Digit sequences are a special case of this rule.
std::size_t word_length(std::string_view s, std::size_t i) {
  if (!is_word_char(s[i])) return 0;
  std::size_t j = i;
  while (j < s.size() && is_word_char(s[j])) ++j;
  while (j < s.size() && (s[j] == '\'' || s[j] == '-') && j + 1 < s.size() &&
         is_word_char(s[j + 1])) {
    ++j;
    while (j < s.size() && is_word_char(s[j])) ++j;
  }
  return j - i;
}

std::vector<std::string> tokenize_tweet(std::string_view s) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    std::size_t len = link_length(s, i);
    if (len == 0) len = mention_or_hashtag_length(s, i);
    if (len == 0) len = emoticon_length(s, i);
    if (len == 0) len = word_length(s, i);
    if (len == 0) len = 1;  // single other symbol
    tokens.emplace_back(s.substr(i, len));
    i += len;
  }
  return tokens;
}

std::vector<std::string> tokenize_wordpunct(std::string_view s) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    std::size_t b = i;
    if (is_word_char(s[i])) {
      while (i < s.size() && is_word_char(s[i])) ++i;
    } else {
      while (i < s.size() && !is_word_char(s[i]) && !is_space(s[i])) ++i;
    }
    tokens.emplace_back(s.substr(b, i - b));
  }
  return tokens;
}

}  // namespace

std::string normalize(std::string_view text, const PrepConfig& config) {
  std::string s(text);
  for (char& c : s) c = static_cast<char>(std::tolower((unsigned char)c));
  s = decode_entities(s);
  if (config.remove_links) s = strip_links(s);
  if (config.remove_replies) s = strip_replies(s);
  return collapse_whitespace(s);
}

std::vector<std::string> tokenize(std::string_view text, TokenizerKind kind) {
  return kind == TokenizerKind::Tweet ? tokenize_tweet(text)
                                      : tokenize_wordpunct(text);
}

Stoplist load_stoplist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword file: " + path.string());
  Stoplist list;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string word;
    for (char c : line)
      if (!is_space(c)) word += c;
    if (!word.empty()) list.insert(word);
  }
  return list;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const Stoplist& stoplist) {
  std::erase_if(tokens, [&](const std::string& t) {
    std::string lower = t;
    for (char& c : lower) c = static_cast<char>(std::tolower((unsigned char)c));
    return stoplist.count(lower) > 0;
  });
  return tokens;
}

LemmaLexicon load_lemma_lexicon(const std::filesystem::path& exceptions_tsv,
                                const std::filesystem::path& words_file) {
  LemmaLexicon lex;
  {
    std::ifstream in(exceptions_tsv);
    if (!in)
      throw IoError("cannot open lemma exceptions: " + exceptions_tsv.string());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos) continue;
      lex.exceptions.emplace(line.substr(0, tab), line.substr(tab + 1));
    }
  }
  {
    std::ifstream in(words_file);
    if (!in) throw IoError("cannot open word list: " + words_file.string());
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::string word;
      for (char c : line)
        if (!is_space(c)) word += c;
      if (!word.empty()) lex.valid_words.insert(word);
    }
  }
  // every exception target is itself a dictionary word
  for (const auto& [surface, lemma] : lex.exceptions)
    lex.valid_words.insert(lemma);
  return lex;
}

std::string lemmatize(const std::string& word, const LemmaLexicon& lexicon) {
  if (auto it = lexicon.exceptions.find(word);
      it != lexicon.exceptions.end()) {
    return it->second;
  }
  auto valid = [&](const std::string& w) {
    return !w.empty() && lexicon.valid_words.count(w) > 0;
  };
  auto ends_with = [&](std::string_view suf) {
    return word.size() > suf.size() &&
           word.compare(word.size() - suf.size(), suf.size(), suf) == 0;
  };
  auto stem_of = [&](std::size_t strip, std::string_view add = "") {
    std::string s = word.substr(0, word.size() - strip);
    s += add;
    return s;
  };

  if (ends_with("s")) {
    if (auto c = stem_of(1); valid(c)) return c;
  }
  if (ends_with("es")) {
    if (auto c = stem_of(2); valid(c)) return c;
  }
  if (ends_with("ies")) {
    if (auto c = stem_of(3, "y"); valid(c)) return c;
  }
  if (ends_with("ed")) {
    if (auto c = stem_of(2); valid(c)) return c;
    if (auto c = stem_of(2, "e"); valid(c)) return c;
  }
  if (ends_with("ing")) {
    if (auto c = stem_of(3); valid(c)) return c;
    if (auto c = stem_of(3, "e"); valid(c)) return c;
  }
  return word;
}

std::vector<std::string> preprocess(std::string_view text,
                                    const PrepConfig& config,
                                    const Stoplist& stoplist,
                                    const LemmaLexicon& lexicon) {
  std::string norm = normalize(text, config);
  std::vector<std::string> tokens = tokenize(norm, config.tokenizer);
  if (config.remove_stopwords)
    tokens = remove_stopwords(std::move(tokens), stoplist);
  switch (config.stem_or_lemma) {
    case StemOrLemma::Stem:
      for (auto& t : tokens) t = porter2_stem(t);
      break;
    case StemOrLemma::Lemmatize:
      for (auto& t : tokens) t = lemmatize(t, lexicon);
      break;
    case StemOrLemma::None:
      break;
  }
  return tokens;
}

}  // namespace fnd
