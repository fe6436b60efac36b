#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace fnd {

enum class TokenizerKind { Tweet, WordPunct };
enum class StemOrLemma { None, Stem, Lemmatize };

// Lowercasing and XML-entity replacement are always applied and have no
// flag; the remaining steps are optional.
struct PrepConfig {
  bool remove_stopwords = false;
  bool remove_links = false;
  bool remove_replies = false;
  StemOrLemma stem_or_lemma = StemOrLemma::None;
  TokenizerKind tokenizer = TokenizerKind::Tweet;
};

// Lowercases, decodes &amp;/&lt;/&gt;/&quot; and numeric &#NN;/&#xNN;
// entities, optionally strips links (https?://... and www....) and
// @-prefixed tokens, and collapses whitespace runs to single spaces.
std::string normalize(std::string_view text, const PrepConfig& config);

std::vector<std::string> tokenize(std::string_view text, TokenizerKind kind);

using Stoplist = std::unordered_set<std::string>;

// One lowercase word per line; '#' starts a comment.
Stoplist load_stoplist(const std::filesystem::path& path);

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const Stoplist& stoplist);

struct LemmaLexicon {
  std::unordered_map<std::string, std::string> exceptions;
  std::unordered_set<std::string> valid_words;
};

LemmaLexicon load_lemma_lexicon(const std::filesystem::path& exceptions_tsv,
                                const std::filesystem::path& words_file);

// Exceptions first, then suffix detachment (s, es, ies->y, ed->-/e,
// ing->-/e) gated by the valid-word list, identity otherwise.
std::string lemmatize(const std::string& word, const LemmaLexicon& lexicon);

// Full pipeline: normalize -> tokenize -> stopword removal -> stem/lemma.
std::vector<std::string> preprocess(std::string_view text,
                                    const PrepConfig& config,
                                    const Stoplist& stoplist,
                                    const LemmaLexicon& lexicon);

}  // namespace fnd
