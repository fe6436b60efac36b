#pragma once

#include <filesystem>

#include "fnd/lexicon.hpp"
#include "fnd/textprep.hpp"

namespace fnd {

// Shared, immutable inputs to preprocessing and feature extraction:
// stopword list, lemma lexicon and category lexicon.
struct Resources {
  Stoplist stoplist;
  LemmaLexicon lemmas;
  LexiconDict lexicon;
};

struct ResourcePaths {
  std::filesystem::path stopwords = "data/stopwords_en.txt";
  std::filesystem::path lemma_exceptions = "data/lemma_exceptions.tsv";
  std::filesystem::path lemma_words = "data/lemma_words.txt";
  std::filesystem::path lexicon = "data/liwc_open.dic";
};

Resources load_resources(const ResourcePaths& paths);

}  // namespace fnd
