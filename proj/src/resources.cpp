#include "fnd/resources.hpp"

namespace fnd {

Resources load_resources(const ResourcePaths& paths) {
  Resources r;
  r.stoplist = load_stoplist(paths.stopwords);
  r.lemmas = load_lemma_lexicon(paths.lemma_exceptions, paths.lemma_words);
  r.lexicon = LexiconDict::load(paths.lexicon);
  return r;
}

}  // namespace fnd
