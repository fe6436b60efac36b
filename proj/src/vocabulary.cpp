#include "fnd/vocabulary.hpp"

#include <algorithm>

#include "fnd/errors.hpp"

namespace fnd {

Vocabulary::Vocabulary(std::vector<std::string> terms)
    : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
  index_.reserve(terms_.size());
  for (std::uint32_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
}

std::int64_t Vocabulary::index_of(const std::string& term) const {
  auto it = index_.find(term);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::vector<std::string> extract_ngrams(const TokenList& tokens, int lo,
                                        int hi) {
  std::vector<std::string> out;
  for (int n = lo; n <= hi; ++n) {
    if (n <= 0 || tokens.size() < static_cast<std::size_t>(n)) continue;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string gram = tokens[i];
      for (int k = 1; k < n; ++k) {
        gram += ' ';
        gram += tokens[i + k];
      }
      out.push_back(std::move(gram));
    }
  }
  return out;
}

Vocabulary fit_vocabulary(std::span<const TokenList> corpus, int ngram_lo,
                          int ngram_hi, std::size_t min_df) {
  std::unordered_map<std::string, std::size_t> df;
  for (const TokenList& doc : corpus) {
    auto grams = extract_ngrams(doc, ngram_lo, ngram_hi);
    std::sort(grams.begin(), grams.end());
    grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
    for (auto& g : grams) ++df[std::move(g)];
  }
  std::vector<std::string> terms;
  terms.reserve(df.size());
  for (auto& [term, count] : df) {
    if (count >= min_df) terms.push_back(term);
  }
  if (terms.empty()) throw EmptyVocabularyError();
  return Vocabulary(std::move(terms));
}

}  // namespace fnd
