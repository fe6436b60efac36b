#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace fnd {

using TokenList = std::vector<std::string>;

// Bijection between n-gram terms and dense column indices [0, size).
// Indices follow lexicographic term order, so a fitted vocabulary is
// fully determined by its term set.
class Vocabulary {
 public:
  Vocabulary() = default;
  // terms must be unique; they are sorted internally.
  explicit Vocabulary(std::vector<std::string> terms);

  std::size_t size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }
  // -1 when the term is unknown.
  std::int64_t index_of(const std::string& term) const;
  const std::string& term_at(std::uint32_t index) const {
    return terms_[index];
  }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Space-joined n-grams of orders [lo, hi] in source order.
std::vector<std::string> extract_ngrams(const TokenList& tokens, int lo,
                                        int hi);

// Terms occurring in at least min_df documents; throws EmptyVocabulary if
// nothing survives.
Vocabulary fit_vocabulary(std::span<const TokenList> corpus, int ngram_lo,
                          int ngram_hi, std::size_t min_df);

}  // namespace fnd
