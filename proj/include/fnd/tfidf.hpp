#pragma once

#include <span>
#include <vector>

#include "fnd/sparse.hpp"
#include "fnd/vocabulary.hpp"

namespace fnd {

// TF-IDF with smooth idf: idf_j = ln((1+N)/(1+df_j)) + 1. Transforms use
// raw term counts times idf, then L2-normalize the document vector.
struct TfidfModel {
  Vocabulary vocabulary;
  std::vector<double> idf;
  int ngram_lo = 1;
  int ngram_hi = 1;
};

TfidfModel tfidf_fit(std::span<const TokenList> corpus, Vocabulary vocabulary,
                     int ngram_lo, int ngram_hi);

// Unknown n-grams are ignored; an all-unknown document maps to the zero
// vector.
SparseVector tfidf_transform(const TokenList& tokens, const TfidfModel& model);

}  // namespace fnd
