#include "fnd/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fnd/errors.hpp"

namespace fnd {

double SparseVector::l2_norm() const {
  double sq = 0.0;
  for (double v : values) sq += v * v;
  return std::sqrt(sq);
}

double SparseVector::at(std::uint32_t index) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), index);
  if (it == indices.end() || *it != index) return 0.0;
  return values[static_cast<std::size_t>(it - indices.begin())];
}

std::vector<double> SparseVector::to_dense() const {
  std::vector<double> out(dim, 0.0);
  for (std::size_t k = 0; k < indices.size(); ++k) out[indices[k]] = values[k];
  return out;
}

TfidfModel tfidf_fit(std::span<const TokenList> corpus, Vocabulary vocabulary,
                     int ngram_lo, int ngram_hi) {
  const std::size_t n_docs = corpus.size();
  std::vector<std::size_t> df(vocabulary.size(), 0);
  for (const TokenList& doc : corpus) {
    auto grams = extract_ngrams(doc, ngram_lo, ngram_hi);
    std::sort(grams.begin(), grams.end());
    grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
    for (const auto& g : grams) {
      auto j = vocabulary.index_of(g);
      if (j >= 0) ++df[static_cast<std::size_t>(j)];
    }
  }
  TfidfModel model;
  model.ngram_lo = ngram_lo;
  model.ngram_hi = ngram_hi;
  model.idf.resize(vocabulary.size());
  for (std::size_t j = 0; j < vocabulary.size(); ++j) {
    model.idf[j] =
        std::log((1.0 + double(n_docs)) / (1.0 + double(df[j]))) + 1.0;
  }
  model.vocabulary = std::move(vocabulary);
  return model;
}

SparseVector tfidf_transform(const TokenList& tokens, const TfidfModel& model) {
  std::map<std::uint32_t, double> counts;
  for (const auto& g : extract_ngrams(tokens, model.ngram_lo, model.ngram_hi)) {
    auto j = model.vocabulary.index_of(g);
    if (j >= 0) counts[static_cast<std::uint32_t>(j)] += 1.0;
  }
  SparseVector out;
  out.dim = static_cast<std::uint32_t>(model.vocabulary.size());
  out.indices.reserve(counts.size());
  out.values.reserve(counts.size());
  for (const auto& [j, tf] : counts) out.push_back(j, tf * model.idf[j]);
  const double norm = out.l2_norm();
  if (norm > 0.0) {
    for (double& v : out.values) v /= norm;
  }
  return out;
}

}  // namespace fnd
