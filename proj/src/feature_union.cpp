#include "fnd/feature_union.hpp"

#include <algorithm>

#include "fnd/errors.hpp"
#include "fnd/punctuation.hpp"
#include "fnd/readability.hpp"

namespace fnd {

const std::vector<std::string>& readability_feature_names() {
  static const std::vector<std::string> names = {"fre", "ari", "fkg", "cl"};
  return names;
}

void FeatureUnionConfig::validate(const LexiconDict& dict) const {
  if (!use_ngrams && !any_dense())
    throw Error("feature union enables no feature family");
  if (use_ngrams && !(1 <= ngram_lo && ngram_lo <= ngram_hi && ngram_hi <= 3))
    throw Error("n-gram range must satisfy 1 <= lo <= hi <= 3");
  const auto& known = readability_feature_names();
  for (const auto& name : readability) {
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw UnknownCategoryError(name);
  }
  for (const auto& name : lexicon) {
    if (dict.category_id(name) < 0) throw UnknownCategoryError(name);
  }
  const auto& punct = punctuation_category_names();
  for (const auto& name : punctuation) {
    if (std::find(punct.begin(), punct.end(), name) == punct.end())
      throw UnknownCategoryError(name);
  }
}

void DenseBlockScaler::fit(std::span<const std::vector<double>> rows) {
  min.clear();
  max.clear();
  if (rows.empty()) return;
  min = rows.front();
  max = rows.front();
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      min[j] = std::min(min[j], row[j]);
      max[j] = std::max(max[j], row[j]);
    }
  }
}

std::vector<double> DenseBlockScaler::transform(
    const std::vector<double>& row) const {
  if (row.size() != min.size())
    throw DimensionMismatchError(min.size(), row.size());
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    const double span = max[j] - min[j];
    double v = span > 0.0 ? (row[j] - min[j]) / span : 0.0;
    out[j] = std::clamp(v, 0.0, 1.0);
  }
  return out;
}

std::vector<double> FeatureUnion::dense_raw(std::string_view text,
                                            const Resources& resources) const {
  std::vector<double> row;
  const std::string ntext = normalize(text, config_.prep_for_dense);
  if (!config_.readability.empty()) {
    // a post can normalize to nothing (e.g. links only); report zeros
    ReadabilityScores scores;
    if (count_words(ntext) > 0) scores = readability_scores(ntext);
    for (const auto& name : config_.readability) {
      if (name == "fre") {
        row.push_back(scores.flesch_reading_ease);
      } else if (name == "ari") {
        row.push_back(scores.ari);
      } else if (name == "fkg") {
        row.push_back(scores.flesch_kincaid_grade);
      } else {
        row.push_back(scores.coleman_liau);
      }
    }
  }
  if (!config_.lexicon.empty()) {
    TokenList tokens = preprocess(text, config_.prep_for_dense,
                                  resources.stoplist, resources.lemmas);
    auto values = lexicon_features(tokens, resources.lexicon, config_.lexicon);
    row.insert(row.end(), values.begin(), values.end());
  }
  if (!config_.punctuation.empty()) {
    auto values = punctuation_features(ntext, config_.punctuation);
    row.insert(row.end(), values.begin(), values.end());
  }
  return row;
}

FeatureUnion FeatureUnion::fit(std::span<const LabeledPost> posts,
                               const FeatureUnionConfig& config,
                               const Resources& resources) {
  config.validate(resources.lexicon);
  FeatureUnion u;
  u.config_ = config;

  std::uint32_t ngram_dim = 0;
  if (config.use_ngrams) {
    std::vector<TokenList> docs;
    docs.reserve(posts.size());
    for (const auto& p : posts)
      docs.push_back(preprocess(p.text, config.prep_for_ngrams,
                                resources.stoplist, resources.lemmas));
    Vocabulary vocab =
        fit_vocabulary(docs, config.ngram_lo, config.ngram_hi, config.min_df);
    u.tfidf_ = tfidf_fit(docs, std::move(vocab), config.ngram_lo,
                         config.ngram_hi);
    ngram_dim = static_cast<std::uint32_t>(u.tfidf_->vocabulary.size());
  }

  std::size_t dense_dim = 0;
  if (config.any_dense()) {
    std::vector<std::vector<double>> rows;
    rows.reserve(posts.size());
    for (const auto& p : posts) rows.push_back(u.dense_raw(p.text, resources));
    u.scaler_.fit(rows);
    dense_dim = u.scaler_.min.size();
  }

  u.dim_ = ngram_dim + static_cast<std::uint32_t>(dense_dim);
  return u;
}

SparseVector FeatureUnion::transform(std::string_view text,
                                     const Resources& resources) const {
  if (!fitted()) throw NotFittedError();
  SparseVector out;
  out.dim = dim_;
  std::uint32_t base = 0;
  if (config_.use_ngrams) {
    TokenList tokens = preprocess(text, config_.prep_for_ngrams,
                                  resources.stoplist, resources.lemmas);
    SparseVector ngram_vec = tfidf_transform(tokens, *tfidf_);
    out.indices = std::move(ngram_vec.indices);
    out.values = std::move(ngram_vec.values);
    base = static_cast<std::uint32_t>(tfidf_->vocabulary.size());
  }
  if (config_.any_dense()) {
    auto scaled = scaler_.transform(dense_raw(text, resources));
    for (std::size_t j = 0; j < scaled.size(); ++j)
      out.push_back(base + static_cast<std::uint32_t>(j), scaled[j]);
  }
  return out;
}

FeatureUnion FeatureUnion::from_parts(FeatureUnionConfig config,
                                      std::optional<TfidfModel> tfidf,
                                      DenseBlockScaler scaler) {
  FeatureUnion u;
  u.config_ = std::move(config);
  u.tfidf_ = std::move(tfidf);
  u.scaler_ = std::move(scaler);
  std::uint32_t dim = 0;
  if (u.tfidf_) dim += static_cast<std::uint32_t>(u.tfidf_->vocabulary.size());
  dim += static_cast<std::uint32_t>(u.scaler_.min.size());
  u.dim_ = dim;
  return u;
}

}  // namespace fnd
