#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fnd/corpus.hpp"
#include "fnd/resources.hpp"
#include "fnd/sparse.hpp"
#include "fnd/tfidf.hpp"
#include "fnd/textprep.hpp"

namespace fnd {

// Valid readability feature names, in canonical block order.
const std::vector<std::string>& readability_feature_names();  // fre ari fkg cl

// Which feature families are extracted and how their inputs are
// preprocessed. N-grams and the dense families may use different
// preprocessing, so two PrepConfigs are carried.
struct FeatureUnionConfig {
  bool use_ngrams = true;
  int ngram_lo = 1;
  int ngram_hi = 2;
  std::size_t min_df = 1;
  std::vector<std::string> readability;   // subset of {"fre","ari","fkg","cl"}
  std::vector<std::string> lexicon;       // lexicon category names
  std::vector<std::string> punctuation;   // punctuation category names
  PrepConfig prep_for_ngrams;
  PrepConfig prep_for_dense;

  bool any_dense() const {
    return !readability.empty() || !lexicon.empty() || !punctuation.empty();
  }
  // Throws on invalid combinations (no family enabled, bad names, bad
  // n-gram range).
  void validate(const LexiconDict& dict) const;
};

// Per-feature min/max scaling of the dense block to [0,1], with clamping
// for out-of-range values at transform time. A constant feature maps to 0.
struct DenseBlockScaler {
  std::vector<double> min;
  std::vector<double> max;

  void fit(std::span<const std::vector<double>> rows);
  std::vector<double> transform(const std::vector<double>& row) const;
};

// Fitted feature extractor: [TF-IDF block | scaled dense block].
class FeatureUnion {
 public:
  FeatureUnion() = default;

  static FeatureUnion fit(std::span<const LabeledPost> posts,
                          const FeatureUnionConfig& config,
                          const Resources& resources);

  SparseVector transform(std::string_view text,
                         const Resources& resources) const;

  std::uint32_t dimension() const { return dim_; }
  bool fitted() const { return dim_ > 0; }
  const FeatureUnionConfig& config() const { return config_; }
  const TfidfModel* tfidf() const {
    return tfidf_ ? &*tfidf_ : nullptr;
  }
  const DenseBlockScaler& scaler() const { return scaler_; }

  // Used by model persistence.
  static FeatureUnion from_parts(FeatureUnionConfig config,
                                 std::optional<TfidfModel> tfidf,
                                 DenseBlockScaler scaler);

 private:
  std::vector<double> dense_raw(std::string_view text,
                                const Resources& resources) const;

  FeatureUnionConfig config_;
  std::optional<TfidfModel> tfidf_;
  DenseBlockScaler scaler_;
  std::uint32_t dim_ = 0;
};

}  // namespace fnd
