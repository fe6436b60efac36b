#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "fnd/corpus.hpp"
#include "fnd/feature_union.hpp"
#include "fnd/metrics.hpp"
#include "fnd/models/classifier.hpp"

namespace fnd {

// Complete declarative description of one configuration: feature extraction
// (with its two preprocessing configs), model family and hyperparameters.
struct PipelineConfig {
  FeatureUnionConfig features;
  ModelKind model = ModelKind::Svm;
  Hyperparams hyperparams;
  std::uint64_t seed = 42;

  void validate(const LexiconDict& dict) const;
};

// Flat key=value;... form with a fixed field order; identical configs have
// identical canonical strings. Used for hashing, tie-breaking and reports.
std::string canonical_string(const PipelineConfig& config);

nlohmann::ordered_json to_json(const PipelineConfig& config);
PipelineConfig pipeline_config_from_json(const nlohmann::json& j);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

struct TrainedPipeline {
  PipelineConfig config;
  FeatureUnion features;
  Classifier model;
  std::shared_ptr<const Resources> resources;

  Label predict_text(std::string_view text) const;
  double decision_text(std::string_view text) const;
};

TrainedPipeline train_pipeline(const DatasetSplit& train,
                               const PipelineConfig& config,
                               std::shared_ptr<const Resources> resources);

std::vector<Label> predict_split(const TrainedPipeline& pipeline,
                                 const DatasetSplit& split);

// Predicts the split and scores it against its gold labels.
EvalReport evaluate_pipeline(const TrainedPipeline& pipeline,
                             const DatasetSplit& split);

}  // namespace fnd
