#include "fnd/pipeline.hpp"

#include <charconv>
#include <fstream>

#include "fnd/errors.hpp"

namespace fnd {

namespace {

std::string_view to_string(StemOrLemma s) {
  switch (s) {
    case StemOrLemma::Stem: return "stem";
    case StemOrLemma::Lemmatize: return "lemmatize";
    case StemOrLemma::None: break;
  }
  return "none";
}

StemOrLemma stem_or_lemma_from(const std::string& s) {
  if (s == "stem") return StemOrLemma::Stem;
  if (s == "lemmatize") return StemOrLemma::Lemmatize;
  if (s == "none") return StemOrLemma::None;
  throw Error("unknown stem_or_lemma value: " + s);
}

std::string_view to_string(TokenizerKind k) {
  return k == TokenizerKind::Tweet ? "tweet" : "wordpunct";
}

TokenizerKind tokenizer_from(const std::string& s) {
  if (s == "tweet") return TokenizerKind::Tweet;
  if (s == "wordpunct") return TokenizerKind::WordPunct;
  throw Error("unknown tokenizer: " + s);
}

// Shortest round-trip representation keeps canonical strings exact.
std::string format_number(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

void append_prep(std::string& out, std::string_view key,
                 const PrepConfig& prep) {
  out += key;
  out += "={stop=";
  out += prep.remove_stopwords ? '1' : '0';
  out += ",links=";
  out += prep.remove_links ? '1' : '0';
  out += ",replies=";
  out += prep.remove_replies ? '1' : '0';
  out += ",norm=";
  out += to_string(prep.stem_or_lemma);
  out += ",tok=";
  out += to_string(prep.tokenizer);
  out += '}';
}

void append_names(std::string& out, std::string_view key,
                  const std::vector<std::string>& names) {
  out += key;
  out += '=';
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += '|';
    out += names[i];
  }
}

nlohmann::ordered_json prep_to_json(const PrepConfig& prep) {
  return {{"remove_stopwords", prep.remove_stopwords},
          {"remove_links", prep.remove_links},
          {"remove_replies", prep.remove_replies},
          {"stem_or_lemma", std::string(to_string(prep.stem_or_lemma))},
          {"tokenizer", std::string(to_string(prep.tokenizer))}};
}

PrepConfig prep_from_json(const nlohmann::json& j) {
  PrepConfig prep;
  prep.remove_stopwords = j.value("remove_stopwords", false);
  prep.remove_links = j.value("remove_links", false);
  prep.remove_replies = j.value("remove_replies", false);
  prep.stem_or_lemma =
      stem_or_lemma_from(j.value("stem_or_lemma", std::string("none")));
  prep.tokenizer = tokenizer_from(j.value("tokenizer", std::string("tweet")));
  return prep;
}

}  // namespace

void PipelineConfig::validate(const LexiconDict& dict) const {
  features.validate(dict);
  validate_hyperparams(model, hyperparams);
}

std::string canonical_string(const PipelineConfig& config) {
  std::string out;
  out += "model=";
  out += to_string(config.model);
  for (const auto& [key, value] : config.hyperparams) {
    out += ';';
    out += key;
    out += '=';
    out += format_number(value);
  }
  out += ";ngrams=";
  if (config.features.use_ngrams) {
    out += format_number(config.features.ngram_lo);
    out += '-';
    out += format_number(config.features.ngram_hi);
    out += ";min_df=";
    out += format_number(double(config.features.min_df));
    out += ';';
    append_prep(out, "prep_ngrams", config.features.prep_for_ngrams);
  } else {
    out += "off";
  }
  out += ';';
  append_names(out, "readability", config.features.readability);
  out += ';';
  append_names(out, "lexicon", config.features.lexicon);
  out += ';';
  append_names(out, "punctuation", config.features.punctuation);
  if (config.features.any_dense()) {
    out += ';';
    append_prep(out, "prep_dense", config.features.prep_for_dense);
  }
  return out;
}

nlohmann::ordered_json to_json(const PipelineConfig& config) {
  nlohmann::ordered_json j;
  j["model"] = std::string(to_string(config.model));
  j["hyperparams"] = config.hyperparams;
  j["seed"] = config.seed;
  j["features"] = {
      {"ngrams",
       {{"enabled", config.features.use_ngrams},
        {"lo", config.features.ngram_lo},
        {"hi", config.features.ngram_hi},
        {"min_df", config.features.min_df},
        {"prep", prep_to_json(config.features.prep_for_ngrams)}}},
      {"readability", config.features.readability},
      {"lexicon", config.features.lexicon},
      {"punctuation", config.features.punctuation},
      {"dense_prep", prep_to_json(config.features.prep_for_dense)}};
  return j;
}

PipelineConfig pipeline_config_from_json(const nlohmann::json& j) {
  PipelineConfig config;
  const std::string model = j.value("model", std::string("svm"));
  auto kind = parse_model_kind(model);
  if (!kind) throw Error("unknown model kind: " + model);
  config.model = *kind;
  if (j.contains("hyperparams")) {
    for (const auto& [key, value] : j.at("hyperparams").items()) {
      if (!value.is_number())
        throw Error("hyperparameter \"" + key + "\" must be numeric");
      config.hyperparams[key] = value.get<double>();
    }
  }
  config.seed = j.value("seed", std::uint64_t{42});
  if (j.contains("features")) {
    const auto& f = j.at("features");
    if (f.contains("ngrams")) {
      const auto& n = f.at("ngrams");
      config.features.use_ngrams = n.value("enabled", true);
      config.features.ngram_lo = n.value("lo", 1);
      config.features.ngram_hi = n.value("hi", 2);
      config.features.min_df = n.value("min_df", std::size_t{1});
      if (n.contains("prep"))
        config.features.prep_for_ngrams = prep_from_json(n.at("prep"));
    }
    config.features.readability =
        f.value("readability", std::vector<std::string>{});
    config.features.lexicon = f.value("lexicon", std::vector<std::string>{});
    config.features.punctuation =
        f.value("punctuation", std::vector<std::string>{});
    if (f.contains("dense_prep"))
      config.features.prep_for_dense = prep_from_json(f.at("dense_prep"));
  }
  return config;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid JSON in " + path.string() + ": " + e.what());
  }
  return pipeline_config_from_json(j);
}

Label TrainedPipeline::predict_text(std::string_view text) const {
  return predict(model, features.transform(text, *resources));
}

double TrainedPipeline::decision_text(std::string_view text) const {
  return decision_value(model, features.transform(text, *resources));
}

TrainedPipeline train_pipeline(const DatasetSplit& train,
                               const PipelineConfig& config,
                               std::shared_ptr<const Resources> resources) {
  if (!train.labeled() || train.posts.empty()) throw UnlabeledSplitError();
  config.validate(resources->lexicon);

  TrainedPipeline tp;
  tp.config = config;
  tp.resources = std::move(resources);
  tp.features = FeatureUnion::fit(train.posts, config.features, *tp.resources);

  std::vector<SparseVector> X;
  std::vector<Label> y;
  X.reserve(train.posts.size());
  y.reserve(train.posts.size());
  for (const auto& post : train.posts) {
    X.push_back(tp.features.transform(post.text, *tp.resources));
    y.push_back(*post.label);
  }
  tp.model = train_classifier(config.model, config.hyperparams, X, y,
                              config.seed);
  return tp;
}

std::vector<Label> predict_split(const TrainedPipeline& pipeline,
                                 const DatasetSplit& split) {
  std::vector<Label> out;
  out.reserve(split.posts.size());
  for (const auto& post : split.posts)
    out.push_back(pipeline.predict_text(post.text));
  return out;
}

EvalReport evaluate_pipeline(const TrainedPipeline& pipeline,
                             const DatasetSplit& split) {
  if (!split.labeled() || split.posts.empty()) throw UnlabeledSplitError();
  std::vector<Label> y_true;
  y_true.reserve(split.posts.size());
  for (const auto& post : split.posts) y_true.push_back(*post.label);
  std::vector<Label> y_pred = predict_split(pipeline, split);
  return weighted_metrics(confusion_matrix(y_true, y_pred));
}

}  // namespace fnd
