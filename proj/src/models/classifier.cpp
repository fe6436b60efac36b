#include "fnd/models/classifier.hpp"

#include "fnd/errors.hpp"

namespace fnd {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Svm: return "svm";
    case ModelKind::Lr: return "lr";
    case ModelKind::Nb: return "nb";
    case ModelKind::Rf: return "rf";
    case ModelKind::Mlp: return "mlp";
  }
  return "svm";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) {
  if (name == "svm") return ModelKind::Svm;
  if (name == "lr") return ModelKind::Lr;
  if (name == "nb") return ModelKind::Nb;
  if (name == "rf") return ModelKind::Rf;
  if (name == "mlp") return ModelKind::Mlp;
  return std::nullopt;
}

Hyperparams default_hyperparams(ModelKind kind) {
  switch (kind) {
    case ModelKind::Svm:
    case ModelKind::Lr:
      return {{"lambda", 1e-4}, {"epochs", 5}};
    case ModelKind::Nb:
      return {{"alpha", 1.0}};
    case ModelKind::Mlp:
      return {{"hidden", 64},
              {"learning_rate", 0.1},
              {"epochs", 10},
              {"batch", 32}};
    case ModelKind::Rf:
      return {{"trees", 100}, {"depth", -1}};
  }
  return {};
}

void validate_hyperparams(ModelKind kind, const Hyperparams& params) {
  const Hyperparams allowed = default_hyperparams(kind);
  for (const auto& [key, value] : params) {
    if (!allowed.count(key))
      throw Error("hyperparameter \"" + key + "\" not valid for model \"" +
                  std::string(to_string(kind)) + "\"");
  }
}

namespace {

double param(const Hyperparams& params, const Hyperparams& defaults,
             const std::string& key) {
  if (auto it = params.find(key); it != params.end()) return it->second;
  return defaults.at(key);
}

}  // namespace

Classifier train_classifier(ModelKind kind, const Hyperparams& params,
                            std::span<const SparseVector> X,
                            std::span<const Label> y, std::uint64_t seed) {
  validate_hyperparams(kind, params);
  const Hyperparams defaults = default_hyperparams(kind);
  auto get = [&](const std::string& key) { return param(params, defaults, key); };

  switch (kind) {
    case ModelKind::Svm:
      return train_linear(X, y, LossKind::Hinge, get("lambda"),
                          static_cast<int>(get("epochs")), seed);
    case ModelKind::Lr:
      return train_linear(X, y, LossKind::Logistic, get("lambda"),
                          static_cast<int>(get("epochs")), seed);
    case ModelKind::Nb:
      return train_nb(X, y, get("alpha"));
    case ModelKind::Mlp:
      return train_mlp(X, y, static_cast<int>(get("hidden")),
                       get("learning_rate"), static_cast<int>(get("epochs")),
                       static_cast<int>(get("batch")), seed);
    case ModelKind::Rf:
      return train_forest(X, y, static_cast<int>(get("trees")),
                          static_cast<int>(get("depth")), seed);
  }
  throw Error("unknown model kind");
}

double decision_value(const Classifier& model, const SparseVector& x) {
  return std::visit([&](const auto& m) { return m.decision_value(x); }, model);
}

Label predict(const Classifier& model, const SparseVector& x) {
  return std::visit([&](const auto& m) { return m.predict(x); }, model);
}

}  // namespace fnd
