#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "fnd/models/forest.hpp"
#include "fnd/models/linear.hpp"
#include "fnd/models/mlp.hpp"
#include "fnd/models/naive_bayes.hpp"

namespace fnd {

enum class ModelKind { Svm, Lr, Nb, Rf, Mlp };

std::string_view to_string(ModelKind kind);
std::optional<ModelKind> parse_model_kind(std::string_view name);

using Classifier =
    std::variant<LinearClassifier, NBClassifier, MLPClassifier, RandomForest>;

using Hyperparams = std::map<std::string, double>;

// Keys accepted per model:
//   svm, lr: lambda, epochs
//   nb:      alpha
//   mlp:     hidden, learning_rate, epochs, batch
//   rf:      trees, depth (-1 = unlimited)
// Missing keys take these defaults; unknown keys throw.
Hyperparams default_hyperparams(ModelKind kind);
void validate_hyperparams(ModelKind kind, const Hyperparams& params);

Classifier train_classifier(ModelKind kind, const Hyperparams& params,
                            std::span<const SparseVector> X,
                            std::span<const Label> y, std::uint64_t seed);

double decision_value(const Classifier& model, const SparseVector& x);
Label predict(const Classifier& model, const SparseVector& x);

}  // namespace fnd
