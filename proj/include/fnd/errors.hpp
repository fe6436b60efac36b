#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fnd {

// Base class for all recoverable errors raised by the library. The CLI maps
// these to exit code 2 (bad input / bad usage); anything else is a bug.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

// ------------------------------------------------------------- dataset
struct MissingColumnError : Error {
  explicit MissingColumnError(const std::string& column)
      : Error("missing required column: " + column) {}
};

struct DuplicateIdError : Error {
  DuplicateIdError(const std::string& id, std::size_t row)
      : Error("duplicate id \"" + id + "\" at row " + std::to_string(row)),
        row(row) {}
  std::size_t row;
};

struct UnknownLabelError : Error {
  UnknownLabelError(const std::string& value, std::size_t row)
      : Error("unknown label \"" + value + "\" at row " + std::to_string(row)),
        row(row) {}
  std::size_t row;
};

struct EmptyTextError : Error {
  explicit EmptyTextError(std::size_t row)
      : Error("empty text at row " + std::to_string(row)), row(row) {}
  std::size_t row;
};

struct UnlabeledSplitError : Error {
  explicit UnlabeledSplitError(const std::string& what =
                                   "operation requires a labeled split")
      : Error(what) {}
};

// ------------------------------------------------------------- features
struct EmptyVocabularyError : Error {
  EmptyVocabularyError() : Error("vocabulary is empty after pruning") {}
};

struct DimensionMismatchError : Error {
  DimensionMismatchError(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

struct NoWordsError : Error {
  NoWordsError() : Error("text contains no words") {}
};

struct UnknownCategoryError : Error {
  explicit UnknownCategoryError(const std::string& name)
      : Error("unknown category: " + name) {}
};

struct NotFittedError : Error {
  NotFittedError() : Error("transform called before fit") {}
};

// ------------------------------------------------------------- models
struct SingleClassError : Error {
  SingleClassError() : Error("training data contains a single class") {}
};

struct NegativeFeatureError : Error {
  NegativeFeatureError()
      : Error("naive bayes requires non-negative feature values") {}
};

struct NonFiniteLossError : Error {
  NonFiniteLossError() : Error("training loss diverged (non-finite)") {}
};

// ------------------------------------------------------------- evaluation
struct LengthMismatchError : Error {
  LengthMismatchError(std::size_t a, std::size_t b)
      : Error("label vectors differ in length (" + std::to_string(a) +
              " vs " + std::to_string(b) + ") or are empty") {}
};

struct EmptyMatrixError : Error {
  EmptyMatrixError() : Error("confusion matrix has no entries") {}
};

// ------------------------------------------------------------- search
struct EmptyAxisError : Error {
  explicit EmptyAxisError(const std::string& axis)
      : Error("grid axis \"" + axis + "\" has no values") {}
};

struct VersionMismatchError : Error {
  VersionMismatchError(unsigned got, unsigned expected)
      : Error("model file version " + std::to_string(got) +
              " not supported (expected " + std::to_string(expected) + ")") {}
};

struct CorruptFileError : Error {
  explicit CorruptFileError(const std::string& what)
      : Error("corrupt model file: " + what) {}
};

}  // namespace fnd
