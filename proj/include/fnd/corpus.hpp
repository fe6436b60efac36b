#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fnd/label.hpp"

namespace fnd {

struct LabeledPost {
  std::string id;
  std::string text;                 // trimmed, non-empty
  std::optional<Label> label;       // absent for unlabeled test rows
};

enum class SplitName { Train, Validation, Test };

struct DatasetSplit {
  SplitName name = SplitName::Train;
  std::vector<LabeledPost> posts;   // file order; predictions align by id

  bool labeled() const;
};

enum class FileFormat { Csv, Tsv };

// Picks Tsv for .tsv/.tab extensions, Csv otherwise.
FileFormat detect_format(const std::filesystem::path& path);

// Loads a split from a delimited file with header columns id, tweet and
// (when has_labels) label. Throws MissingColumn/DuplicateId/UnknownLabel/
// EmptyText with the offending row number (1-based, header = row 1).
DatasetSplit load_dataset(const std::filesystem::path& path, FileFormat format,
                          bool has_labels,
                          SplitName name = SplitName::Train);

void save_dataset(const DatasetSplit& split, const std::filesystem::path& path,
                  FileFormat format);

struct ClassShare {
  std::size_t count = 0;
  double fraction = 0.0;
};

// Requires every post to carry a label; fractions sum to 1.
std::map<Label, ClassShare> class_distribution(const DatasetSplit& split);

// Tokenization used for corpus statistics. Whitespace is the default for
// reporting; the two model tokenizers are also available for comparison.
enum class StatsTokenizer { Whitespace, Tweet, WordPunct };

struct CorpusStats {
  std::size_t posts = 0;
  std::size_t unique_words = 0;
  double avg_words_per_post = 0.0;
  double avg_chars_per_post = 0.0;  // unicode scalar values of trimmed text
  std::optional<std::size_t> shared_vocab_with_other_class;
  std::map<Label, std::size_t> per_label_counts;
};

CorpusStats corpus_stats(const DatasetSplit& split, StatsTokenizer tokenizer);

struct PerLabelStats {
  CorpusStats combined;
  std::map<Label, CorpusStats> per_label;  // shared_vocab filled in
};

PerLabelStats corpus_stats_by_label(const DatasetSplit& split,
                                    StatsTokenizer tokenizer);

// Human-readable table mirroring the Fake/Real/Combined layout.
void print_stats_table(std::ostream& os, const PerLabelStats& stats);
// Machine-readable key=value lines.
void print_stats_kv(std::ostream& os, const PerLabelStats& stats);

}  // namespace fnd
