#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fnd/vocabulary.hpp"

namespace fnd {

// Category lexicon in an open dictionary format: a '%'-delimited header of
// "id<TAB>name" lines followed by entry lines "pattern<TAB>id[<TAB>id...]".
// A pattern is a literal word or a prefix ending in '*'.
class LexiconDict {
 public:
  struct Entry {
    std::string pattern;  // without the trailing '*'
    bool prefix = false;
    std::vector<int> category_ids;
  };

  LexiconDict() = default;
  LexiconDict(std::map<int, std::string> categories,
              std::vector<Entry> entries);

  static LexiconDict parse(std::istream& in);
  static LexiconDict load(const std::filesystem::path& path);

  const std::map<int, std::string>& categories() const { return categories_; }
  const std::vector<Entry>& entries() const { return entries_; }
  // -1 when no category has this name.
  int category_id(const std::string& name) const;

  // Ids of all categories whose patterns match the token (literal match or
  // prefix match); a token may belong to several categories.
  std::vector<int> match(const std::string& token) const;

 private:
  void build_index();

  std::map<int, std::string> categories_;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::vector<int>> literal_;
  // prefixes bucketed by first character
  std::unordered_map<char, std::vector<const Entry*>> prefix_buckets_;
};

// Percentage of tokens carrying each selected category, in the order given:
// 100 * matching / max(1, |tokens|). Throws UnknownCategory.
std::vector<double> lexicon_features(const TokenList& tokens,
                                     const LexiconDict& dict,
                                     std::span<const std::string> selected);

}  // namespace fnd
