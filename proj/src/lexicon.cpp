#include "fnd/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "fnd/errors.hpp"

namespace fnd {

LexiconDict::LexiconDict(std::map<int, std::string> categories,
                         std::vector<Entry> entries)
    : categories_(std::move(categories)), entries_(std::move(entries)) {
  for (const Entry& e : entries_) {
    for (int id : e.category_ids) {
      if (!categories_.count(id))
        throw Error("lexicon entry \"" + e.pattern +
                    "\" references unknown category id " + std::to_string(id));
    }
  }
  build_index();
}

void LexiconDict::build_index() {
  literal_.clear();
  prefix_buckets_.clear();
  for (const Entry& e : entries_) {
    if (e.prefix) {
      if (!e.pattern.empty())
        prefix_buckets_[e.pattern[0]].push_back(&e);
    } else {
      auto& ids = literal_[e.pattern];
      ids.insert(ids.end(), e.category_ids.begin(), e.category_ids.end());
    }
  }
}

LexiconDict LexiconDict::parse(std::istream& in) {
  std::map<int, std::string> categories;
  std::vector<Entry> entries;
  std::string line;
  int percent_seen = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '%') {
      ++percent_seen;
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (percent_seen == 1) {
      if (fields.size() < 2)
        throw Error("malformed lexicon category line: " + line);
      categories[std::stoi(fields[0])] = fields[1];
    } else {
      if (fields.size() < 2)
        throw Error("malformed lexicon entry line: " + line);
      Entry e;
      e.pattern = fields[0];
      if (e.pattern.find('*') != std::string::npos) {
        if (e.pattern.back() != '*' ||
            e.pattern.find('*') != e.pattern.size() - 1)
          throw Error("'*' is only allowed as the final character: " +
                      e.pattern);
        e.pattern.pop_back();
        e.prefix = true;
      }
      for (std::size_t i = 1; i < fields.size(); ++i) {
        if (!fields[i].empty()) e.category_ids.push_back(std::stoi(fields[i]));
      }
      entries.push_back(std::move(e));
    }
  }
  return LexiconDict(std::move(categories), std::move(entries));
}

LexiconDict LexiconDict::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon: " + path.string());
  return parse(in);
}

int LexiconDict::category_id(const std::string& name) const {
  for (const auto& [id, n] : categories_) {
    if (n == name) return id;
  }
  return -1;
}

std::vector<int> LexiconDict::match(const std::string& token) const {
  std::set<int> ids;
  if (auto it = literal_.find(token); it != literal_.end())
    ids.insert(it->second.begin(), it->second.end());
  if (!token.empty()) {
    if (auto it = prefix_buckets_.find(token[0]);
        it != prefix_buckets_.end()) {
      for (const Entry* e : it->second) {
        if (token.size() >= e->pattern.size() &&
            token.compare(0, e->pattern.size(), e->pattern) == 0) {
          ids.insert(e->category_ids.begin(), e->category_ids.end());
        }
      }
    }
  }
  return std::vector<int>(ids.begin(), ids.end());
}

std::vector<double> lexicon_features(const TokenList& tokens,
                                     const LexiconDict& dict,
                                     std::span<const std::string> selected) {
  std::vector<int> wanted;
  wanted.reserve(selected.size());
  for (const auto& name : selected) {
    int id = dict.category_id(name);
    if (id < 0) throw UnknownCategoryError(name);
    wanted.push_back(id);
  }
  std::vector<std::size_t> hits(wanted.size(), 0);
  for (const auto& token : tokens) {
    auto ids = dict.match(token);
    if (ids.empty()) continue;
    for (std::size_t k = 0; k < wanted.size(); ++k) {
      if (std::binary_search(ids.begin(), ids.end(), wanted[k])) ++hits[k];
    }
  }
  const double denom = std::max<std::size_t>(1, tokens.size());
  std::vector<double> out(wanted.size());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = 100.0 * double(hits[k]) / denom;
  return out;
}

}  // namespace fnd
