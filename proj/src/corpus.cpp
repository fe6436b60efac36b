#include "fnd/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_set>

#include "fnd/csv.hpp"
#include "fnd/errors.hpp"
#include "fnd/textprep.hpp"

namespace fnd {

std::optional<Label> parse_label(std::string_view s) {
  std::string lower(s);
  for (char& c : lower) c = static_cast<char>(std::tolower((unsigned char)c));
  if (lower == "real") return Label::Real;
  if (lower == "fake") return Label::Fake;
  return std::nullopt;
}

bool DatasetSplit::labeled() const {
  return std::all_of(posts.begin(), posts.end(),
                     [](const LabeledPost& p) { return p.label.has_value(); });
}

FileFormat detect_format(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower((unsigned char)c));
  return (ext == ".tsv" || ext == ".tab") ? FileFormat::Tsv : FileFormat::Csv;
}

namespace {

constexpr char delim_of(FileFormat f) {
  return f == FileFormat::Tsv ? '\t' : ',';
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace((unsigned char)s[b])) ++b;
  while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t find_column(const csv::Row& header, std::string_view name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    std::string h = trim(header[i]);
    for (char& c : h) c = static_cast<char>(std::tolower((unsigned char)c));
    if (h == name) return i;
  }
  throw MissingColumnError(std::string(name));
}

// Unicode scalar values = bytes that are not UTF-8 continuation bytes.
std::size_t count_scalars(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::vector<std::string> stats_tokens(const std::string& text,
                                      StatsTokenizer tok) {
  switch (tok) {
    case StatsTokenizer::Tweet:
      return tokenize(text, TokenizerKind::Tweet);
    case StatsTokenizer::WordPunct:
      return tokenize(text, TokenizerKind::WordPunct);
    case StatsTokenizer::Whitespace:
    default: {
      std::vector<std::string> out;
      std::size_t i = 0;
      while (i < text.size()) {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
        std::size_t b = i;
        while (i < text.size() && !std::isspace((unsigned char)text[i])) ++i;
        if (i > b) out.push_back(text.substr(b, i - b));
      }
      return out;
    }
  }
}

CorpusStats stats_of(const std::vector<const LabeledPost*>& posts,
                     StatsTokenizer tok,
                     std::unordered_set<std::string>* vocab_out) {
  CorpusStats st;
  st.posts = posts.size();
  if (posts.empty()) return st;
  std::unordered_set<std::string> vocab;
  std::size_t total_words = 0, total_chars = 0;
  for (const LabeledPost* p : posts) {
    auto toks = stats_tokens(p->text, tok);
    total_words += toks.size();
    total_chars += count_scalars(p->text);
    for (auto& t : toks) vocab.insert(std::move(t));
    if (p->label) ++st.per_label_counts[*p->label];
  }
  st.unique_words = vocab.size();
  st.avg_words_per_post = double(total_words) / double(posts.size());
  st.avg_chars_per_post = double(total_chars) / double(posts.size());
  if (vocab_out) *vocab_out = std::move(vocab);
  return st;
}

}  // namespace

DatasetSplit load_dataset(const std::filesystem::path& path, FileFormat format,
                          bool has_labels, SplitName name) {
  auto rows = csv::read_file(path, delim_of(format));
  if (rows.empty()) throw MissingColumnError("id (file has no header row)");

  const csv::Row& header = rows.front();
  std::size_t id_col = find_column(header, "id");
  std::size_t text_col = find_column(header, "tweet");
  std::optional<std::size_t> label_col;
  if (has_labels) label_col = find_column(header, "label");

  DatasetSplit split;
  split.name = name;
  split.posts.reserve(rows.size() - 1);
  std::unordered_set<std::string> seen_ids;

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    const std::size_t row_no = r + 1;  // 1-based, header included
    auto cell = [&](std::size_t col) -> std::string {
      return col < row.size() ? row[col] : std::string();
    };

    LabeledPost post;
    post.id = trim(cell(id_col));
    post.text = trim(cell(text_col));
    if (post.text.empty()) throw EmptyTextError(row_no);
    if (!seen_ids.insert(post.id).second)
      throw DuplicateIdError(post.id, row_no);

    if (has_labels) {
      std::string raw = trim(cell(*label_col));
      if (!raw.empty()) {
        auto label = parse_label(raw);
        if (!label) throw UnknownLabelError(raw, row_no);
        post.label = *label;
      }
    }
    split.posts.push_back(std::move(post));
  }
  return split;
}

void save_dataset(const DatasetSplit& split, const std::filesystem::path& path,
                  FileFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path.string());
  const char d = delim_of(format);
  csv::write_row(out, std::vector<std::string>{"id", "tweet", "label"}, d);
  for (const LabeledPost& p : split.posts) {
    std::string label = p.label ? std::string(to_string(*p.label)) : "";
    csv::write_row(out, std::vector<std::string>{p.id, p.text, label}, d);
  }
}

std::map<Label, ClassShare> class_distribution(const DatasetSplit& split) {
  if (split.posts.empty())
    throw UnlabeledSplitError("class distribution of an empty split");
  std::map<Label, ClassShare> out;
  for (const LabeledPost& p : split.posts) {
    if (!p.label) throw UnlabeledSplitError();
    ++out[*p.label].count;
  }
  for (auto& [label, share] : out)
    share.fraction = double(share.count) / double(split.posts.size());
  return out;
}

CorpusStats corpus_stats(const DatasetSplit& split, StatsTokenizer tokenizer) {
  std::vector<const LabeledPost*> ptrs;
  ptrs.reserve(split.posts.size());
  for (const auto& p : split.posts) ptrs.push_back(&p);
  return stats_of(ptrs, tokenizer, nullptr);
}

PerLabelStats corpus_stats_by_label(const DatasetSplit& split,
                                    StatsTokenizer tokenizer) {
  PerLabelStats out;
  std::vector<const LabeledPost*> all, fake, real;
  for (const auto& p : split.posts) {
    all.push_back(&p);
    if (p.label == Label::Fake) fake.push_back(&p);
    if (p.label == Label::Real) real.push_back(&p);
  }
  std::unordered_set<std::string> fake_vocab, real_vocab;
  out.combined = stats_of(all, tokenizer, nullptr);
  out.per_label[Label::Fake] = stats_of(fake, tokenizer, &fake_vocab);
  out.per_label[Label::Real] = stats_of(real, tokenizer, &real_vocab);

  const auto& small = fake_vocab.size() <= real_vocab.size() ? fake_vocab
                                                             : real_vocab;
  const auto& large = fake_vocab.size() <= real_vocab.size() ? real_vocab
                                                             : fake_vocab;
  std::size_t shared = 0;
  for (const auto& w : small)
    if (large.count(w)) ++shared;
  out.per_label[Label::Fake].shared_vocab_with_other_class = shared;
  out.per_label[Label::Real].shared_vocab_with_other_class = shared;
  return out;
}

void print_stats_table(std::ostream& os, const PerLabelStats& stats) {
  auto row = [&](const std::string& name, auto get) {
    os << std::left << std::setw(22) << name;
    for (Label l : kLabels) {
      auto it = stats.per_label.find(l);
      os << std::right << std::setw(12)
         << (it != stats.per_label.end() ? get(it->second) : 0.0);
    }
    os << std::right << std::setw(12) << get(stats.combined) << "\n";
  };
  os << std::left << std::setw(22) << "Attribute" << std::right
     << std::setw(12) << "Fake" << std::setw(12) << "Real" << std::setw(12)
     << "Combined"
     << "\n";
  os << std::fixed << std::setprecision(2);
  row("Posts", [](const CorpusStats& s) { return double(s.posts); });
  row("Unique words",
      [](const CorpusStats& s) { return double(s.unique_words); });
  row("Avg. words per post",
      [](const CorpusStats& s) { return s.avg_words_per_post; });
  row("Avg. chars per post",
      [](const CorpusStats& s) { return s.avg_chars_per_post; });
  const auto& fake = stats.per_label.find(Label::Fake);
  if (fake != stats.per_label.end() &&
      fake->second.shared_vocab_with_other_class) {
    os << std::left << std::setw(22) << "Shared vocabulary"
       << std::right << std::setw(12)
       << *fake->second.shared_vocab_with_other_class << "\n";
  }
  os.unsetf(std::ios::fixed);
}

void print_stats_kv(std::ostream& os, const PerLabelStats& stats) {
  auto emit = [&](const std::string& prefix, const CorpusStats& s) {
    os << prefix << ".posts=" << s.posts << "\n";
    os << prefix << ".unique_words=" << s.unique_words << "\n";
    os << prefix << ".avg_words_per_post=" << s.avg_words_per_post << "\n";
    os << prefix << ".avg_chars_per_post=" << s.avg_chars_per_post << "\n";
    if (s.shared_vocab_with_other_class)
      os << prefix
         << ".shared_vocab=" << *s.shared_vocab_with_other_class << "\n";
  };
  for (Label l : kLabels) {
    auto it = stats.per_label.find(l);
    if (it != stats.per_label.end())
      emit(std::string(to_string(l)), it->second);
  }
  emit("combined", stats.combined);
}

}  // namespace fnd
